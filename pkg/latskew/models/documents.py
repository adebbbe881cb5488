"""JSON documents written by the harness. Field order is the output order."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from latskew import constants as const
from latskew.typedefs import SampleRow


__all__ = [
    "Document",
    "EnumerateDocument",
    "WeylItem",
    "HistogramItem",
    "CountItem",
    "IntervalItem",
    "StatsDocument",
    "WeylDocument",
    "OrbitCountItem",
    "OrbitCountDocument",
    "LaplacianItem",
    "SeriesDocument"
]


class Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(const.SCHEMA_VERSION, alias="schema")

    def dump(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


class EnumerateDocument(Document):
    n: int
    predicted: float
    samples: list[SampleRow]


class WeylItem(BaseModel):
    m: int
    re: float
    im: float
    normalized: float


class HistogramItem(BaseModel):
    bins: int
    counts: list[int]
    chi_square: float


class CountItem(BaseModel):
    count: int
    predicted: float
    relative_error: float


class IntervalItem(BaseModel):
    alpha: float
    beta: float
    fraction: float


class StatsDocument(Document):
    n: int
    discrepancy_sk: float
    discrepancy_rho: float
    weyl: list[WeylItem]
    histogram: HistogramItem
    count_prediction: Optional[CountItem] = None
    discrepancy_abs_rho: Optional[float] = None
    interval_rho: Optional[IntervalItem] = None


class WeylDocument(Document):
    n: int
    weyl: list[WeylItem]


class OrbitCountItem(BaseModel):
    epsilon: float
    count: int
    scaled: float


class OrbitCountDocument(Document):
    limit: float = const.ORBIT_SCALING_LIMIT
    rows: list[OrbitCountItem]


class LaplacianItem(BaseModel):
    lhs: tuple[float, float]
    rhs: tuple[float, float]
    rel_err: float
    h: float
    estimate: float


class SeriesDocument(Document):
    m: int
    s: tuple[float, float]
    trunc: float
    value: tuple[float, float]
    tail_bound: float
    terms: int
    reference: Optional[float] = None
    laplacian_check: Optional[LaplacianItem] = None
