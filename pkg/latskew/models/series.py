from dataclasses import dataclass
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


__all__ = ["SeriesPoint", "LaplacianCheck"]


class SeriesPoint(BaseModel):
    """Partial sum of V_m(z, s) over cosets with |v| <= trunc."""
    model_config = ConfigDict(frozen=True)

    m: int
    sigma: float = Field(gt=1)
    t: float = 0.0
    trunc: float = Field(gt=0)
    value: complex
    tail_bound: float
    terms: int = 0

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass(frozen=True)
class LaplacianCheck:
    lhs: complex
    rhs: complex
    rel_err: float
    h: float
    estimate: float  # |stencil(h) - stencil(h/2)| scaled, Richardson style
    reenumerate: bool = True
    reference: Optional[float] = None  # rel_err at h/2
