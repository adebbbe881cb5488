from fractions import Fraction
from typing import Union

from typing_extensions import TypedDict


__all__ = ["Real", "SampleRow", "WeylEntry"]


# Exact in exact mode, float otherwise
Real = Union[Fraction, float]


class SampleRow(TypedDict):
    c: int
    d: int
    a: int
    b: int
    norm_sq: float
    sk: float
    rho: float
    im: float


class WeylEntry(TypedDict):
    m: int
    re: float
    im: float
    normalized: float
