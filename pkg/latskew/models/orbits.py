from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from latskew import constants as const, errors, types
from latskew.typedefs import Real
from .lattice import LatticeShape
from .samples import SampleTable


__all__ = ["NormBound", "EnumSpec", "EnumResult", "Chunk", "CountComparison", "OrbitCount"]


@dataclass(frozen=True)
class NormBound:
    """Admissible region |v|^2 <= limit (inclusive) or |v|^2 < limit (strict).

    ``exact_sq`` is limit^2 as a rational. Cases near the boundary are
    decided on squares, so an irrational area stays exact.
    """
    limit: float
    inclusive: bool = True
    exact_sq: Optional[Fraction] = None

    @classmethod
    def by_norm(cls, lattice: LatticeShape, max_norm: Real) -> NormBound:
        exact_sq = Fraction(max_norm) ** 4 if lattice.is_exact else None
        return cls(float(max_norm) ** 2, True, exact_sq)

    @classmethod
    def by_epsilon(cls, lattice: LatticeShape, epsilon: Real) -> NormBound:
        exact_sq = lattice.area_sq / Fraction(epsilon) ** 2 if lattice.is_exact else None
        return cls(lattice.area / float(epsilon), False, exact_sq)

    def admits(self, norm_sq: Real) -> bool:
        if self.exact_sq is not None and isinstance(norm_sq, Fraction):
            square = norm_sq * norm_sq
            return square <= self.exact_sq if self.inclusive else square < self.exact_sq
        return norm_sq <= self.limit if self.inclusive else norm_sq < self.limit

    def contains(
        self,
        norm_sq: np.ndarray,
        norm_num: Optional[np.ndarray] = None,
        denominator: int = 1
    ) -> np.ndarray:
        """Vectorized ``admits``; exact numerators settle the near-boundary rows."""
        mask = norm_sq <= self.limit if self.inclusive else norm_sq < self.limit
        if self.exact_sq is None or norm_num is None:
            return mask

        near = np.abs(norm_sq - self.limit) <= const.BOUNDARY_REL_TOL * self.limit
        for i in np.flatnonzero(near):
            mask[i] = self.admits(Fraction(int(norm_num[i]), denominator))
        return mask


def _guard(limit_sq: Real) -> None:
    """Reject a bound |v|^2 <= limit_sq whose coordinates would pass 2^30."""
    if (isinstance(limit_sq, float) and math.isinf(limit_sq)) or limit_sq > const.INT_GUARD ** 2:
        raise errors.OverflowGuard(limit=const.INT_GUARD)


class EnumSpec(BaseModel):
    """What to enumerate: primitive vectors with |v| <= T, or cosets with Im(gamma z) > eps."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lattice: LatticeShape
    mode: types.EnumMode = types.EnumMode.BY_NORM
    value: float = Field(gt=0)
    exact_value: Optional[Fraction] = None
    chunk: int = Field(const.DEFAULT_CHUNK, ge=1)

    @classmethod
    def by_norm(cls, lattice: LatticeShape, max_norm: Real | int, chunk: int = const.DEFAULT_CHUNK) -> EnumSpec:
        if max_norm > 0:
            _guard(max_norm * max_norm if isinstance(max_norm, float) else Fraction(max_norm) ** 2)
        if not lattice.is_exact:
            max_norm = float(max_norm)
        return cls(
            lattice=lattice, mode=types.EnumMode.BY_NORM, value=float(max_norm),
            exact_value=None if isinstance(max_norm, float) else Fraction(max_norm), chunk=chunk
        )

    @classmethod
    def by_epsilon(cls, lattice: LatticeShape, epsilon: Real | int, chunk: int = const.DEFAULT_CHUNK) -> EnumSpec:
        if epsilon > 0:
            _guard(
                lattice.area / epsilon if isinstance(epsilon, float)
                else Fraction(lattice.area) / Fraction(epsilon)
            )
        if not lattice.is_exact:
            epsilon = float(epsilon)
        return cls(
            lattice=lattice, mode=types.EnumMode.BY_EPSILON, value=float(epsilon),
            exact_value=None if isinstance(epsilon, float) else Fraction(epsilon), chunk=chunk
        )

    @property
    def exact(self) -> Real:
        return self.exact_value if self.exact_value is not None else self.value

    @property
    def max_norm(self) -> float:
        """T; in by-epsilon mode T = sqrt(area / eps)."""
        if self.mode is types.EnumMode.BY_NORM:
            return self.value
        return math.sqrt(self.lattice.area / self.value)

    @property
    def bound(self) -> NormBound:
        if self.mode is types.EnumMode.BY_NORM:
            return NormBound.by_norm(self.lattice, self.exact)
        return NormBound.by_epsilon(self.lattice, self.exact)

    @property
    def c_max(self) -> int:
        """Largest c that can occur: |cz + d| >= c * y."""
        return math.floor(self.max_norm / self.lattice.y) + 1

    def chunks(self) -> list[tuple[int, int]]:
        """Half-open c-ranges of width ``chunk``; independent of the worker count."""
        stop = self.c_max + 1
        return [(lo, min(lo + self.chunk, stop)) for lo in range(0, stop, self.chunk)]


@dataclass(frozen=True)
class Chunk:
    """Samples of one work unit, c in [c_lo, c_hi)."""
    number: int
    c_lo: int
    c_hi: int
    table: SampleTable


@dataclass(frozen=True)
class EnumResult:
    samples: SampleTable
    predicted: float  # asymptotic number of +-classes, 3 T^2 / (pi * area)

    @property
    def count(self) -> int:
        return len(self.samples)


@dataclass(frozen=True)
class CountComparison:
    count: int
    predicted: float
    relative_error: float


@dataclass(frozen=True)
class OrbitCount:
    epsilon: float
    count: int
    scaled: float
