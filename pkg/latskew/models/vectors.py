from __future__ import annotations

import math
from dataclasses import dataclass

from pydantic import BaseModel, ConfigDict, model_validator

from latskew import constants as const, errors
from latskew.typedefs import Real
from .lattice import LatticeShape


__all__ = ["PrimitiveVector", "Completion", "OrbitSample"]


class PrimitiveVector(BaseModel):
    """Primitive vector v = cz + d, stored as the canonical member of {v, -v}."""
    model_config = ConfigDict(frozen=True)

    c: int
    d: int

    @model_validator(mode="after")
    def check_primitive(self) -> PrimitiveVector:
        if max(abs(self.c), abs(self.d)) > const.INT_GUARD:
            raise errors.OverflowGuard(c=self.c, d=self.d, limit=const.INT_GUARD)
        if (g := math.gcd(self.c, self.d)) != 1:
            raise errors.NotCoprime(c=self.c, d=self.d, gcd=g)
        if not (self.c > 0 or (self.c == 0 and self.d == 1)):
            raise ValueError("Vector is not the canonical sign representative.")
        return self

    @classmethod
    def canonical(cls, c: int, d: int) -> PrimitiveVector:
        """Build the representative with c > 0, or c = 0 and d = 1."""
        if c < 0 or (c == 0 and d < 0):
            c, d = -c, -d
        return cls(c=c, d=d)

    def norm_sq(self, lattice: LatticeShape) -> Real:
        """|cz + d|^2 = c^2 |z|^2 + 2cdx + d^2."""
        c, d = self.c, self.d
        return c * c * lattice.norm + 2 * c * d * lattice.real + d * d

    def as_complex(self, lattice: LatticeShape) -> complex:
        return self.c * lattice.as_complex + self.d


@dataclass(frozen=True)
class Completion:
    """Vector v' = az + b completing (c, d) to the matrix [[a, b], [c, d]]."""
    a: int
    b: int

    def determinant(self, vec: PrimitiveVector) -> int:
        return self.a * vec.d - self.b * vec.c

    def norm_sq(self, lattice: LatticeShape) -> Real:
        a, b = self.a, self.b
        return a * a * lattice.norm + 2 * a * b * lattice.real + b * b

    def shifted(self, vec: PrimitiveVector, n: int) -> Completion:
        """v' + n v."""
        return Completion(self.a + n * vec.c, self.b + n * vec.d)


@dataclass(frozen=True)
class OrbitSample:
    """Per-vector record: |v|^2, least skewness, signed ratio and Im(gamma z)."""
    vec: PrimitiveVector
    comp: Completion
    norm_sq: Real
    sk: Real
    rho: float
    im: Real
