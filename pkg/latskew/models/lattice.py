from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from latskew import errors
from latskew.typedefs import Real
from latskew.utils import parse_pair, parse_rational, rational_sqrt


__all__ = ["ExactParts", "LatticeShape"]


class ExactParts(BaseModel):
    """Rational data of z = x + iy: the real part and |z|^2.

    All integer kernels work over the common denominator D, with
    x = P/D and |z|^2 = R/D.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: Fraction
    norm: Fraction

    @property
    def area_sq(self) -> Fraction:
        return self.norm - self.x * self.x

    @property
    def denominator(self) -> int:
        return math.lcm(self.x.denominator, self.norm.denominator)

    @property
    def x_num(self) -> int:
        return int(self.x * self.denominator)

    @property
    def norm_num(self) -> int:
        return int(self.norm * self.denominator)

    @property
    def area_sq_num(self) -> int:
        """area^2 * D^2, always an integer."""
        return self.norm_num * self.denominator - self.x_num ** 2


class LatticeShape(BaseModel):
    """The lattice spanned by 1 and z = x + iy with y > 0.

    In exact mode ``exact`` carries x and |z|^2 as rationals; y itself may be
    irrational (the hexagonal lattice has y = sqrt(3)/2).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: float
    y: float = Field(gt=0)
    exact: Optional[ExactParts] = None

    @model_validator(mode="after")
    def check_exact(self) -> LatticeShape:
        if self.exact is not None and self.exact.area_sq <= 0:
            raise ValueError("Im(z) must be positive.")
        return self

    @classmethod
    def from_norm(cls, x: Fraction | int | str, norm: Fraction | int | str) -> LatticeShape:
        """Exact lattice from Re(z) and |z|^2."""
        x, norm = (parse_rational(v) if isinstance(v, str) else Fraction(v) for v in (x, norm))
        if norm - x * x <= 0:
            raise errors.InvalidLattice(x=x, norm=norm)
        exact = ExactParts(x=x, norm=norm)
        area = rational_sqrt(exact.area_sq)
        y = float(area) if area is not None else math.sqrt(exact.area_sq)
        return cls(x=float(x), y=y, exact=exact)

    @classmethod
    def from_parts(cls, x: Real | int | str, y: Real | int | str) -> LatticeShape:
        """Lattice from Re(z) and Im(z); exact unless a float is involved."""
        if isinstance(x, float) or isinstance(y, float):
            if y <= 0:
                raise errors.InvalidLattice(x=x, y=y)
            return cls(x=float(x), y=float(y))

        x, y = (parse_rational(v) if isinstance(v, str) else Fraction(v) for v in (x, y))
        if y <= 0:
            raise errors.InvalidLattice(x=x, y=y)
        return cls.from_norm(x, x * x + y * y)

    @classmethod
    def parse(cls, text: str, *, exact: bool = True) -> LatticeShape:
        """Parse an ``x,y`` pair of decimal strings."""
        x, y = parse_pair(text)
        if exact:
            return cls.from_parts(x, y)
        return cls.from_parts(float(parse_rational(x)), float(parse_rational(y)))

    @classmethod
    def parse_norm(cls, text: str) -> LatticeShape:
        """Parse an ``x,n`` pair where n = |z|^2."""
        return cls.from_norm(*parse_pair(text))

    @classmethod
    def from_basis(cls, w1: complex, w2: complex) -> LatticeShape:
        """Normalize the lattice spanned by w1, w2 to the shape <1, z>."""
        if w1 == 0:
            raise errors.InvalidLattice(w1=w1, w2=w2)
        z = complex(w2) / complex(w1)
        if z.imag == 0:
            raise errors.InvalidLattice(w1=w1, w2=w2)
        if z.imag < 0:
            z = -z
        return cls(x=z.real, y=z.imag)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def area(self) -> float:
        return self.y

    @property
    def norm(self) -> Real:
        """|z|^2."""
        if self.exact is not None:
            return self.exact.norm
        return self.x * self.x + self.y * self.y

    @property
    def real(self) -> Real:
        if self.exact is not None:
            return self.exact.x
        return self.x

    @cached_property
    def area_exact(self) -> Optional[Fraction]:
        """area(L) as a rational when it is one."""
        if self.exact is None:
            return None
        return rational_sqrt(self.exact.area_sq)

    @cached_property
    def area_sq(self) -> Real:
        if self.exact is not None:
            return self.exact.area_sq
        return self.y * self.y

    @cached_property
    def mu_sq(self) -> Real:
        """Squared length of the shortest nonzero vector.

        For |c| > 1/y every vector cz + d is longer than |c| * y > 1, the
        length of the vector 1, so c ranges over 0..ceil(1/y) + 1 only.
        """
        x, norm = self.real, self.norm
        best: Real = 1
        for c in range(1, math.ceil(1 / self.y) + 2):
            center = -c * self.x
            for d in range(math.floor(center) - 1, math.ceil(center) + 2):
                candidate = c * c * norm + 2 * c * d * x + d * d
                if candidate < best:
                    best = candidate
        return Fraction(best) if self.exact is not None else float(best)

    @property
    def mu(self) -> float:
        return math.sqrt(self.mu_sq)

    @property
    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    def perturbed(self, dx: float = 0.0, dy: float = 0.0) -> LatticeShape:
        """Float-mode copy of the shape moved to z + dx + i dy."""
        return LatticeShape(x=self.x + dx, y=self.y + dy)

    def is_square(self) -> bool:
        """Whether this is the Gaussian lattice z = i."""
        return self.x == 0 and self.y == 1
