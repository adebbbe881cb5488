import math
from fractions import Fraction

import pytest  # noqa

from latskew import LatticeShape, EnumSpec, enumerate_primitive
from latskew.models import EnumResult


def naive_canonical(lattice: LatticeShape, max_norm: int) -> set[tuple[int, int]]:
    """Canonical coprime pairs with |cz + d| <= T by a plain double loop."""
    bound = Fraction(max_norm) ** 2
    c_max = math.floor(max_norm / lattice.y) + 1
    d_max = math.ceil(max_norm + c_max * abs(lattice.x)) + 1
    pairs = set()
    for c in range(0, c_max + 1):
        for d in range(-d_max, d_max + 1):
            if math.gcd(c, d) != 1 or (c == 0 and d != 1):
                continue
            if c * c * lattice.norm + 2 * c * d * lattice.real + d * d <= bound:
                pairs.add((c, d))
    return pairs


@pytest.fixture(scope="module")
def square() -> LatticeShape:
    """Gaussian lattice z = i."""
    return LatticeShape.parse("0,1")


@pytest.fixture(scope="module")
def tall() -> LatticeShape:
    return LatticeShape.parse("0,2")


@pytest.fixture(scope="module")
def skewed() -> LatticeShape:
    """z = (1 + 2i) / 2."""
    return LatticeShape.parse("1/2,1")


@pytest.fixture(scope="module")
def hexagonal() -> LatticeShape:
    """z = (1 + i sqrt(3)) / 2, exact through |z|^2 = 1."""
    return LatticeShape.from_norm(Fraction(1, 2), 1)


@pytest.fixture(scope="module")
def square_200(square) -> EnumResult:
    return enumerate_primitive(EnumSpec.by_norm(square, 200))


@pytest.fixture(scope="module")
def hexagonal_100(hexagonal) -> EnumResult:
    return enumerate_primitive(EnumSpec.by_norm(hexagonal, 100))
