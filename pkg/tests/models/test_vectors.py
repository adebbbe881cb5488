from fractions import Fraction

import pytest  # noqa
from pydantic import ValidationError

from latskew.models import *
from latskew import errors, constants as const


@pytest.mark.parametrize(["c", "d"], [(0, 1), (1, 0), (5, -2), (3, 7)])
def test_primitive_vector(c, d):
    vec = PrimitiveVector(c=c, d=d)
    assert (vec.c, vec.d) == (c, d)


@pytest.mark.parametrize(["c", "d", "g"], [(2, 4, 2), (0, 0, 0), (6, 9, 3), (0, 2, 2)])
def test_not_coprime(c, d, g):
    with pytest.raises(errors.NotCoprime) as info:
        PrimitiveVector(c=c, d=d)
    assert info.value.gcd == g


@pytest.mark.parametrize(["c", "d"], [(-1, 2), (0, -1)])
def test_non_canonical_sign_rejected(c, d):
    with pytest.raises(ValidationError):
        PrimitiveVector(c=c, d=d)


@pytest.mark.parametrize(
    ["c", "d", "expected"],
    [(-1, 2, (1, -2)), (0, -1, (0, 1)), (3, -1, (3, -1))]
)
def test_canonical(c, d, expected):
    vec = PrimitiveVector.canonical(c, d)
    assert (vec.c, vec.d) == expected


def test_overflow_guard():
    with pytest.raises(errors.OverflowGuard):
        PrimitiveVector(c=const.INT_GUARD + 1, d=1)


def test_norm_sq(square, skewed):
    vec = PrimitiveVector(c=2, d=1)
    assert vec.norm_sq(square) == 5
    assert vec.norm_sq(skewed) == Fraction(8)
    assert vec.as_complex(square) == 1 + 2j


def test_completion():
    vec = PrimitiveVector(c=5, d=2)
    comp = Completion(3, 1)
    assert comp.determinant(vec) == 1
    assert comp.shifted(vec, -1) == Completion(-2, -1)
    assert comp.shifted(vec, -1).determinant(vec) == 1
