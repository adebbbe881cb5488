import math
from fractions import Fraction

import numpy as np
import pytest  # noqa
from pydantic import ValidationError

from latskew.models import *
from latskew import types


class TestNormBound:
    def test_by_norm_inclusive(self, square):
        bound = NormBound.by_norm(square, 5)
        assert bound.limit == 25.0
        assert bound.admits(Fraction(25))
        assert not bound.admits(Fraction(26))

    def test_by_epsilon_strict(self, square):
        bound = NormBound.by_epsilon(square, Fraction(1, 25))
        assert bound.limit == pytest.approx(25.0)
        assert not bound.admits(Fraction(25))
        assert bound.admits(Fraction(24))

    def test_irrational_boundary_is_exact(self, hexagonal):
        bound = NormBound.by_epsilon(hexagonal, Fraction(1, 10))
        assert bound.exact_sq == Fraction(3, 4) * 100
        assert bound.admits(Fraction(8))
        assert not bound.admits(Fraction(9))

    def test_contains_settles_near_boundary(self, square):
        bound = NormBound.by_epsilon(square, Fraction(1, 25))
        norm_sq = np.array([24.0, 25.0, 26.0])
        norm_num = np.array([24, 25, 26])
        assert bound.contains(norm_sq, norm_num, 1).tolist() == [True, False, False]

    def test_float_mode(self):
        bound = NormBound(4.0, True)
        assert bound.contains(np.array([3.9, 4.0, 4.1])).tolist() == [True, True, False]


class TestEnumSpec:
    def test_by_norm(self, square):
        spec = EnumSpec.by_norm(square, 10, chunk=4)
        assert spec.mode is types.EnumMode.BY_NORM
        assert spec.exact == 10
        assert spec.max_norm == 10.0
        assert spec.c_max == 11
        assert spec.chunks() == [(0, 4), (4, 8), (8, 12)]

    def test_by_epsilon(self, tall):
        spec = EnumSpec.by_epsilon(tall, Fraction(1, 50))
        assert spec.max_norm == pytest.approx(10.0)
        assert spec.bound.inclusive is False
        assert spec.bound.exact_sq == Fraction(4) * 2500

    def test_float_value_stays_float(self, square):
        spec = EnumSpec.by_norm(square, 2.5)
        assert spec.exact_value is None
        assert spec.exact == 2.5

    @pytest.mark.parametrize(["value", "chunk"], [(0, 10), (-1, 10), (1, 0)])
    def test_invalid(self, square, value, chunk):
        with pytest.raises(ValidationError):
            EnumSpec.by_norm(square, value, chunk=chunk)

    def test_chunks_cover_every_c(self, skewed):
        spec = EnumSpec.by_norm(skewed, 37, chunk=5)
        covered = [c for lo, hi in spec.chunks() for c in range(lo, hi)]
        assert covered == list(range(0, spec.c_max + 1))
        assert spec.c_max >= math.floor(37 / skewed.y)
