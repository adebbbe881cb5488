import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np
import pytest  # noqa

from latskew import (
    LatticeShape,
    EnumSpec,
    enumerate_primitive,
    stream,
    count_primitive,
    count_vs_asymptotic,
    orbit_count_scaling,
    predicted_count
)
from latskew import errors, kernel, utils
from latskew.paginators import chunks
from latskew.models import SampleTable
from tests.conftest import naive_canonical


def test_unit_norm(square):
    result = enumerate_primitive(EnumSpec.by_norm(square, 1))
    assert result.count == 2
    assert [(s.vec.c, s.vec.d) for s in result.samples] == [(0, 1), (1, 0)]
    assert [(s.comp.a, s.comp.b) for s in result.samples] == [(1, 0), (0, -1)]
    assert result.samples.sk.tolist() == [0.0, 0.0]
    assert result.samples.rho.tolist() == [1.0, 1.0]
    assert result.predicted == pytest.approx(3 / math.pi)


def test_norm_five(square):
    assert enumerate_primitive(EnumSpec.by_norm(square, 5)).count == 24


@pytest.mark.parametrize("max_norm", [1, 2, 7, 20, 50])
def test_matches_naive_enumeration(square, max_norm):
    samples = enumerate_primitive(EnumSpec.by_norm(square, max_norm, chunk=8)).samples
    assert samples.pairs() == naive_canonical(square, max_norm)
    assert len(samples.pairs()) == len(samples)


@pytest.mark.parametrize("text", ["1/2,1", "-1/3,1/5", "7/2,1/2"])
def test_matches_naive_enumeration_skewed(text):
    lattice = LatticeShape.parse(text)
    samples = enumerate_primitive(EnumSpec.by_norm(lattice, 25, chunk=3)).samples
    assert samples.pairs() == naive_canonical(lattice, 25)


def test_hexagonal_matches_naive(hexagonal, hexagonal_100):
    assert hexagonal_100.samples.pairs() == naive_canonical(hexagonal, 100)


def test_sorted_by_norm(square_200):
    samples = square_200.samples
    assert np.all(np.diff(samples.norm_sq) >= 0)
    ties = np.flatnonzero(np.diff(samples.norm_sq) == 0)
    assert np.all(samples.c[ties] <= samples.c[ties + 1])


def test_rows_are_minimal_completions(square_200):
    samples = square_200.samples
    assert np.all(samples.a * samples.d - samples.b * samples.c == 1)
    assert np.all((samples.sk > -0.5) & (samples.sk <= 0.5))
    assert np.allclose(samples.norm_num * samples.sk, samples.skew_num, rtol=1e-14, atol=0)
    assert np.all(np.sign(samples.rho) == np.where(samples.sk >= 0, 1, -1))


def test_height_identity(square_200):
    samples = square_200.samples
    assert np.allclose(samples.im * samples.norm_sq, 1.0, rtol=1e-14, atol=0)


@pytest.mark.parametrize("chunk", [1, 7, 64, 100_000])
def test_independent_of_chunk(skewed, chunk):
    reference = enumerate_primitive(EnumSpec.by_norm(skewed, 60)).samples
    assert enumerate_primitive(EnumSpec.by_norm(skewed, 60, chunk=chunk)).samples.equals(reference)


@pytest.mark.parametrize("workers", [2, 4, 8])
def test_independent_of_workers(square, workers):
    spec = EnumSpec.by_norm(square, 120, chunk=16)
    reference = enumerate_primitive(spec, workers=1).samples
    assert enumerate_primitive(spec, workers=workers).samples.equals(reference)


def test_float_mode_agrees_with_exact(skewed):
    approx = LatticeShape.parse("1/2,1", exact=False)
    exact = enumerate_primitive(EnumSpec.by_norm(skewed, 30)).samples
    floats = enumerate_primitive(EnumSpec.by_norm(approx, 30.0)).samples
    assert not floats.is_exact
    assert floats.pairs() == exact.pairs()
    assert np.array_equal(floats.a, exact.a)
    assert np.array_equal(floats.b, exact.b)
    assert floats.sk == pytest.approx(exact.sk, abs=1e-12)


class TestByEpsilon:
    def test_duality_is_strict(self, square):
        inclusive = enumerate_primitive(EnumSpec.by_norm(square, 5)).samples
        strict = enumerate_primitive(EnumSpec.by_epsilon(square, Fraction(1, 25))).samples
        on_boundary = {(3, 4), (3, -4), (4, 3), (4, -3)}
        assert strict.pairs() == inclusive.pairs() - on_boundary
        assert len(strict) == 20

    def test_unit_height_is_excluded(self, square):
        assert enumerate_primitive(EnumSpec.by_epsilon(square, 1)).count == 0
        below = enumerate_primitive(EnumSpec.by_epsilon(square, Fraction(99, 100))).samples
        assert below.pairs() == {(0, 1), (1, 0)}

    def test_heights_exceed_epsilon(self, tall):
        samples = enumerate_primitive(EnumSpec.by_epsilon(tall, Fraction(1, 500))).samples
        assert np.all(samples.im > 1 / 500)
        larger = naive_canonical(tall, math.ceil(math.sqrt(2 * 500)))
        heights = {(c, d): Fraction(2) / (4 * c * c + d * d) for c, d in larger}
        assert samples.pairs() == {p for p, h in heights.items() if h > Fraction(1, 500)}


class TestStream:
    def test_same_order_as_enumeration(self, square, square_200):
        seen = []
        total = stream(EnumSpec.by_norm(square, 200), lambda s: seen.append((s.vec.c, s.vec.d)), band_count=5)
        assert total == square_200.count
        assert seen == list(zip(square_200.samples.c.tolist(), square_200.samples.d.tolist()))

    def test_batched(self, hexagonal, hexagonal_100):
        tables = []
        total = stream(EnumSpec.by_norm(hexagonal, 100), tables.append, batched=True, band_count=7, workers=2)
        assert len(tables) == 7
        assert total == hexagonal_100.count
        assert SampleTable.concat(tables).equals(hexagonal_100.samples)

    def test_strict_bound_in_last_band(self, square):
        samples = []
        stream(EnumSpec.by_epsilon(square, Fraction(1, 25)), samples.append, band_count=3)
        assert len(samples) == 20

    def test_bands_share_one_pool(self, hexagonal, hexagonal_100, monkeypatch):
        started = []

        class CountingPool(ProcessPoolExecutor):
            def __init__(self, *args, **kwargs):
                started.append(kwargs.get("max_workers"))
                super().__init__(*args, **kwargs)

        monkeypatch.setattr(chunks, "ProcessPoolExecutor", CountingPool)
        monkeypatch.setattr(utils, "ProcessPoolExecutor", CountingPool)
        tables = []
        stream(EnumSpec.by_norm(hexagonal, 100), tables.append, batched=True, band_count=6, workers=2)
        assert started == [2]
        assert SampleTable.concat(tables).equals(hexagonal_100.samples)

    def test_invalid_band_count(self, square):
        with pytest.raises(errors.ConfigError):
            stream(EnumSpec.by_norm(square, 5), print, band_count=0)


class TestCounting:
    @pytest.mark.parametrize("max_norm", [1, 5, 37, 150])
    def test_count_matches_enumeration(self, skewed, max_norm):
        spec = EnumSpec.by_norm(skewed, max_norm, chunk=13)
        assert count_primitive(spec) == enumerate_primitive(spec).count

    def test_count_vs_asymptotic_unit(self, square):
        comparison = count_vs_asymptotic(EnumSpec.by_norm(square, 1))
        assert comparison.count == 4
        assert comparison.predicted == pytest.approx(6 / math.pi)

    def test_count_vs_asymptotic_needs_norm(self, square):
        with pytest.raises(errors.ConfigError):
            count_vs_asymptotic(EnumSpec.by_epsilon(square, Fraction(1, 10)))

    def test_predicted_count(self, square, tall):
        assert predicted_count(square, 100) == pytest.approx(3e4 / math.pi)
        assert predicted_count(tall, 100) == pytest.approx(1.5e4 / math.pi)

    def test_monotone_in_norm(self, skewed):
        counts = [count_primitive(EnumSpec.by_norm(skewed, t)) for t in (5, 10, 20, 40)]
        assert counts == sorted(counts)

    def test_nested_in_norm(self, skewed):
        pairs = [enumerate_primitive(EnumSpec.by_norm(skewed, t)).samples.pairs() for t in (5, 10, 20, 40)]
        assert all(small <= large for small, large in zip(pairs, pairs[1:]))

    def test_orbit_count_scaling_small(self, square):
        rows = orbit_count_scaling(square, [Fraction(99, 100), Fraction(1, 25)])
        assert [r.count for r in rows] == [2, 20]
        assert [r.scaled for r in rows] == pytest.approx([1.98, 0.8])

    @pytest.mark.parametrize("grid", [[Fraction(1, 10), Fraction(1, 10)], [Fraction(1, 100), Fraction(1, 10)], [0]])
    def test_orbit_count_scaling_invalid_grid(self, square, grid):
        with pytest.raises(errors.ConfigError):
            orbit_count_scaling(square, grid)

    @pytest.mark.slow
    @pytest.mark.parametrize(["text", "predicted"], [("0,1", 6e4 / math.pi), ("0,2", 3e4 / math.pi)])
    def test_count_vs_asymptotic_hundred(self, text, predicted):
        comparison = count_vs_asymptotic(EnumSpec.by_norm(LatticeShape.parse(text), 100), workers=2)
        assert comparison.predicted == pytest.approx(predicted)
        assert comparison.relative_error < 0.01

    @pytest.mark.slow
    @pytest.mark.parametrize("text", ["0,1", "0,2"])
    def test_count_vs_asymptotic_thousand(self, text):
        comparison = count_vs_asymptotic(EnumSpec.by_norm(LatticeShape.parse(text), 1000), workers=4)
        assert comparison.relative_error <= 0.003

    @pytest.mark.slow
    def test_orbit_count_scaling_limit(self, square):
        rows = orbit_count_scaling(square, [Fraction(2, 10_000), Fraction(1, 10_000)], workers=2)
        assert rows[-1].scaled == pytest.approx(3 / math.pi, rel=0.02)
        assert 1.9 <= rows[1].count / rows[0].count <= 2.1


class TestGuards:
    def test_overflow_guard(self, square):
        with pytest.raises(errors.OverflowGuard):
            enumerate_primitive(EnumSpec.by_norm(square, 2 ** 31))

    @pytest.mark.parametrize("max_norm", [Fraction(10) ** 400, math.inf, 2.0 ** 31])
    def test_overflow_guard_before_float_conversion(self, square, max_norm):
        with pytest.raises(errors.OverflowGuard):
            EnumSpec.by_norm(square, max_norm)

    def test_overflow_guard_tiny_epsilon(self, square):
        with pytest.raises(errors.OverflowGuard):
            EnumSpec.by_epsilon(square, Fraction(1, 10 ** 400))
        with pytest.raises(errors.OverflowGuard):
            EnumSpec.by_epsilon(LatticeShape.parse("0,1", exact=False), 1e-300)

    def test_object_dtype_fallback(self):
        lattice = LatticeShape.parse("1/1000003,1/999983")
        assert kernel.exact_dtype(lattice, 10_000) is object
        assert kernel.exact_dtype(LatticeShape.parse("0,1"), 10_000) is np.int64

    def test_object_dtype_enumeration_matches_naive(self):
        lattice = LatticeShape.parse("1/1000000007,1")
        samples = enumerate_primitive(EnumSpec.by_norm(lattice, 12)).samples
        assert samples.norm_num.dtype == object
        assert samples.pairs() == naive_canonical(lattice, 12)
        assert np.all(samples.a * samples.d - samples.b * samples.c == 1)


def test_bezout_array():
    c = np.array([0, 1, 5, 7, 13, 21])
    d = np.array([1, 0, 2, -3, -8, 34])
    a, b = kernel.bezout_array(c, d)
    assert np.all(a * d - b * c == 1)
