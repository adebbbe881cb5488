import math
from fractions import Fraction

import pytest  # noqa

from latskew import (
    LatticeShape,
    PrimitiveVector,
    Completion,
    OrbitSample,
    bezout,
    skewness,
    minimal_completion,
    signed_ratio,
    minimal_vector_length,
    mobius,
    height,
    check_geometry,
    check_table,
    EnumSpec,
    enumerate_primitive
)
from latskew import errors, types


def brute_completion(lattice: LatticeShape, c: int, d: int) -> tuple[int, int]:
    """Shortest a z + b with ad - bc = 1 by scanning shifts of any solution."""
    a0, b0 = next(
        (a, b) for a in range(-25, 26) for b in range(-25, 26) if a * d - b * c == 1
    )
    norm = c * c * lattice.norm + 2 * c * d * lattice.real + d * d
    best = None
    for n in range(-50, 51):
        a, b = a0 + n * c, b0 + n * d
        length = a * a * lattice.norm + 2 * a * b * lattice.real + b * b
        sk = (a * c * lattice.norm + (a * d + b * c) * lattice.real + b * d) / norm
        key = (length, -sk)  # equal lengths: the one with sk = +1/2
        if best is None or key < best[0]:
            best = (key, (a, b))
    return best[1]


@pytest.mark.parametrize(
    ["c", "d", "expected"],
    [(0, 1, (1, 0)), (1, 0, (0, -1)), (5, 2, (3, 1)), (7, -3, (2, -1)), (1, 1, (0, -1))]
)
def test_bezout(c, d, expected):
    assert bezout(c, d) == expected


@pytest.mark.parametrize(["c", "d"], [(c, d) for c in range(0, 15) for d in range(-15, 16) if math.gcd(c, d) == 1])
def test_bezout_is_unimodular_and_small(c, d):
    a, b = bezout(c, d)
    assert a * d - b * c == 1
    assert max(abs(a), abs(b)) <= max(abs(c), abs(d))


@pytest.mark.parametrize(["c", "d"], [(2, 4), (0, 0), (3, 9)])
def test_bezout_not_coprime(c, d):
    with pytest.raises(errors.NotCoprime):
        bezout(c, d)


@pytest.mark.parametrize(
    ["c", "d", "comp", "sk"],
    [
        (0, 1, Completion(1, 0), Fraction(0)),
        (2, 1, Completion(1, 0), Fraction(2, 5)),
        (1, 1, Completion(1, 0), Fraction(1, 2)),
        (5, 2, Completion(-2, -1), Fraction(-12, 29)),
    ]
)
def test_minimal_completion_square(square, c, d, comp, sk):
    vec = PrimitiveVector(c=c, d=d)
    assert minimal_completion(square, vec) == comp
    assert skewness(square, vec, comp) == sk


def test_skewness_matches_complex_arithmetic(square):
    vec, comp = PrimitiveVector(c=5, d=2), Completion(-2, -1)
    z = square.as_complex
    assert float(skewness(square, vec, comp)) == pytest.approx(((comp.a * z + comp.b) / (vec.c * z + vec.d)).real)


def test_skewness_needs_unimodular(square):
    with pytest.raises(errors.NotUnimodular):
        skewness(square, PrimitiveVector(c=2, d=1), Completion(1, 1))


@pytest.mark.parametrize("text", ["0,1", "1/2,1"])
def test_minimal_completion_matches_brute_force(text):
    lattice = LatticeShape.parse(text)
    for c in range(0, 21):
        for d in range(-20, 21):
            if c * c + d * d > 400 or math.gcd(c, d) != 1 or (c == 0 and d != 1):
                continue
            comp = minimal_completion(lattice, PrimitiveVector(c=c, d=d))
            assert (comp.a, comp.b) == brute_completion(lattice, c, d), (c, d)


@pytest.mark.parametrize("text", ["0,1", "1/2,1"])
def test_long_vectors_have_one_minimal_shift(text):
    lattice = LatticeShape.parse(text)
    threshold_sq = 4 * Fraction(lattice.area) ** 2 / lattice.mu_sq
    checked = 0
    for c in range(0, 21):
        for d in range(-20, 21):
            if c * c + d * d > 400 or math.gcd(c, d) != 1 or (c == 0 and d != 1):
                continue
            vec = PrimitiveVector(c=c, d=d)
            if vec.norm_sq(lattice) <= threshold_sq:
                continue
            comp = minimal_completion(lattice, vec)
            lengths = [comp.shifted(vec, n).norm_sq(lattice) for n in range(-3, 4)]
            assert lengths.count(min(lengths)) == 1, (c, d)
            assert min(lengths) == comp.norm_sq(lattice)
            checked += 1
    assert checked > 100


def test_negated_quadruple_gives_same_sample(skewed):
    z = skewed.as_complex
    for sample in enumerate_primitive(EnumSpec.by_norm(skewed, 12)).samples:
        (a, b), (c, d) = (sample.comp.a, sample.comp.b), (sample.vec.c, sample.vec.d)
        image = (-a * z - b) / (-c * z - d)
        assert image == pytest.approx(mobius(skewed, sample.vec, sample.comp), rel=1e-14)
        assert image.real == pytest.approx(float(sample.sk), abs=1e-14)
        assert image.imag == pytest.approx(float(sample.im), rel=1e-14)
        assert abs(-a * z - b) / abs(-c * z - d) == pytest.approx(abs(sample.rho), rel=1e-14)


def test_minimal_completion_float_mode():
    exact = LatticeShape.parse("0.3,0.7")
    approx = LatticeShape.parse("0.3,0.7", exact=False)
    for c, d in [(1, 0), (3, -1), (7, 5), (12, -7), (40, 33)]:
        vec = PrimitiveVector(c=c, d=d)
        assert minimal_completion(approx, vec) == minimal_completion(exact, vec)


@pytest.mark.parametrize(
    ["c", "d", "rho"],
    [(0, 1, 1.0), (2, 1, 1 / math.sqrt(5)), (5, 2, -math.sqrt(5 / 29)), (1, 1, 1 / math.sqrt(2))]
)
def test_signed_ratio(square, c, d, rho):
    value, sample = signed_ratio(square, PrimitiveVector(c=c, d=d))
    assert value == pytest.approx(rho, rel=1e-15)
    assert sample.rho == value
    assert sample.im == Fraction(1) / (c * c + d * d)


def test_signed_ratio_right_angle_is_positive(square):
    rho, sample = signed_ratio(square, PrimitiveVector(c=1, d=0))
    assert sample.sk == 0
    assert rho == 1.0


@pytest.mark.parametrize(
    ["lattice", "mu"],
    [
        (LatticeShape.parse("0,1"), 1.0),
        (LatticeShape.parse("0,2"), 1.0),
        (LatticeShape.from_norm(Fraction(1, 2), 1), 1.0),
        (LatticeShape.parse("0,1/3"), 1 / 3),
    ]
)
def test_minimal_vector_length(lattice, mu):
    assert minimal_vector_length(lattice) == pytest.approx(mu)


def test_mu_matches_exhaustive_search(hexagonal):
    lengths = [
        abs(c * hexagonal.as_complex + d)
        for c in range(-3, 4) for d in range(-3, 4) if (c, d) != (0, 0)
    ]
    assert minimal_vector_length(hexagonal) == pytest.approx(min(lengths))


def test_mobius_views_agree(square):
    vec = PrimitiveVector(c=2, d=1)
    rho, sample = signed_ratio(square, vec)
    w = mobius(square, vec, sample.comp)
    assert w.real == pytest.approx(float(sample.sk))
    assert w.imag == pytest.approx(float(sample.im))
    assert abs(w) == pytest.approx(abs(rho))


def test_height(square, hexagonal):
    assert height(square, Fraction(5)) == Fraction(1, 5)
    assert height(hexagonal, Fraction(3)) == pytest.approx(math.sqrt(3) / 6)


class TestCheckGeometry:
    @pytest.mark.parametrize(["c", "d"], [(1, 1), (2, 1), (0, 1), (5, 2), (13, -8)])
    def test_minimal_samples_pass(self, square, c, d):
        _, sample = signed_ratio(square, PrimitiveVector(c=c, d=d))
        report = check_geometry(sample, square)
        assert report.passed
        assert report.violations == 0

    def test_completion_bound_equality(self, square):
        _, sample = signed_ratio(square, PrimitiveVector(c=1, d=1))
        result = check_geometry(sample, square)[types.GeometryCheck.COMPLETION_BOUND]
        assert result.passed
        assert result.lhs == result.rhs == 1.0

    def test_angle_equality(self, square):
        _, sample = signed_ratio(square, PrimitiveVector(c=0, d=1))
        result = check_geometry(sample, square)[types.GeometryCheck.ANGLE_BOUND]
        assert result.passed
        assert result.lhs == result.rhs == 1.0

    def test_violation(self, square):
        vec, comp = PrimitiveVector(c=2, d=1), Completion(3, 1)
        sample = OrbitSample(vec, comp, Fraction(5), skewness(square, vec, comp), 1.0, Fraction(1, 5))
        report = check_geometry(sample, square, strict=False)
        assert not report.passed
        assert not report[types.GeometryCheck.SKEW_RANGE].passed
        with pytest.raises(errors.GeometryViolation):
            check_geometry(sample, square)

    def test_float_mode(self):
        lattice = LatticeShape.parse("0.123,0.987", exact=False)
        for c, d in [(1, 0), (4, -3), (17, 11)]:
            _, sample = signed_ratio(lattice, PrimitiveVector(c=c, d=d))
            assert check_geometry(sample, lattice).passed


class TestCheckTable:
    def test_square(self, square, square_200):
        report = check_table(square, square_200.samples, strict=True)
        assert report.passed
        assert all(r.checked == square_200.count for r in report.results)

    def test_hexagonal(self, hexagonal, hexagonal_100):
        assert check_table(hexagonal, hexagonal_100.samples).passed

    def test_agrees_with_scalar_check(self, skewed):
        samples = enumerate_primitive(EnumSpec.by_norm(skewed, 15)).samples
        assert check_table(skewed, samples).passed
        for sample in samples:
            assert check_geometry(sample, skewed).passed
