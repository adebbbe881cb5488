"""Exact arithmetic for lattice vectors: minimal oriented completions,
skewness, signed ratio and the geometric bounds they satisfy.
"""

import math
from fractions import Fraction

import numpy as np

from latskew import constants as const, errors, types
from latskew.models import (
    LatticeShape,
    PrimitiveVector,
    Completion,
    OrbitSample,
    SampleTable,
    GeometryResult,
    GeometryReport
)
from latskew.typedefs import Real


__all__ = [
    "bezout",
    "skewness",
    "minimal_completion",
    "signed_ratio",
    "minimal_vector_length",
    "mobius",
    "height",
    "check_geometry",
    "check_table"
]


HALF = Fraction(1, 2)


def bezout(c: int, d: int) -> tuple[int, int]:
    """One completion (a, b) with ad - bc = 1.

    The representative has 0 <= a < |c|; for c = 0 it is (d, 0).
    """
    g = math.gcd(c, d)
    if g != 1:
        raise errors.NotCoprime(c=c, d=d, gcd=g)
    if c == 0:
        return d, 0
    a = pow(d, -1, abs(c)) if abs(c) > 1 else 0
    return a, (a * d - 1) // c


def skewness(lattice: LatticeShape, vec: PrimitiveVector, comp: Completion) -> Real:
    """sk(v, v') = <v', v> / |v|^2 = Re((az + b) / (cz + d))."""
    if (det := comp.determinant(vec)) != 1:
        raise errors.NotUnimodular(a=comp.a, b=comp.b, c=vec.c, d=vec.d, det=det)

    a, b, c, d = comp.a, comp.b, vec.c, vec.d
    numerator = a * c * lattice.norm + (a * d + b * c) * lattice.real + b * d
    return numerator / vec.norm_sq(lattice)


def minimal_completion(lattice: LatticeShape, vec: PrimitiveVector) -> Completion:
    """Completion of minimal length, the one with sk in (-1/2, 1/2].

    |v' + nv|^2 = |v|^2 ((sk + n)^2 + const), so minimizing the length is
    the same as bringing sk into the half-open window.
    """
    comp = Completion(*bezout(vec.c, vec.d))
    comp = comp.shifted(vec, -math.ceil(skewness(lattice, vec, comp) - HALF))

    # float rounding can leave sk one step outside the window
    sk = skewness(lattice, vec, comp)
    while sk > HALF:
        comp = comp.shifted(vec, -1)
        sk = skewness(lattice, vec, comp)
    while sk <= -HALF:
        comp = comp.shifted(vec, 1)
        sk = skewness(lattice, vec, comp)
    return comp


def height(lattice: LatticeShape, norm_sq: Real) -> Real:
    """Im(gamma z) = area / |v|^2, exact when the area is rational."""
    if lattice.area_exact is not None:
        return lattice.area_exact / norm_sq
    return lattice.area / float(norm_sq)


def signed_ratio(lattice: LatticeShape, vec: PrimitiveVector) -> tuple[float, OrbitSample]:
    """rho(v) = +-|v'|/|v| for the minimal completion v'.

    The sign is + iff sk >= 0; the right angle sk = 0 counts as acute.
    """
    comp = minimal_completion(lattice, vec)
    norm_sq = vec.norm_sq(lattice)
    sk = skewness(lattice, vec, comp)

    ratio = math.sqrt(comp.norm_sq(lattice) / norm_sq)
    rho = ratio if sk >= 0 else -ratio
    return rho, OrbitSample(vec, comp, norm_sq, sk, rho, height(lattice, norm_sq))


def minimal_vector_length(lattice: LatticeShape) -> float:
    """mu(L), the length of the shortest nonzero lattice vector."""
    return lattice.mu


def mobius(lattice: LatticeShape, vec: PrimitiveVector, comp: Completion) -> complex:
    """gamma z = (az + b) / (cz + d)."""
    z = lattice.as_complex
    return (comp.a * z + comp.b) / (vec.c * z + vec.d)


def _le(lhs: Real, rhs: Real, exact: bool) -> bool:
    if exact:
        return lhs <= rhs
    return lhs <= rhs + const.FLOAT_REL_TOL * abs(rhs)


def _result(check: types.GeometryCheck, passed: bool, lhs: Real, rhs: Real) -> GeometryResult:
    return GeometryResult(
        check, passed, float(lhs), float(rhs), float(lhs) - float(rhs),
        violations=0 if passed else 1
    )


def check_geometry(
    sample: OrbitSample, lattice: LatticeShape, *, strict: bool = True
) -> GeometryReport:
    """Verify the bounds a minimal completion must satisfy.

    :param sample: Sample produced by ``signed_ratio``
    :param lattice: Lattice the sample belongs to
    :param strict: Raise ``GeometryViolation`` on the first failed check
    """
    vec, comp = sample.vec, sample.comp
    exact = lattice.is_exact
    norm_sq, comp_sq = vec.norm_sq(lattice), comp.norm_sq(lattice)
    det = comp.determinant(vec)

    sin_alpha = lattice.area / math.sqrt(norm_sq * comp_sq)
    sin_bound = lattice.area / (lattice.mu * math.sqrt(norm_sq))
    product = sample.im * norm_sq
    if isinstance(product, Fraction) and lattice.area_exact is not None:
        height_ok = product == lattice.area_exact
    else:
        height_ok = abs(float(product) - lattice.area) <= const.FLOAT_REL_TOL * lattice.area

    results = (
        _result(types.GeometryCheck.DETERMINANT, det == 1, det, 1),
        _result(types.GeometryCheck.SKEW_RANGE, -HALF < sample.sk <= HALF, sample.sk, HALF),
        _result(
            types.GeometryCheck.COMPLETION_BOUND,
            _le(comp_sq, norm_sq / 4 + lattice.area_sq / norm_sq, exact),
            comp_sq, norm_sq / 4 + lattice.area_sq / norm_sq
        ),
        # sin(alpha) <= area / (mu |v|)  <=>  |v'| >= mu
        _result(
            types.GeometryCheck.ANGLE_BOUND,
            _le(lattice.mu_sq, comp_sq, exact),
            sin_alpha, sin_bound
        ),
        _result(types.GeometryCheck.HEIGHT_IDENTITY, height_ok, product, lattice.area),
    )

    report = GeometryReport(results)
    if strict and not report.passed:
        failed = next(r for r in results if not r.passed)
        raise errors.GeometryViolation(
            check=failed.check.value, lhs=failed.lhs, rhs=failed.rhs, c=vec.c, d=vec.d
        )
    return report


def _table_result(
    check: types.GeometryCheck, ok: np.ndarray, lhs: np.ndarray, rhs: np.ndarray
) -> GeometryResult:
    if len(ok) == 0:
        return GeometryResult(check, True, 0.0, 0.0, 0.0, violations=0, checked=0)
    margin = np.asarray(lhs, dtype=np.float64) - np.asarray(rhs, dtype=np.float64)
    worst = int(np.argmax(margin))
    violations = int(np.count_nonzero(~ok))
    return GeometryResult(
        check, violations == 0, float(lhs[worst]), float(rhs[worst]), float(margin[worst]),
        violations=violations, checked=len(ok)
    )


def check_table(
    lattice: LatticeShape, table: SampleTable, *, strict: bool = False
) -> GeometryReport:
    """Vectorized ``check_geometry`` over every row of an enumeration."""
    det = table.a * table.d - table.b * table.c
    norm_sq, comp_sq = table.norm_sq, table.comp_sq
    tol = const.FLOAT_REL_TOL
    bound = norm_sq / 4 + float(lattice.area_sq) / norm_sq

    if table.is_exact and lattice.exact is not None:
        big = len(table) and int(np.max(np.abs(table.norm_num))) > 2 ** 30
        k, s, w = (
            getattr(table, n).astype(object) if big else getattr(table, n)
            for n in ("norm_num", "skew_num", "comp_num")
        )
        mu_sq = Fraction(lattice.mu_sq)
        skew_ok = (-k < 2 * s) & (2 * s <= k)
        bound_ok = 4 * w * k <= k * k + 4 * lattice.exact.area_sq_num
        angle_ok = w * mu_sq.denominator >= mu_sq.numerator * table.denominator
    else:
        skew_ok = (table.sk > -0.5) & (table.sk <= 0.5)
        bound_ok = comp_sq <= bound * (1 + tol)
        angle_ok = comp_sq >= float(lattice.mu_sq) * (1 - tol)

    product = table.im * norm_sq
    with np.errstate(divide="ignore", invalid="ignore"):
        sin_alpha = lattice.area / np.sqrt(norm_sq * comp_sq)
        sin_bound = lattice.area / (lattice.mu * np.sqrt(norm_sq))

    results = (
        _table_result(types.GeometryCheck.DETERMINANT, det == 1, np.abs(det - 1), np.zeros(len(det))),
        _table_result(types.GeometryCheck.SKEW_RANGE, np.asarray(skew_ok, dtype=bool),
                      np.abs(table.sk), np.full(len(table), 0.5)),
        _table_result(types.GeometryCheck.COMPLETION_BOUND, np.asarray(bound_ok, dtype=bool),
                      comp_sq, bound),
        _table_result(types.GeometryCheck.ANGLE_BOUND, np.asarray(angle_ok, dtype=bool),
                      sin_alpha, sin_bound),
        _table_result(types.GeometryCheck.HEIGHT_IDENTITY,
                      np.abs(product - lattice.area) <= tol * lattice.area,
                      product, np.full(len(table), lattice.area)),
    )

    report = GeometryReport(results)
    if strict and not report.passed:
        failed = next(r for r in results if not r.passed)
        raise errors.GeometryViolation(
            check=failed.check.value, violations=failed.violations, lhs=failed.lhs, rhs=failed.rhs
        )
    return report
