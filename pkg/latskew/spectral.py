"""Truncated evaluation of V_m(z, s) = sum Im(gamma z)^s e(m Re(gamma z))
over the cosets of the cusp stabilizer, and checks of the identities it
satisfies for Re(s) > 1.
"""

import math
from typing import Optional

import mpmath
import numpy as np
from loguru import logger

from latskew import constants as const, errors
from latskew.models import LatticeShape, EnumSpec, SampleTable, SeriesPoint, LaplacianCheck
from latskew.orbits import enumerate_primitive, stream
from latskew.utils import compensated_sum


__all__ = ["eval_v", "eisenstein_reference", "tail_bound", "laplacian_residual"]


def _check_domain(sigma: float, s: complex | float) -> None:
    if sigma <= 1 + const.CONVERGENCE_MARGIN:
        raise errors.ConvergenceDomain(s=s)


def _terms(im: np.ndarray, re: np.ndarray, m: int, s: complex) -> np.ndarray:
    """Im^s e(m Re) for every coset."""
    return np.exp(s * np.log(im) + 2j * np.pi * m * re)


def tail_bound(lattice: LatticeShape, sigma: float, trunc: float) -> float:
    """Upper bound for the terms with |v| > trunc, absolute values taken.

    There are at most pi (R + delta)^2 / (2 area) canonical vectors with
    |v| <= R, delta being the diameter of the fundamental parallelogram;
    partial summation against r^(-2 sigma) gives the bound.
    """
    _check_domain(sigma, sigma)
    z = lattice.as_complex
    delta = max(abs(1 + z), abs(1 - z))
    density = math.pi / (2 * lattice.area) * (1 + delta / trunc) ** 2
    return lattice.area ** sigma * density * sigma * trunc ** (2 - 2 * sigma) / (sigma - 1)


def eval_v(
    lattice: LatticeShape,
    m: int,
    s: complex | float,
    trunc: float,
    *,
    workers: int = const.DEFAULT_WORKERS,
    band_count: int = const.DEFAULT_BAND_COUNT
) -> SeriesPoint:
    """Partial sum of V_m(z, s) over the cosets with |v| <= trunc.

    :param lattice: Lattice shape z
    :param m: Frequency
    :param s: Complex exponent with Re(s) > 1
    :param trunc: Norm cutoff T of the included cosets
    :param workers: Number of worker processes of the enumeration
    :param band_count: Number of norm bands held in memory one at a time
    """
    s = complex(s)
    _check_domain(s.real, s)
    partials: list[complex] = []

    def accumulate(table: SampleTable) -> None:
        if len(table):
            partials.append(compensated_sum(_terms(table.im, table.sk, m, s)))

    terms = stream(
        EnumSpec.by_norm(lattice, trunc), accumulate,
        workers=workers, band_count=band_count, batched=True
    )
    value = compensated_sum(np.array(partials, dtype=np.complex128))
    return SeriesPoint(
        m=m, sigma=s.real, t=s.imag, trunc=trunc, value=value,
        tail_bound=tail_bound(lattice, s.real, trunc), terms=terms
    )


def eisenstein_reference(s: float) -> float:
    """V_0(i, s) = 2 zeta(s) beta(s) / zeta(2s), beta being the Dirichlet beta function."""
    _check_domain(s, s)
    with mpmath.workdps(const.EISENSTEIN_DPS):
        beta = mpmath.dirichlet(s, [0, 1, 0, -1])
        return float(2 * mpmath.zeta(s) * beta / mpmath.zeta(2 * s))


def _fixed_value(table: SampleTable, lattice: LatticeShape, m: int, s: float) -> complex:
    """V_m at ``lattice`` summed over a fixed set of cosets."""
    z = lattice.as_complex
    w = (table.a * z + table.b) / (table.c * z + table.d)
    return compensated_sum(_terms(w.imag, w.real, m, complex(s)))


def laplacian_residual(
    lattice: LatticeShape,
    m: int,
    s: float,
    trunc: float,
    h: float = const.DEFAULT_STEP,
    *,
    tolerance: float = const.DEFAULT_TOLERANCE,
    reenumerate: bool = True,
    workers: int = const.DEFAULT_WORKERS
) -> LaplacianCheck:
    """Check (Delta - s(1 - s)) V_m(z, s) = (2 pi m)^2 V_m(z, s + 2) on a 5-point stencil.

    Delta = -y^2 (d^2/dx^2 + d^2/dy^2) is estimated from central second
    differences at steps h and h/2. For m = 0 the right side vanishes and
    the residual is measured against |s(1 - s) V|.

    :param reenumerate: Enumerate the cosets anew at every stencil point;
        otherwise the cosets of z are reused and only the stencil error remains
    :param tolerance: Largest accepted Richardson error estimate, relative
    """
    _check_domain(s, s)
    if not 0 < h < 0.1:
        raise errors.ConfigError(f"Step h must lie in (0, 0.1), got {h}.")
    if h >= lattice.y:
        # z - ih must stay in the upper half-plane
        raise errors.StepTooLarge(h=h, y=float(lattice.y))

    fixed: Optional[SampleTable] = None
    if not reenumerate:
        fixed = enumerate_primitive(EnumSpec.by_norm(lattice, trunc), workers).samples

    def value(dx: float, dy: float, exponent: float) -> complex:
        shape = lattice.perturbed(dx, dy)
        if fixed is not None:
            return _fixed_value(fixed, shape, m, exponent)
        return eval_v(shape, m, exponent, trunc, workers=workers).value

    center = value(0.0, 0.0, s)

    def laplacian(step: float) -> complex:
        neighbours = (
            value(step, 0.0, s) + value(-step, 0.0, s)
            + value(0.0, step, s) + value(0.0, -step, s)
        )
        return -lattice.y ** 2 * (neighbours - 4 * center) / step ** 2

    eigenvalue = s * (1 - s)
    rhs = (2 * math.pi * m) ** 2 * value(0.0, 0.0, s + 2) if m else 0j
    scale = max(abs(rhs) if m else abs(eigenvalue * center), const.TINY)

    coarse, fine = laplacian(h), laplacian(h / 2)
    lhs = coarse - eigenvalue * center
    rel_err = abs(lhs - rhs) / scale
    rel_err_half = abs(fine - eigenvalue * center - rhs) / scale

    # the O(h^2) error of the coarse stencil is about 4/3 of the difference
    estimate = abs(coarse - fine) * 4 / 3 / scale
    if estimate > tolerance:
        raise errors.StepTooLarge(h=h, estimate=estimate, tolerance=tolerance)
    if estimate > tolerance / 2:
        logger.warning(f"Stencil error estimate {estimate:.3g} is close to the tolerance {tolerance:g}")

    logger.info(f"Laplacian residual at h={h:g}: {rel_err:.3g} (h/2: {rel_err_half:.3g})")
    return LaplacianCheck(lhs, rhs, rel_err, h, estimate, reenumerate, rel_err_half)
