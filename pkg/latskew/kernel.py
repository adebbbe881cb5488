"""Vectorized computation of one c-chunk of an enumeration.

Candidates (c, d) come from the quadratic |cz + d|^2 <= L solved per c,
are filtered by gcd and canonical sign, completed by an array version of
the extended Euclidean algorithm and shifted into the skewness window in
a single step. In exact mode every comparison is done on the integers
K = D|v|^2, S = D<v', v> and W = D|v'|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from loguru import logger

from latskew import constants as const, errors
from latskew.models import LatticeShape, NormBound, SampleTable


__all__ = [
    "ChunkTask",
    "coordinate_bound",
    "exact_dtype",
    "bezout_array",
    "compute_chunk",
    "count_chunk",
    "run_task",
    "run_count"
]


@dataclass(frozen=True)
class ChunkTask:
    """Picklable unit of work: c in [c_lo, c_hi), outer region minus inner."""
    lattice: LatticeShape
    outer: NormBound
    inner: Optional[NormBound]
    c_lo: int
    c_hi: int


def coordinate_bound(lattice: LatticeShape, limit: float) -> int:
    """Largest |c| or |d| a vector with |v|^2 <= limit can have."""
    max_norm = math.sqrt(limit)
    c_max = math.floor(max_norm / lattice.y) + 1
    return max(c_max, math.ceil(max_norm + c_max * abs(lattice.x)) + 1)


def exact_dtype(lattice: LatticeShape, coord: int) -> type:
    """int64 when every exact numerator stays below 2^62, object otherwise."""
    parts = lattice.exact
    if parts is None:
        return np.int64
    scale = max(abs(parts.norm_num), abs(parts.x_num), parts.denominator)
    if 16 * coord * coord * scale >= const.INT64_SAFE:
        return object
    return np.int64


def _segments(
    lattice: LatticeShape, cs: np.ndarray, outer: NormBound, inner: Optional[NormBound]
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-c integer d-intervals covering the region; returns (c, start, count)."""
    cx = cs * lattice.x
    cy_sq = (cs * lattice.y) ** 2

    radius = np.sqrt(np.maximum(outer.limit - cy_sq, 0.0))
    lo = np.floor(-cx - radius).astype(np.int64) - 1
    hi = np.ceil(-cx + radius).astype(np.int64) + 1
    hi = np.where(cy_sq > outer.limit * (1 + const.BOUNDARY_REL_TOL), lo - 1, hi)
    if inner is None:
        return cs, lo, hi - lo + 1

    # d strictly inside the inner region by at least one step is skipped
    inner_radius = np.sqrt(np.maximum(inner.limit - cy_sq, 0.0))
    skip_lo = np.ceil(-cx - inner_radius).astype(np.int64) + 1
    skip_hi = np.floor(-cx + inner_radius).astype(np.int64) - 1
    has_hole = skip_lo <= skip_hi

    left_hi = np.where(has_hole, np.minimum(hi, skip_lo - 1), hi)
    right_lo = np.where(has_hole, np.maximum(lo, skip_hi + 1), hi + 1)
    right_lo = np.maximum(right_lo, left_hi + 1)
    return (
        np.concatenate([cs, cs]),
        np.concatenate([lo, right_lo]),
        np.concatenate([left_hi - lo + 1, hi - right_lo + 1])
    )


def _candidates(
    lattice: LatticeShape, outer: NormBound, inner: Optional[NormBound], c_lo: int, c_hi: int
) -> tuple[np.ndarray, np.ndarray]:
    """Canonical coprime pairs of the chunk whose d lies in the search intervals."""
    cs = np.arange(c_lo, c_hi, dtype=np.int64)
    c, start, count = _segments(lattice, cs, outer, inner)
    count = np.maximum(count, 0)

    total = int(count.sum())
    offsets = np.repeat(np.cumsum(count) - count, count)
    c = np.repeat(c, count)
    d = np.repeat(start, count) + (np.arange(total, dtype=np.int64) - offsets)

    keep = (np.gcd(c, d) == 1) & ((c > 0) | (d == 1))
    return c[keep], d[keep]


def _norms(
    lattice: LatticeShape, c: np.ndarray, d: np.ndarray, dtype: type
) -> tuple[np.ndarray, Optional[np.ndarray]]:
    """|v|^2 as float and, in exact mode, the numerator K over D."""
    parts = lattice.exact
    if parts is None:
        re = d + c * lattice.x
        im = c * lattice.y
        return re * re + im * im, None

    cc, dd = c.astype(dtype), d.astype(dtype)
    k = cc * cc * parts.norm_num + 2 * cc * dd * parts.x_num + dd * dd * parts.denominator
    return k.astype(np.float64) / parts.denominator, k


def _admitted(
    lattice: LatticeShape,
    outer: NormBound,
    inner: Optional[NormBound],
    norm_sq: np.ndarray,
    norm_num: Optional[np.ndarray]
) -> np.ndarray:
    denominator = lattice.exact.denominator if lattice.exact is not None else 1
    mask = outer.contains(norm_sq, norm_num, denominator)
    if inner is not None:
        mask &= ~inner.contains(norm_sq, norm_num, denominator)
    return mask


def bezout_array(c: np.ndarray, d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Extended Euclid over arrays: (a, b) with ad - bc = 1 for coprime rows.

    Finished rows drop out of the working set, so the cost follows the
    number of rows still being reduced.
    """
    r0, r1 = c.astype(np.int64), d.astype(np.int64)
    s0, s1 = np.ones_like(r0), np.zeros_like(r0)  # coefficients of c
    t0, t1 = np.zeros_like(r0), np.ones_like(r0)  # coefficients of d

    active = np.flatnonzero(r1 != 0)
    while active.size:
        q = r0[active] // r1[active]
        r0[active], r1[active] = r1[active], r0[active] - q * r1[active]
        s0[active], s1[active] = s1[active], s0[active] - q * s1[active]
        t0[active], t1[active] = t1[active], t0[active] - q * t1[active]
        active = active[r1[active] != 0]

    # s0 c + t0 d = r0 = +-1
    return t0 * r0, -s0 * r0


def _complete_exact(
    lattice: LatticeShape,
    c: np.ndarray,
    d: np.ndarray,
    k: np.ndarray,
    dtype: type
) -> tuple[np.ndarray, ...]:
    parts = lattice.exact
    p, rn, den = parts.x_num, parts.norm_num, parts.denominator
    a, b = bezout_array(c, d)
    cc, dd, aa, bb = (v.astype(dtype) for v in (c, d, a, b))

    s = aa * cc * rn + (aa * dd + bb * cc) * p + bb * dd * den
    # n = ceil(sk - 1/2) with sk = S/K
    n = -((k - 2 * s) // (2 * k))
    aa, bb, s = aa - n * cc, bb - n * dd, s - n * k
    w = aa * aa * rn + 2 * aa * bb * p + bb * bb * den

    sk = s.astype(np.float64) / k.astype(np.float64)
    comp_sq = w.astype(np.float64) / den
    return aa.astype(np.int64), bb.astype(np.int64), s, w, sk, comp_sq, s >= 0


def _complete_float(
    lattice: LatticeShape, c: np.ndarray, d: np.ndarray, norm_sq: np.ndarray
) -> tuple[np.ndarray, ...]:
    x, y = lattice.x, lattice.y
    re, im = d + c * x, c * y
    a, b = bezout_array(c, d)

    def skew(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return ((a * x + b) * re + a * y * im) / norm_sq

    sk = skew(a, b)
    n = np.ceil(sk - 0.5).astype(np.int64)
    a, b = a - n * c, b - n * d
    sk = skew(a, b)

    # rounding can leave a row one step outside the window
    for _ in range(3):
        step = (sk > 0.5).astype(np.int64) - (sk <= -0.5).astype(np.int64)
        if not step.any():
            break
        a, b = a - step * c, b - step * d
        sk = skew(a, b)

    comp_sq = (a * x + b) ** 2 + (a * y) ** 2
    return a, b, sk, comp_sq, sk >= 0


def compute_chunk(
    lattice: LatticeShape,
    outer: NormBound,
    inner: Optional[NormBound],
    c_lo: int,
    c_hi: int
) -> SampleTable:
    """Samples with c in [c_lo, c_hi) inside ``outer`` and outside ``inner``.

    Rows come in generation order; the caller sorts after merging chunks.
    """
    coord = coordinate_bound(lattice, outer.limit)
    if coord > const.INT_GUARD:
        raise errors.OverflowGuard(bound=coord, limit=const.INT_GUARD)
    dtype = exact_dtype(lattice, coord)

    c, d = _candidates(lattice, outer, inner, c_lo, c_hi)
    norm_sq, k = _norms(lattice, c, d, dtype)
    keep = _admitted(lattice, outer, inner, norm_sq, k)
    c, d, norm_sq = c[keep], d[keep], norm_sq[keep]

    if lattice.exact is not None:
        k = k[keep]
        a, b, s, w, sk, comp_sq, acute = _complete_exact(lattice, c, d, k, dtype)
        exact = {"norm_num": k, "skew_num": s, "comp_num": w}
    else:
        a, b, sk, comp_sq, acute = _complete_float(lattice, c, d, norm_sq)
        exact = {}

    ratio = np.sqrt(comp_sq / norm_sq)
    logger.debug(f"Chunk c=[{c_lo}, {c_hi}) produced {len(c)} samples")
    return SampleTable(
        c=c, d=d, a=a, b=b,
        norm_sq=norm_sq,
        comp_sq=comp_sq,
        sk=sk,
        rho=np.where(acute, ratio, -ratio),
        im=lattice.area / norm_sq,
        **exact,
        denominator=lattice.exact.denominator if lattice.exact is not None else 1,
        area_exact=lattice.area_exact
    )


def count_chunk(
    lattice: LatticeShape,
    outer: NormBound,
    inner: Optional[NormBound],
    c_lo: int,
    c_hi: int
) -> int:
    """Number of samples ``compute_chunk`` would return, without completions."""
    coord = coordinate_bound(lattice, outer.limit)
    if coord > const.INT_GUARD:
        raise errors.OverflowGuard(bound=coord, limit=const.INT_GUARD)

    c, d = _candidates(lattice, outer, inner, c_lo, c_hi)
    norm_sq, k = _norms(lattice, c, d, exact_dtype(lattice, coord))
    return int(np.count_nonzero(_admitted(lattice, outer, inner, norm_sq, k)))


def run_task(task: ChunkTask) -> SampleTable:
    return compute_chunk(task.lattice, task.outer, task.inner, task.c_lo, task.c_hi)


def run_count(task: ChunkTask) -> int:
    return count_chunk(task.lattice, task.outer, task.inner, task.c_lo, task.c_hi)
