"""Enumeration of primitive vectors |v| <= T, equivalently of the cosets
of the cusp stabilizer with Im(gamma z) > eps, and the counts built on it.
"""

from collections.abc import Callable, Sequence
from typing import Union

from loguru import logger

from latskew import constants as const, errors, kernel, types
from latskew.models import (
    LatticeShape,
    EnumSpec,
    EnumResult,
    OrbitSample,
    SampleTable,
    CountComparison,
    OrbitCount
)
from latskew.paginators import ChunkPaginator, BandPaginator
from latskew.typedefs import Real
from latskew.utils import timed


__all__ = [
    "predicted_count",
    "check_overflow",
    "enumerate_primitive",
    "stream",
    "count_primitive",
    "count_vs_asymptotic",
    "orbit_count_scaling"
]


def predicted_count(lattice: LatticeShape, max_norm: float) -> float:
    """Asymptotic number of +-classes, (1 / 2 zeta(2)) (pi / area) T^2 = 3 T^2 / (pi area)."""
    return const.ORBIT_SCALING_LIMIT * max_norm * max_norm / lattice.area


def check_overflow(spec: EnumSpec) -> None:
    """Raise ``OverflowGuard`` when the coordinates would pass 2^30."""
    coord = kernel.coordinate_bound(spec.lattice, spec.bound.limit)
    if coord > const.INT_GUARD:
        raise errors.OverflowGuard(bound=coord, limit=const.INT_GUARD)
    if kernel.exact_dtype(spec.lattice, coord) is object:
        logger.warning(
            f"Exact numerators may exceed int64 for coordinates up to {coord}; "
            f"falling back to arbitrary precision integers"
        )


@timed("enumerate")
def enumerate_primitive(spec: EnumSpec, workers: int = const.DEFAULT_WORKERS) -> EnumResult:
    """All canonical primitive vectors of the spec, sorted by (|v|^2, c, d).

    By norm the bound is inclusive, |v| <= T. By epsilon it is strict,
    Im(gamma z) > eps, that is |v|^2 < area / eps. The output does not
    depend on ``spec.chunk`` or on ``workers``.

    :param spec: Lattice and bound to enumerate
    :param workers: Number of worker processes
    """
    check_overflow(spec)
    with ChunkPaginator.from_spec(spec, workers) as paginator:
        samples = paginator.merged()

    logger.info(f"Enumerated {len(samples)} primitive vectors with |v| <= {spec.max_norm:g}")
    return EnumResult(samples, predicted_count(spec.lattice, spec.max_norm))


def stream(
    spec: EnumSpec,
    callback: Union[Callable[[OrbitSample], None], Callable[[SampleTable], None]],
    *,
    workers: int = const.DEFAULT_WORKERS,
    band_count: int = const.DEFAULT_BAND_COUNT,
    batched: bool = False
) -> int:
    """Feed samples to ``callback`` in merged order, one norm band in memory at a time.

    With ``batched`` the callback gets every band as a ``SampleTable``,
    otherwise it is called once per ``OrbitSample``. Returns the sample count.
    """
    check_overflow(spec)
    total = 0
    with BandPaginator(spec, band_count, workers) as paginator:
        for band in paginator:
            total += len(band.table)
            if batched:
                callback(band.table)  # type: ignore[arg-type]
                continue
            for sample in band.table:
                callback(sample)  # type: ignore[arg-type]
    return total


def count_primitive(spec: EnumSpec, workers: int = const.DEFAULT_WORKERS) -> int:
    """Size of ``enumerate_primitive(spec)`` without building the samples."""
    check_overflow(spec)
    with ChunkPaginator.from_spec(spec, workers) as paginator:
        return paginator.count()


def count_vs_asymptotic(
    spec: EnumSpec, workers: int = const.DEFAULT_WORKERS, canonical: int | None = None
) -> CountComparison:
    """Compare #L_prim(T) with (1 / zeta(2)) (pi / area) T^2.

    L_prim(T) holds both v and -v, so the count is twice the number of
    canonical samples.

    :param spec: By-norm enumeration spec
    :param workers: Number of worker processes
    :param canonical: Number of canonical samples, when already known
    """
    if spec.mode is not types.EnumMode.BY_NORM:
        raise errors.ConfigError("Count comparison needs a by-norm spec.")

    if canonical is None:
        canonical = count_primitive(spec, workers)
    count = 2 * canonical
    predicted = 2 * predicted_count(spec.lattice, spec.max_norm)
    return CountComparison(count, predicted, abs(count - predicted) / predicted)


@timed("orbit-count")
def orbit_count_scaling(
    lattice: LatticeShape,
    eps_grid: Sequence[Real],
    workers: int = const.DEFAULT_WORKERS,
    chunk: int = const.DEFAULT_CHUNK
) -> list[OrbitCount]:
    """N(eps) = #{cosets with Im(gamma z) > eps} and eps * N(eps) along a grid.

    For +-classes eps * N(eps) tends to 3/pi whatever the lattice.
    """
    if any(e <= 0 for e in eps_grid):
        raise errors.ConfigError("Epsilon values must be positive.")
    if any(a <= b for a, b in zip(eps_grid, eps_grid[1:])):
        raise errors.ConfigError("Epsilon grid must be strictly decreasing.")

    rows = []
    for epsilon in eps_grid:
        count = count_primitive(EnumSpec.by_epsilon(lattice, epsilon, chunk), workers)
        rows.append(OrbitCount(float(epsilon), count, float(epsilon) * count))
        logger.debug(f"N({float(epsilon):g}) = {count}")
    return rows

