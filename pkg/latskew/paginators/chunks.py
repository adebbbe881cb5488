import math
from fractions import Fraction
from typing import Optional
from concurrent.futures import Executor, ProcessPoolExecutor
from collections.abc import Iterator

from loguru import logger

from .abc import ABCPaginator
from latskew import models as mdl, constants as const, errors, kernel
from latskew.utils import ordered_map


__all__ = ["ChunkPaginator", "BandPaginator", "chunk_ranges"]


def chunk_ranges(lattice: mdl.LatticeShape, limit: float, chunk: int) -> list[tuple[int, int]]:
    """Half-open c-ranges of width ``chunk`` covering |v|^2 <= limit."""
    stop = math.floor(math.sqrt(limit) / lattice.y) + 2
    return [(lo, min(lo + chunk, stop)) for lo in range(0, stop, chunk)]


class ChunkPaginator(ABCPaginator[mdl.Chunk]):
    """Paginator over the c-chunks of one norm region, in chunk order.

    With several workers the chunks are computed in a process pool, but
    they are still handed out in chunk order. A pool passed in is reused
    and left open.
    """
    def __init__(
        self,
        lattice: mdl.LatticeShape,
        outer: mdl.NormBound,
        inner: Optional[mdl.NormBound] = None,
        ranges: Optional[list[tuple[int, int]]] = None,
        workers: int = const.DEFAULT_WORKERS,
        chunk: int = const.DEFAULT_CHUNK,
        pool: Optional[Executor] = None
    ) -> None:
        self.lattice = lattice
        self.outer = outer
        self.inner = inner
        self.ranges = ranges
        self.workers = workers
        self.chunk = chunk
        self.pool = pool
        self.number = 0
        self.tasks: list[kernel.ChunkTask] = []
        self._results: Optional[Iterator[mdl.SampleTable]] = None

        self.complete_params()

    @classmethod
    def from_spec(cls, spec: mdl.EnumSpec, workers: int = const.DEFAULT_WORKERS) -> "ChunkPaginator":
        return cls(spec.lattice, spec.bound, None, spec.chunks(), workers, spec.chunk)

    def complete_params(self) -> None:
        if self.ranges is None:
            self.ranges = chunk_ranges(self.lattice, self.outer.limit, self.chunk)
        self.tasks = [
            kernel.ChunkTask(self.lattice, self.outer, self.inner, lo, hi)
            for lo, hi in self.ranges
        ]

    def next_chunk(self) -> mdl.Chunk:
        if self._results is None:
            self._results = ordered_map(kernel.run_task, self.tasks, self.workers, self.pool)
        try:
            table = next(self._results)
        except StopIteration:
            raise errors.LastChunk

        task = self.tasks[self.number]
        self.number += 1
        return mdl.Chunk(self.number - 1, task.c_lo, task.c_hi, table)

    def count(self) -> int:
        """Number of samples in the region, without building them."""
        return sum(ordered_map(kernel.run_count, self.tasks, self.workers, self.pool))

    def merged(self) -> mdl.SampleTable:
        """All chunks concatenated in chunk order, then sorted by (norm_sq, c, d)."""
        tables = [chunk.table for chunk in self]
        return mdl.SampleTable.concat(tables).sorted()

    def close(self) -> None:
        if self._results is not None and hasattr(self._results, "close"):
            self._results.close()


class BandPaginator(ABCPaginator[mdl.Chunk]):
    """Paginator over norm bands in increasing order.

    Band k holds the samples with L_{k-1} < |v|^2 <= L_k, already merged
    and sorted, so that concatenating the bands gives the order of a full
    enumeration. The last band ends at the bound of the spec itself.
    """
    def __init__(
        self,
        spec: mdl.EnumSpec,
        band_count: int = const.DEFAULT_BAND_COUNT,
        workers: int = const.DEFAULT_WORKERS
    ) -> None:
        self.spec = spec
        self.band_count = band_count
        self.workers = workers
        self.number = 0
        self.bounds: list[mdl.NormBound] = []
        self.pool: Optional[Executor] = None

        self.complete_params()

    def complete_params(self) -> None:
        if self.band_count < 1:
            raise errors.ConfigError("Band count must be positive.")
        final = self.spec.bound
        exact = self.spec.lattice.is_exact
        for k in range(1, self.band_count):
            limit = final.limit * k / self.band_count
            self.bounds.append(
                mdl.NormBound(limit, True, Fraction(limit) ** 2 if exact else None)
            )
        self.bounds.append(final)

    def next_chunk(self) -> mdl.Chunk:
        if self.number >= len(self.bounds):
            raise errors.LastChunk

        outer = self.bounds[self.number]
        inner = self.bounds[self.number - 1] if self.number else None
        ranges = chunk_ranges(self.spec.lattice, outer.limit, self.spec.chunk)
        if self.pool is None and self.workers > 1:
            self.pool = ProcessPoolExecutor(max_workers=self.workers)
        with ChunkPaginator(self.spec.lattice, outer, inner, ranges, self.workers, pool=self.pool) as paginator:
            table = paginator.merged()

        logger.debug(f"Band {self.number + 1}/{len(self.bounds)} holds {len(table)} samples")
        self.number += 1
        return mdl.Chunk(self.number - 1, ranges[0][0], ranges[-1][1], table)

    def close(self) -> None:
        if self.pool is not None:
            self.pool.shutdown()
            self.pool = None
