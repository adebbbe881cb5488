from pathlib import Path
from typing import Optional

import numpy as np
from loguru import logger

from .abc import ABCHarness, ABCWriter
from .formats import render_samples, read_samples, render_discrepancy, sample_rows
from .report import ReportSummary, render_histogram, render_summary
from .writer import OutputWriter
from latskew import models as mdl, constants as const, errors, types
from latskew.equidist import (
    reduce_mod_one,
    star_discrepancy,
    weyl_sums,
    histogram,
    interval_frequency,
    abs_ratio_discrepancy
)
from latskew.lattice import check_table
from latskew.orbits import enumerate_primitive, count_vs_asymptotic, orbit_count_scaling
from latskew.spectral import eval_v, eisenstein_reference, laplacian_residual
from latskew.utils import timed


__all__ = [
    "EnumerateCommand",
    "StatsCommand",
    "OrbitCountCommand",
    "SeriesCommand",
    "ReportCommand"
]


class BaseHarness(ABCHarness):
    """Base harness holding the configuration and the output sink."""
    def __init__(self, config: mdl.RunConfig, writer: Optional[ABCWriter] = None) -> None:
        self.config = config
        self.writer: ABCWriter = writer or OutputWriter(config.out)
        self._result: Optional[mdl.EnumResult] = None

    def run(self) -> None:
        """Execute the configured command."""
        logger.info(f"Running {self.config.command.value} for z = {self.lattice_label}")
        getattr(self, f"cmd_{self.config.command.name.lower()}")()

    @property
    def lattice_label(self) -> str:
        lattice = self.config.lattice
        return f"{lattice.x:g}+{lattice.y:g}i"

    def enumeration(self, spec: Optional[mdl.EnumSpec] = None) -> mdl.EnumResult:
        """Enumeration of the configured spec, computed once."""
        if spec is not None:
            return enumerate_primitive(spec, self.config.workers)
        if self._result is None:
            self._result = enumerate_primitive(self.config.spec(), self.config.workers)
        return self._result

    def count_prediction(self, canonical: int) -> Optional[mdl.CountComparison]:
        """Counting comparison for the configured bound; by epsilon T = sqrt(area / eps)."""
        config = self.config
        if config.max_norm is None and config.epsilon is None:
            return None
        spec = config.spec()
        by_norm = mdl.EnumSpec.by_norm(spec.lattice, spec.max_norm, spec.chunk)
        return count_vs_asymptotic(by_norm, canonical=canonical)


class EnumerateCommand(BaseHarness):
    """Command writing every sample as CSV or JSON."""
    @timed("enumerate command")
    def cmd_enumerate(self) -> None:
        result = self.enumeration()
        if self.config.format is types.OutputFormat.JSON:
            document = mdl.EnumerateDocument(
                n=result.count, predicted=result.predicted, samples=sample_rows(result.samples)
            )
            self.writer.emit(document.dump())
            return
        self.writer.emit(render_samples(result.samples))


class StatsCommand(BaseHarness):
    """Commands for equidistribution statistics."""
    def _columns(self) -> tuple[np.ndarray, np.ndarray]:
        if self.config.input is not None:
            columns = read_samples(self.config.input)
            return columns["sk"], columns["rho"]
        samples = self.enumeration().samples
        return samples.sk, samples.rho

    def stats_document(self, sk: np.ndarray, rho: np.ndarray) -> mdl.StatsDocument:
        config = self.config
        sk_sample, rho_sample = reduce_mod_one(sk), reduce_mod_one(rho)

        discrepancy_sk = star_discrepancy(sk_sample)
        weyl = weyl_sums(sk_sample, config.m_list)
        hist = histogram(sk_sample, config.bins)
        counting = self.count_prediction(len(sk_sample))
        alpha, beta = config.interval

        return mdl.StatsDocument(
            n=len(sk_sample),
            discrepancy_sk=discrepancy_sk,
            discrepancy_rho=star_discrepancy(rho_sample),
            weyl=[mdl.WeylItem(**entry) for entry in weyl.entries()],
            histogram=mdl.HistogramItem(
                bins=hist.bins, counts=hist.counts.tolist(), chi_square=hist.chi_square
            ),
            count_prediction=mdl.CountItem(
                count=counting.count,
                predicted=counting.predicted,
                relative_error=counting.relative_error
            ) if counting is not None else None,
            discrepancy_abs_rho=abs_ratio_discrepancy(rho),
            interval_rho=mdl.IntervalItem(
                alpha=alpha, beta=beta, fraction=interval_frequency(rho, alpha, beta)
            )
        )

    @timed("stats command")
    def cmd_stats(self) -> None:
        document = self.stats_document(*self._columns())
        logger.info(f"D*(sk) = {document.discrepancy_sk:.6f} over {document.n} samples")
        self.writer.emit(document.dump())

    @timed("weyl command")
    def cmd_weyl(self) -> None:
        sk, _ = self._columns()
        sample = reduce_mod_one(sk)
        report = weyl_sums(sample, self.config.m_list)
        document = mdl.WeylDocument(
            n=report.n, weyl=[mdl.WeylItem(**entry) for entry in report.entries()]
        )
        self.writer.emit(document.dump())


class OrbitCountCommand(BaseHarness):
    """Command counting cosets above a height threshold."""
    @timed("orbit-count command")
    def cmd_orbit_count(self) -> None:
        config = self.config
        grid = config.eps_grid or (config.epsilon,)
        if not config.lattice.is_exact:
            grid = tuple(float(e) for e in grid)  # type: ignore[arg-type]

        rows = orbit_count_scaling(config.lattice, grid, config.workers, config.chunk)  # type: ignore[arg-type]
        document = mdl.OrbitCountDocument(
            rows=[mdl.OrbitCountItem(epsilon=r.epsilon, count=r.count, scaled=r.scaled) for r in rows]
        )
        self.writer.emit(document.dump())


class SeriesCommand(BaseHarness):
    """Command evaluating the truncated series V_m(z, s)."""
    @timed("series command")
    def cmd_series(self) -> None:
        config = self.config
        s = complex(*config.s)  # type: ignore[misc]
        point = eval_v(config.lattice, config.m, s, config.trunc, workers=config.workers)  # type: ignore[arg-type]

        reference = None
        if config.lattice.is_square() and config.m == 0 and s.imag == 0:
            reference = eisenstein_reference(s.real)

        laplacian = None
        if config.laplacian_check:
            if s.imag != 0:
                raise errors.ConfigError("The Laplacian check needs a real s.")
            check = laplacian_residual(
                config.lattice, config.m, s.real, config.trunc, config.h,  # type: ignore[arg-type]
                tolerance=config.tolerance, reenumerate=not config.fixed_cosets,
                workers=config.workers
            )
            laplacian = mdl.LaplacianItem(
                lhs=(check.lhs.real, check.lhs.imag), rhs=(check.rhs.real, check.rhs.imag),
                rel_err=check.rel_err, h=check.h, estimate=check.estimate
            )

        document = mdl.SeriesDocument(
            m=point.m, s=(point.sigma, point.t), trunc=point.trunc,
            value=(point.value.real, point.value.imag), tail_bound=point.tail_bound,
            terms=point.terms, reference=reference, laplacian_check=laplacian
        )
        self.writer.emit(document.dump())


class ReportCommand(BaseHarness):
    """Command writing the histogram, discrepancy table and summary files."""
    def _grid(self) -> list:
        config = self.config
        top = config.spec().max_norm if config.epsilon is not None else (
            config.max_norm or const.DEFAULT_REPORT_NORM
        )
        if config.t_grid:
            return sorted(config.t_grid)
        return [top * fraction for fraction in const.REPORT_T_FRACTIONS]

    @timed("report command")
    def cmd_report(self) -> None:
        config = self.config
        lattice = config.lattice
        grid = self._grid()
        spec = config.spec(max(grid))
        samples = self.enumeration(spec).samples
        if not len(samples):
            raise errors.EmptySample

        rows = []
        for max_norm in grid:
            bound = mdl.EnumSpec.by_norm(lattice, max_norm).bound
            subset = samples.select(bound.contains(samples.norm_sq, samples.norm_num, samples.denominator))
            if not len(subset):
                raise errors.EmptySample
            rows.append((
                float(max_norm), len(subset),
                star_discrepancy(reduce_mod_one(subset.sk)),
                star_discrepancy(reduce_mod_one(subset.rho))
            ))

        sk_sample = reduce_mod_one(samples.sk)
        alpha, beta = config.interval
        summary = ReportSummary(
            lattice=self.lattice_label,
            max_norm=spec.max_norm,
            n=len(samples),
            discrepancies=rows,
            weyl=weyl_sums(sk_sample, config.m_list),
            interval=(alpha, beta, interval_frequency(samples.rho, alpha, beta)),
            counting=count_vs_asymptotic(spec, canonical=len(samples)),
            geometry=check_table(lattice, samples)
        )

        directory = config.out or Path(const.REPORT_DIR)
        title = f"sk over primitive vectors, z = {self.lattice_label}, T = {spec.max_norm:g}"
        paths = (
            self.writer.write(directory / const.REPORT_SVG, render_histogram(histogram(sk_sample, config.bins), title)),
            self.writer.write(directory / const.REPORT_CSV, render_discrepancy(rows)),
            self.writer.write(directory / const.REPORT_MD, render_summary(summary)),
        )
        for path in paths:
            self.writer.announce(path)
