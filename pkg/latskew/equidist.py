"""Diagnostics of equidistribution modulo one: discrepancy, Weyl sums,
histograms and interval frequencies of the sk and rho streams.
"""

from collections.abc import Iterable, Sequence

import numpy as np

from latskew import errors
from latskew.models import ModOneSample, WeylReport, HistogramReport
from latskew.utils import compensated_sum


__all__ = [
    "reduce_mod_one",
    "star_discrepancy",
    "weyl_sums",
    "histogram",
    "interval_frequency",
    "abs_ratio_discrepancy"
]


def reduce_mod_one(raw: Iterable[float] | np.ndarray) -> ModOneSample:
    """Map every value into (-1/2, 1/2] by subtracting the nearest integer."""
    return ModOneSample.from_raw(raw)


def _star(points: np.ndarray) -> float:
    """D*_n of points in [0, 1]."""
    n = len(points)
    if n == 0:
        raise errors.EmptySample
    u = np.sort(points)
    i = np.arange(1, n + 1, dtype=np.float64)
    return float(max(np.max(i / n - u), np.max(u - (i - 1) / n)))


def star_discrepancy(sample: ModOneSample) -> float:
    """Star discrepancy of the sample after the shift by +1/2 to [0, 1)."""
    return _star(sample.shifted())


def weyl_sums(sample: ModOneSample, ms: Sequence[int]) -> WeylReport:
    """S_m = sum_j e(m x_j) for every nonzero frequency m.

    The summation is exactly rounded, so S_{-m} is the conjugate of S_m
    and reordering the sample leaves S_m unchanged.
    """
    if len(sample) == 0:
        raise errors.EmptySample
    if 0 in ms:
        raise errors.ZeroFrequency

    sums = np.array(
        [compensated_sum(np.exp(2j * np.pi * m * sample.values)) for m in ms],
        dtype=np.complex128
    )
    return WeylReport(tuple(ms), sums, len(sample))


def histogram(sample: ModOneSample, bins: int) -> HistogramReport:
    """Counts over left-open bins of the window and Pearson's statistic against uniform."""
    if bins < 2:
        raise errors.ConfigError("Histogram needs at least 2 bins.")
    n = len(sample)
    if n == 0:
        raise errors.EmptySample

    # rounding keeps grid points that sit on a bin edge in the lower bin
    position = np.round((sample.values + 0.5) * bins, 9)
    index = np.clip(np.ceil(position).astype(np.int64) - 1, 0, bins - 1)
    counts = np.bincount(index, minlength=bins)

    expected = n / bins
    chi_square = float(np.sum((counts - expected) ** 2) / expected)
    return HistogramReport(bins, counts, chi_square)


def interval_frequency(values: Iterable[float] | np.ndarray, alpha: float, beta: float) -> float:
    """Fraction of the values lying in the open interval (alpha, beta)."""
    values = np.asarray(values, dtype=np.float64)
    if len(values) == 0:
        raise errors.EmptySample
    if not alpha < beta:
        raise errors.ConfigError(f"Empty interval ({alpha}, {beta}).")
    return float(np.count_nonzero((values > alpha) & (values < beta))) / len(values)


def abs_ratio_discrepancy(rho: Iterable[float] | np.ndarray) -> float:
    """Star discrepancy of 2|rho|, which tends to the uniform law on [0, 1]."""
    values = np.asarray(rho, dtype=np.float64)
    return _star(np.minimum(2 * np.abs(values), 1.0))
