from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

import numpy as np

from latskew import errors, types
from latskew.typedefs import WeylEntry
from .samples import SampleTable


__all__ = ["ModOneSample", "WeylReport", "HistogramReport"]


@dataclass(frozen=True, eq=False)
class ModOneSample:
    """Values reduced to the fundamental window (-1/2, 1/2]."""
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if len(values) and not (np.all(values > -0.5) and np.all(values <= 0.5)):
            raise ValueError("Values must lie in the window (-1/2, 1/2].")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_raw(cls, raw: Iterable[float] | np.ndarray) -> ModOneSample:
        """Subtract the nearest integer; halves round down so that +1/2 is kept."""
        values = np.asarray(raw, dtype=np.float64)
        if not np.all(np.isfinite(values)):
            index = int(np.flatnonzero(~np.isfinite(values))[0])
            raise errors.NonFinite(index=index, value=values[index])

        reduced = values - np.ceil(values - 0.5)
        reduced[reduced <= -0.5] += 1.0
        reduced[reduced > 0.5] -= 1.0
        return cls(reduced)

    @classmethod
    def from_table(cls, table: SampleTable, field: types.SampleField) -> ModOneSample:
        return cls.from_raw(getattr(table, field.value))

    def __len__(self) -> int:
        return len(self.values)

    def shifted(self) -> np.ndarray:
        """Values moved to [0, 1); the window end 1/2 is identified with -1/2."""
        shifted = self.values + 0.5
        shifted[shifted >= 1.0] = 0.0
        return shifted


@dataclass(frozen=True, eq=False)
class WeylReport:
    ms: tuple[int, ...]
    sums: np.ndarray
    n: int

    @property
    def normalized(self) -> np.ndarray:
        return np.abs(self.sums) / self.n

    def __getitem__(self, m: int) -> complex:
        return complex(self.sums[self.ms.index(m)])

    def entries(self) -> list[WeylEntry]:
        return [
            WeylEntry(m=m, re=float(s.real), im=float(s.imag), normalized=float(abs(s)) / self.n)
            for m, s in zip(self.ms, self.sums.tolist())
        ]


@dataclass(frozen=True, eq=False)
class HistogramReport:
    """Bin k covers (-1/2 + k/bins, -1/2 + (k+1)/bins]."""
    bins: int
    counts: np.ndarray
    chi_square: float

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def edges(self) -> np.ndarray:
        return np.linspace(-0.5, 0.5, self.bins + 1)

    @property
    def max_deviation(self) -> float:
        return float(np.max(np.abs(self.counts - self.n / self.bins)))
