from __future__ import annotations

from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Optional
from collections.abc import Iterator, Sequence

import numpy as np

from .vectors import PrimitiveVector, Completion, OrbitSample


__all__ = ["SampleTable"]


_INT_COLUMNS = ("c", "d", "a", "b")
_FLOAT_COLUMNS = ("norm_sq", "comp_sq", "sk", "rho", "im")
_EXACT_COLUMNS = ("norm_num", "skew_num", "comp_num")


@dataclass(frozen=True, eq=False)
class SampleTable:
    """Columnar sequence of orbit samples.

    In exact mode ``norm_num``, ``skew_num`` and ``comp_num`` hold the integers
    K, S, W with |v|^2 = K/D, sk = S/K and |v'|^2 = W/D, where D is
    ``denominator``. Their dtype is int64 or, when int64 could overflow, object.
    """
    c: np.ndarray
    d: np.ndarray
    a: np.ndarray
    b: np.ndarray
    norm_sq: np.ndarray
    comp_sq: np.ndarray
    sk: np.ndarray
    rho: np.ndarray
    im: np.ndarray
    norm_num: Optional[np.ndarray] = None
    skew_num: Optional[np.ndarray] = None
    comp_num: Optional[np.ndarray] = None
    denominator: int = 1
    area_exact: Optional[Fraction] = None

    @classmethod
    def empty(cls, exact: bool = False, denominator: int = 1,
              area_exact: Optional[Fraction] = None) -> SampleTable:
        ints = {name: np.empty(0, dtype=np.int64) for name in _INT_COLUMNS}
        floats = {name: np.empty(0, dtype=np.float64) for name in _FLOAT_COLUMNS}
        nums = {name: np.empty(0, dtype=np.int64) if exact else None for name in _EXACT_COLUMNS}
        return cls(**ints, **floats, **nums, denominator=denominator, area_exact=area_exact)

    @classmethod
    def concat(cls, tables: Sequence[SampleTable]) -> SampleTable:
        """Concatenate tables in the given order."""
        if not tables:
            return cls.empty()
        first = tables[0]
        columns = {}
        for name in _INT_COLUMNS + _FLOAT_COLUMNS:
            columns[name] = np.concatenate([getattr(t, name) for t in tables])
        for name in _EXACT_COLUMNS:
            parts = [getattr(t, name) for t in tables]
            if first.is_exact:
                dtype = object if any(p.dtype == object for p in parts) else np.int64
                columns[name] = np.concatenate([p.astype(dtype) for p in parts])
            else:
                columns[name] = None
        return cls(**columns, denominator=first.denominator, area_exact=first.area_exact)

    @property
    def is_exact(self) -> bool:
        return self.norm_num is not None

    def __len__(self) -> int:
        return len(self.c)

    def select(self, index: np.ndarray) -> SampleTable:
        """Rows picked by a boolean mask or an integer index array."""
        columns = {
            f.name: getattr(self, f.name)[index]
            for f in fields(self)
            if isinstance(getattr(self, f.name), np.ndarray)
        }
        return replace(self, **columns)

    def sorted(self) -> SampleTable:
        """Stable order by (norm_sq, c, d); float ties are broken by (c, d)."""
        order = np.lexsort((self.d, self.c, self.norm_sq))
        return self.select(order)

    def equals(self, other: SampleTable) -> bool:
        """Bitwise equality of all columns."""
        if len(self) != len(other) or self.is_exact != other.is_exact:
            return False
        names = _INT_COLUMNS + _FLOAT_COLUMNS + (_EXACT_COLUMNS if self.is_exact else ())
        return all(np.array_equal(getattr(self, n), getattr(other, n)) for n in names)

    def pairs(self) -> set[tuple[int, int]]:
        return set(zip(self.c.tolist(), self.d.tolist()))

    def __getitem__(self, i: int) -> OrbitSample:
        vec = PrimitiveVector.model_construct(c=int(self.c[i]), d=int(self.d[i]))
        comp = Completion(int(self.a[i]), int(self.b[i]))
        if not self.is_exact:
            return OrbitSample(
                vec, comp, float(self.norm_sq[i]), float(self.sk[i]),
                float(self.rho[i]), float(self.im[i])
            )

        k, s = int(self.norm_num[i]), int(self.skew_num[i])  # type: ignore[index]
        norm_sq = Fraction(k, self.denominator)
        im = self.area_exact / norm_sq if self.area_exact is not None else float(self.im[i])
        return OrbitSample(vec, comp, norm_sq, Fraction(s, k), float(self.rho[i]), im)

    def __iter__(self) -> Iterator[OrbitSample]:
        for i in range(len(self)):
            yield self[i]
