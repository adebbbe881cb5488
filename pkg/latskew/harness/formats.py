"""CSV encoding of enumerations and discrepancy tables."""

from pathlib import Path

import numpy as np

from latskew import constants as const, errors
from latskew.models import SampleTable
from latskew.typedefs import SampleRow
from latskew.utils import format_float


__all__ = ["render_samples", "sample_rows", "read_samples", "render_discrepancy"]


def render_samples(table: SampleTable) -> str:
    """Header and one row per sample; floats keep 17 significant digits."""
    lines = [",".join(const.CSV_HEADER)]
    columns = zip(
        table.c.tolist(), table.d.tolist(), table.a.tolist(), table.b.tolist(),
        table.norm_sq.tolist(), table.sk.tolist(), table.rho.tolist(), table.im.tolist()
    )
    for c, d, a, b, norm_sq, sk, rho, im in columns:
        lines.append(
            f"{c},{d},{a},{b},{format_float(norm_sq)},{format_float(sk)},"
            f"{format_float(rho)},{format_float(im)}"
        )
    return const.LINE_TERMINATOR.join(lines) + const.LINE_TERMINATOR


def read_samples(path: Path) -> dict[str, np.ndarray]:
    """Columns of a CSV written by ``render_samples``, keyed by header name."""
    try:
        with open(path, encoding="utf-8") as file:
            header = tuple(file.readline().strip().split(","))
            rows = [line for line in file.read().splitlines() if line.strip()]
    except OSError as e:
        raise errors.ConfigError(f"Unable to read {path}: {e.strerror}.")

    if header != const.CSV_HEADER:
        raise errors.ConfigError(f"Unexpected header in {path}: {','.join(header)}.")
    if not rows:
        return {name: np.empty(0, dtype=np.float64) for name in const.CSV_HEADER}

    try:
        data = np.loadtxt(rows, delimiter=",", dtype=np.float64, ndmin=2)
    except ValueError as e:
        raise errors.ConfigError(f"Malformed row in {path}: {e}.")
    return {name: data[:, i] for i, name in enumerate(const.CSV_HEADER)}


def render_discrepancy(rows: list[tuple[float, int, float, float]]) -> str:
    lines = [",".join(const.DISCREPANCY_HEADER)]
    for max_norm, n, d_sk, d_rho in rows:
        lines.append(f"{format_float(max_norm)},{n},{format_float(d_sk)},{format_float(d_rho)}")
    return const.LINE_TERMINATOR.join(lines) + const.LINE_TERMINATOR


def sample_rows(table: SampleTable) -> list[SampleRow]:
    names = const.CSV_HEADER
    columns = [getattr(table, name).tolist() for name in names]
    return [SampleRow(**dict(zip(names, row))) for row in zip(*columns)]  # type: ignore[typeddict-item]
