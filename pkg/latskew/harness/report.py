"""Static SVG histogram and Markdown summary of a report run."""

from dataclasses import dataclass
from xml.sax.saxutils import escape

from latskew import constants as const
from latskew.models import HistogramReport, GeometryReport, CountComparison, WeylReport


__all__ = ["ReportSummary", "render_histogram", "render_summary"]


@dataclass(frozen=True)
class ReportSummary:
    lattice: str
    max_norm: float
    n: int
    discrepancies: list[tuple[float, int, float, float]]
    weyl: WeylReport
    interval: tuple[float, float, float]
    counting: CountComparison
    geometry: GeometryReport


def render_histogram(hist: HistogramReport, title: str) -> str:
    """Bars over the window (-1/2, 1/2] with the uniform density as a dashed line."""
    width, height, margin = const.SVG_WIDTH, const.SVG_HEIGHT, const.SVG_MARGIN
    plot_w, plot_h = width - 2 * margin, height - 2 * margin
    expected = hist.n / hist.bins
    top = max(int(hist.counts.max()), expected, 1) * 1.1
    bar_w = plot_w / hist.bins

    def y_of(count: float) -> float:
        return margin + plot_h * (1 - count / top)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>{escape(title)}</title>',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for k, count in enumerate(hist.counts.tolist()):
        y = y_of(count)
        parts.append(
            f'<rect x="{margin + k * bar_w:.2f}" y="{y:.2f}" width="{bar_w:.2f}" '
            f'height="{margin + plot_h - y:.2f}" fill="steelblue" stroke="white" stroke-width="0.5"/>'
        )

    axis_y = margin + plot_h
    parts += [
        f'<line x1="{margin}" y1="{axis_y}" x2="{margin + plot_w}" y2="{axis_y}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{axis_y}" stroke="black"/>',
        f'<line x1="{margin}" y1="{y_of(expected):.2f}" x2="{margin + plot_w}" y2="{y_of(expected):.2f}" '
        f'stroke="crimson" stroke-dasharray="6,4"/>',
        f'<text x="{margin}" y="{axis_y + 16}" font-size="12" text-anchor="middle">-1/2</text>',
        f'<text x="{margin + plot_w / 2:.2f}" y="{axis_y + 16}" font-size="12" text-anchor="middle">0</text>',
        f'<text x="{margin + plot_w}" y="{axis_y + 16}" font-size="12" text-anchor="middle">1/2</text>',
        f'<text x="{margin - 4}" y="{y_of(expected):.2f}" font-size="12" text-anchor="end">{expected:.1f}</text>',
        f'<text x="{width / 2:.2f}" y="{margin / 2:.2f}" font-size="14" text-anchor="middle">{escape(title)}</text>',
        "</svg>",
    ]
    return const.LINE_TERMINATOR.join(parts) + const.LINE_TERMINATOR


def render_summary(summary: ReportSummary) -> str:
    nl = const.LINE_TERMINATOR
    alpha, beta, fraction = summary.interval
    lines = [
        f"# Skewness statistics for z = {summary.lattice}",
        "",
        f"Primitive vectors up to sign with |v| <= {summary.max_norm:g}: **{summary.n}**.",
        "",
        "## Star discrepancy",
        "",
        "| T | n | D*(sk) | D*(rho) |",
        "|---|---|---|---|",
        *(f"| {t:g} | {n} | {d_sk:.6f} | {d_rho:.6f} |" for t, n, d_sk, d_rho in summary.discrepancies),
        "",
        "## Weyl sums of sk",
        "",
        "| m | abs(S_m) / n |",
        "|---|---|",
        *(f"| {e['m']} | {e['normalized']:.3e} |" for e in summary.weyl.entries()),
        "",
        "## Signed ratio",
        "",
        f"Fraction of rho in ({alpha:g}, {beta:g}): {fraction:.6f} (uniform: {beta - alpha:.6f}).",
        "",
        "## Counting",
        "",
        f"#L_prim(T) = {summary.counting.count}, predicted {summary.counting.predicted:.2f}, "
        f"relative error {summary.counting.relative_error:.3e}.",
        "",
        "## Geometry",
        "",
        "| check | samples | violations |",
        "|---|---|---|",
        *(f"| {r.check.value} | {r.checked} | {r.violations} |" for r in summary.geometry.results),
    ]
    return nl.join(lines) + nl
