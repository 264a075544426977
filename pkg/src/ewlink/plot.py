"""Static SVG chart of SNR / SJR versus range.

The SVG is assembled as text with fixed-precision coordinates, so identical
sweeps always produce identical bytes.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from .errors import UsageError
from .scenario import SweepRow

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")

WIDTH, HEIGHT = 960, 600
LEFT, RIGHT, TOP, BOTTOM = 80, 250, 60, 70


@dataclass(frozen=True)
class PlotSpec:
    output: Path | str | None = None
    log_x: bool = True
    threshold_db: float = 0.0
    title: str = "SNR and SJR versus range"


@dataclass(frozen=True)
class Series:
    label: str
    metric: str
    target: str
    ys: tuple[float, ...]
    color: str
    dashed: bool


def collect_series(rows: Sequence[SweepRow]) -> tuple[list[float], list[Series]]:
    """Pull per-target SNR and (if jammed) SJR series out of sweep rows."""
    if not rows:
        raise UsageError("nothing to plot: sweep produced no rows")
    xs = [r.range_km for r in rows]
    series = []
    for i, cell in enumerate(rows[0].cells):
        color = COLORS[i % len(COLORS)]
        sigma = f"σ={cell.rcs_m2:g} m²"
        series.append(
            Series(f"{cell.name} SNR ({sigma})", "snr", cell.name, tuple(r.cells[i].snr for r in rows), color, False)
        )
        if all(r.cells[i].sjr is not None for r in rows):
            series.append(
                Series(f"{cell.name} SJR ({sigma})", "sjr", cell.name, tuple(r.cells[i].sjr for r in rows), color, True)
            )
    return xs, series


def _nice_step(span: float) -> float:
    raw = span / 8.0
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if raw <= mult * mag:
            return mult * mag
    return 10.0 * mag


def _f(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def svg_chart(rows: Sequence[SweepRow], spec: PlotSpec = PlotSpec()) -> str:
    xs, series = collect_series(rows)
    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM

    if spec.log_x:
        lo_dec = math.floor(math.log10(min(xs)))
        hi_dec = math.ceil(math.log10(max(xs)))
        if hi_dec == lo_dec:
            hi_dec += 1
        x_lo, x_hi = float(lo_dec), float(hi_dec)
        x_tf = math.log10
        x_ticks = [10.0**d for d in range(lo_dec, hi_dec + 1)]
    else:
        step = _nice_step(max(xs) - min(xs) or 1.0)
        x_lo = math.floor(min(xs) / step) * step
        x_hi = math.ceil(max(xs) / step) * step
        if x_hi == x_lo:
            x_hi += step
        x_tf = float
        x_ticks = [x_lo + i * step for i in range(int(round((x_hi - x_lo) / step)) + 1)]

    ys = [y for s in series for y in s.ys] + [spec.threshold_db]
    y_step = _nice_step(max(ys) - min(ys) or 1.0)
    y_lo = math.floor(min(ys) / y_step) * y_step
    y_hi = math.ceil(max(ys) / y_step) * y_step
    if y_hi == y_lo:
        y_hi += y_step
    y_ticks = [y_lo + i * y_step for i in range(int(round((y_hi - y_lo) / y_step)) + 1)]

    def px(x: float) -> float:
        return LEFT + (x_tf(x) - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="Helvetica, Arial, sans-serif">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{_f(LEFT + plot_w / 2)}" y="32" text-anchor="middle" font-size="18">{escape(spec.title)}</text>',
    ]

    out.append('<g class="grid" stroke="#dddddd" stroke-width="1">')
    for t in x_ticks:
        out.append(f'<line x1="{_f(px(t))}" y1="{TOP}" x2="{_f(px(t))}" y2="{TOP + plot_h}"/>')
    for t in y_ticks:
        out.append(f'<line x1="{LEFT}" y1="{_f(py(t))}" x2="{LEFT + plot_w}" y2="{_f(py(t))}"/>')
    out.append("</g>")

    out.append('<g class="axes" font-size="12" fill="#000000">')
    out.append(f'<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#000000"/>')
    for t in x_ticks:
        out.append(f'<text x="{_f(px(t))}" y="{TOP + plot_h + 18}" text-anchor="middle">{t:g}</text>')
    for t in y_ticks:
        out.append(f'<text x="{LEFT - 8}" y="{_f(py(t) + 4)}" text-anchor="end">{t:g}</text>')
    x_label = "range [km, log scale]" if spec.log_x else "range [km]"
    out.append(f'<text x="{_f(LEFT + plot_w / 2)}" y="{HEIGHT - 20}" text-anchor="middle">{x_label}</text>')
    out.append(
        f'<text x="20" y="{_f(TOP + plot_h / 2)}" text-anchor="middle" '
        f'transform="rotate(-90 20 {_f(TOP + plot_h / 2)})">ratio [dB]</text>'
    )
    out.append("</g>")

    ty = py(spec.threshold_db)
    out.append(
        f'<line class="threshold" x1="{LEFT}" y1="{_f(ty)}" x2="{LEFT + plot_w}" y2="{_f(ty)}" '
        f'stroke="#000000" stroke-width="1.5" stroke-dasharray="2,3"/>'
    )
    out.append(
        f'<text x="{LEFT + plot_w - 4}" y="{_f(ty - 6)}" text-anchor="end" font-size="12">'
        f"threshold {spec.threshold_db:g} dB</text>"
    )

    for s in series:
        pts = " ".join(f"{_f(px(x))},{_f(py(y))}" for x, y in zip(xs, s.ys))
        dash = ' stroke-dasharray="8,4"' if s.dashed else ""
        out.append(
            f'<polyline class="series {s.metric}" data-target="{escape(s.target)}" points="{pts}" '
            f'fill="none" stroke="{s.color}" stroke-width="2"{dash}/>'
        )

    lx = LEFT + plot_w + 20
    out.append('<g class="legend" font-size="12">')
    for i, s in enumerate(series):
        y = TOP + 10 + 20 * i
        dash = ' stroke-dasharray="8,4"' if s.dashed else ""
        out.append(f'<line x1="{lx}" y1="{y}" x2="{lx + 28}" y2="{y}" stroke="{s.color}" stroke-width="2"{dash}/>')
        out.append(f'<text x="{lx + 36}" y="{y + 4}">{escape(s.label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_plot(rows: Sequence[SweepRow], spec: PlotSpec) -> Path:
    """Write the chart to ``spec.output`` and return the path."""
    if spec.output is None:
        raise UsageError("PlotSpec.output is required to render a file")
    path = Path(spec.output)
    path.write_bytes(svg_chart(rows, spec).encode("utf-8"))
    return path
