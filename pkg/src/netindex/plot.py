"""Deterministic SVG line charts of sweep rows: one panel per index."""

from __future__ import annotations

import math
from collections import defaultdict
from xml.sax.saxutils import escape

from .fileformats import SweepRow

PANEL_W, PANEL_H = 440, 320
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 60, 100, 34, 40
COLUMNS = 2

COLORS = {
    "CS": "#1f77b4",
    "HC": "#ff7f0e",
    "HX": "#2ca02c",
    "OX": "#d62728",
    "SL": "#9467bd",
}
_FALLBACK = ("#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")

TITLES = {
    "pi1": "first multiplicative Zagreb",
    "pi2": "second multiplicative Zagreb",
    "chi": "general sum-connectivity",
    "pi1star": "multiplicative first Zagreb",
    "m1": "first Zagreb",
    "m2": "second Zagreb",
    "nk": "Narumi-Katayama",
}


def _f(x: float) -> str:
    return f"{x:.2f}"


def _color(family: str, families: list[str]) -> str:
    return COLORS.get(family) or _FALLBACK[families.index(family) % len(_FALLBACK)]


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def _panel(index: str, rows: list[SweepRow], ox: float, oy: float) -> list[str]:
    series: dict[str, list[SweepRow]] = defaultdict(list)
    for r in rows:
        series[r.family].append(r)
    families = sorted(series)
    ns = [r.n for r in rows]
    ys = [r.value_log10 for r in rows]
    x_lo, x_hi = min(ns), max(ns)
    y_lo, y_hi = min(0.0, min(ys)), max(ys)
    if y_hi <= y_lo:
        y_hi = y_lo + 1.0
    plot_w = PANEL_W - MARGIN_L - MARGIN_R
    plot_h = PANEL_H - MARGIN_T - MARGIN_B
    x0, y0 = ox + MARGIN_L, oy + MARGIN_T

    def sx(n: float) -> float:
        if x_hi == x_lo:
            return x0 + plot_w / 2
        return x0 + (n - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v: float) -> float:
        return y0 + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    param = next((r.param for r in rows if r.param), "")
    title = TITLES.get(index, index) + f" ({index}{', ' + param if param else ''})"
    out = [f'<g class="chart" data-index="{escape(index)}">']
    out.append(f'<text x="{_f(ox + PANEL_W / 2)}" y="{_f(oy + 20)}" text-anchor="middle" font-size="13">{escape(title)}</text>')
    out.append(
        f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(plot_w)}" height="{_f(plot_h)}" fill="none" stroke="#000" stroke-width="1"/>'
    )
    for n in sorted(set(ns)):
        out.append(f'<text x="{_f(sx(n))}" y="{_f(y0 + plot_h + 14)}" text-anchor="middle" font-size="10">{n}</text>')
    for v in _ticks(y_lo, y_hi):
        out.append(f'<line x1="{_f(x0 - 4)}" y1="{_f(sy(v))}" x2="{_f(x0)}" y2="{_f(sy(v))}" stroke="#000"/>')
        out.append(f'<text x="{_f(x0 - 6)}" y="{_f(sy(v) + 3)}" text-anchor="end" font-size="10">{v:.1f}</text>')
    out.append(f'<text x="{_f(x0 + plot_w / 2)}" y="{_f(y0 + plot_h + 30)}" text-anchor="middle" font-size="11">n</text>')
    out.append(
        f'<text x="{_f(ox + 14)}" y="{_f(y0 + plot_h / 2)}" text-anchor="middle" font-size="11" '
        f'transform="rotate(-90 {_f(ox + 14)} {_f(y0 + plot_h / 2)})">log10 value</text>'
    )
    for k, fam in enumerate(families):
        pts = sorted(series[fam], key=lambda r: r.n)
        color = _color(fam, families)
        if len(pts) == 1:
            out.append(
                f'<circle class="series" data-family="{escape(fam)}" cx="{_f(sx(pts[0].n))}" '
                f'cy="{_f(sy(pts[0].value_log10))}" r="3" fill="{color}"/>'
            )
        else:
            coords = " ".join(f"{_f(sx(r.n))},{_f(sy(r.value_log10))}" for r in pts)
            out.append(
                f'<polyline class="series" data-family="{escape(fam)}" points="{coords}" '
                f'fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        ly = y0 + 10 + 16 * k
        lx = x0 + plot_w + 12
        out.append(f'<line x1="{_f(lx)}" y1="{_f(ly)}" x2="{_f(lx + 18)}" y2="{_f(ly)}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{_f(lx + 22)}" y="{_f(ly + 4)}" font-size="11">{escape(fam)}</text>')
    out.append("</g>")
    return out


def render_svg(rows: list[SweepRow]) -> str:
    by_index: dict[str, list[SweepRow]] = defaultdict(list)
    for r in rows:
        by_index[r.index].append(r)
    indices = sorted(by_index)
    n_panels = max(1, len(indices))
    n_cols = min(COLUMNS, n_panels)
    n_rows = math.ceil(n_panels / n_cols)
    width, height = n_cols * PANEL_W, n_rows * PANEL_H
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
        f'<rect width="{width}" height="{height}" fill="#fff"/>',
    ]
    for k, index in enumerate(indices):
        ox, oy = (k % n_cols) * PANEL_W, (k // n_cols) * PANEL_H
        out += _panel(index, by_index[index], ox, oy)
    out.append("</svg>")
    return "\n".join(out) + "\n"
