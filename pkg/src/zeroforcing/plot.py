"""Static SVG line charts of sweep summaries (no plotting library needed)."""

from __future__ import annotations

import math
import os
from typing import Sequence
from xml.sax.saxutils import escape

from .experiment import SummaryRow

QUANTITIES = {
    "z": ("z_lm_frac", "z = Z_LM / N"),
    "v": ("v_lm_frac", "v = V_LM / N"),
    "delta_z": ("delta_z_frac", "ΔZ / N"),
    "delta_v": ("delta_v_frac", "ΔV / N"),
}
COLOURS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")
W, H = 480, 360
LEFT, RIGHT, TOP, BOTTOM = 60, 20, 20, 50
Y_MAX = 1.05


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    step = (hi - lo) / count
    return [lo + i * step for i in range(count + 1)]


def render_svg(rows: Sequence[SummaryRow], quantity: str) -> str:
    if not rows:
        raise ValueError("nothing to plot")
    col, label = QUANTITIES[quantity]
    gammas = [r.gamma for r in rows]
    x_lo, x_hi = min(gammas), max(gammas)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    pw, ph = W - LEFT - RIGHT, H - TOP - BOTTOM

    def sx(x: float) -> float:
        return LEFT + (x - x_lo) / (x_hi - x_lo) * pw

    def sy(y: float) -> float:
        y = min(max(y, 0.0), Y_MAX)
        return TOP + (1 - y / Y_MAX) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="11">',
        f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="#000"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        out.append(f'<text x="{sx(t):.1f}" y="{TOP + ph + 15}" text-anchor="middle">{t:.2f}</text>')
    for t in _ticks(0.0, 1.0):
        out.append(f'<text x="{LEFT - 5}" y="{sy(t) + 4:.1f}" text-anchor="end">{t:.1f}</text>')
    out.append(f'<text class="xlabel" x="{LEFT + pw / 2}" y="{H - 10}" text-anchor="middle">γ = 2 + a</text>')
    out.append(
        f'<text class="ylabel" x="15" y="{TOP + ph / 2}" text-anchor="middle" '
        f'transform="rotate(-90 15 {TOP + ph / 2})">{escape(label)}</text>'
    )
    models = list(dict.fromkeys(r.model for r in rows))
    for k, model in enumerate(models):
        colour = COLOURS[k % len(COLOURS)]
        pts = sorted((r.gamma, r.mean(col), r.se(col)) for r in rows if r.model == model)
        pts = [p for p in pts if not math.isnan(p[1])]
        if not pts:
            continue
        line = " ".join(f"{sx(x):.1f},{sy(y):.1f}" for x, y, _ in pts)
        out.append(f'<g class="series" data-model="{escape(model)}">')
        out.append(f'<polyline points="{line}" fill="none" stroke="{colour}"/>')
        for x, y, se in pts:
            if se > 0:
                out.append(
                    f'<line class="errorbar" x1="{sx(x):.1f}" x2="{sx(x):.1f}" '
                    f'y1="{sy(y - se):.1f}" y2="{sy(y + se):.1f}" stroke="{colour}"/>'
                )
            out.append(f'<circle class="marker" cx="{sx(x):.1f}" cy="{sy(y):.1f}" r="3" fill="{colour}"/>')
        out.append("</g>")
    if len(models) > 1:
        out.append('<g class="legend">')
        for k, model in enumerate(models):
            y = TOP + 15 + 15 * k
            colour = COLOURS[k % len(COLOURS)]
            out.append(f'<rect x="{W - RIGHT - 80}" y="{y - 8}" width="10" height="10" fill="{colour}"/>')
            out.append(f'<text x="{W - RIGHT - 65}" y="{y + 1}">{escape(model)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_plot(rows: Sequence[SummaryRow], quantity: str, path: str | os.PathLike) -> None:
    svg = render_svg(rows, quantity)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg)
