"""Deterministic SVG rendering of persistence diagrams and barcode strips.

One standalone vector document, fixed 800x600 viewport: left panel is the
birth/death scatter with the diagonal and an infinity rail on top, right
panel draws every bar as a horizontal strip.  Colors are a fixed
per-degree palette, so renders are byte-identical across runs and usable
as golden files.
"""

from __future__ import annotations

import math
from typing import Iterable

from .persistence import Bar, Barcode

WIDTH, HEIGHT = 800, 600
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#17becf", "#7f7f7f")


def _color(degree: int) -> str:
    return PALETTE[degree % len(PALETTE)]


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_diagram(barcodes: Iterable[Barcode]) -> str:
    """SVG text for a list of barcodes (typically one module family)."""
    bars: list[tuple[str, Bar]] = []
    for bc in barcodes:
        for b in bc.bars:
            bars.append((bc.module, b))
    finite_vals = [b.birth for _, b in bars] + \
                  [b.death for _, b in bars if b.death != math.inf]
    lo = min(finite_vals, default=0.0)
    hi = max(finite_vals, default=1.0)
    if hi <= lo:
        hi = lo + 1.0
    pad = 0.08 * (hi - lo)
    lo, hi = lo - pad, hi + pad

    # Left panel: diagram.  Right panel: strips.
    dl, dr, dt, db = 60.0, 390.0, 60.0, 560.0
    rail_y = dt - 18.0

    def sx(v):
        return dl + (v - lo) / (hi - lo) * (dr - dl)

    def sy(v):
        return db - (v - lo) / (hi - lo) * (db - dt)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{_fmt(dl)}" y1="{_fmt(db)}" x2="{_fmt(dr)}" y2="{_fmt(db)}" '
        f'stroke="black" stroke-width="1"/>',
        f'<line x1="{_fmt(dl)}" y1="{_fmt(db)}" x2="{_fmt(dl)}" y2="{_fmt(dt)}" '
        f'stroke="black" stroke-width="1"/>',
        f'<line x1="{_fmt(sx(lo))}" y1="{_fmt(sy(lo))}" x2="{_fmt(sx(hi))}" '
        f'y2="{_fmt(sy(hi))}" stroke="#bbbbbb" stroke-width="1"/>',
        f'<line x1="{_fmt(dl)}" y1="{_fmt(rail_y)}" x2="{_fmt(dr)}" y2="{_fmt(rail_y)}" '
        f'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>',
        f'<text x="{_fmt(dl)}" y="{_fmt(rail_y - 5)}" font-size="11" '
        f'font-family="monospace" fill="#555555">inf</text>',
        f'<text x="{_fmt((dl + dr) / 2 - 30)}" y="{_fmt(db + 30)}" font-size="12" '
        f'font-family="monospace">birth</text>',
        f'<text x="14" y="{_fmt((dt + db) / 2)}" font-size="12" '
        f'font-family="monospace" transform="rotate(-90 14 {_fmt((dt + db) / 2)})">death</text>',
    ]
    ordered = sorted(bars, key=lambda mb: (mb[1].degree, mb[1].birth, mb[1].death, mb[0]))
    for module, b in ordered:
        x = sx(b.birth)
        y = rail_y if b.death == math.inf else sy(b.death)
        for k in range(b.multiplicity):
            parts.append(f'<circle cx="{_fmt(x + 2.0 * k)}" cy="{_fmt(y)}" r="4" '
                         f'fill="{_color(b.degree)}" fill-opacity="0.8">'
                         f'<title>{module} d{b.degree} [{b.birth:.6g},'
                         f'{"inf" if b.death == math.inf else f"{b.death:.6g}"})</title>'
                         f'</circle>')

    sl, sr, st, sb = 440.0, 770.0, 60.0, 560.0

    def bx(v):
        return sl + (v - lo) / (hi - lo) * (sr - sl)

    parts.append(f'<line x1="{_fmt(sl)}" y1="{_fmt(sb)}" x2="{_fmt(sr)}" y2="{_fmt(sb)}" '
                 f'stroke="black" stroke-width="1"/>')
    strip_bars = []
    for module, b in ordered:
        strip_bars.extend([(module, b)] * b.multiplicity)
    n = max(len(strip_bars), 1)
    gap = min((sb - st) / n, 18.0)
    for k, (module, b) in enumerate(strip_bars):
        y = st + gap * (k + 0.5)
        x2 = sr if b.death == math.inf else bx(b.death)
        parts.append(f'<line x1="{_fmt(bx(b.birth))}" y1="{_fmt(y)}" x2="{_fmt(x2)}" '
                     f'y2="{_fmt(y)}" stroke="{_color(b.degree)}" stroke-width="4" '
                     f'stroke-linecap="round"/>')
        if b.death == math.inf:
            parts.append(f'<text x="{_fmt(sr + 4)}" y="{_fmt(y + 3)}" font-size="9" '
                         f'font-family="monospace" fill="{_color(b.degree)}">∞</text>')
    parts.append(f'<text x="{_fmt((sl + sr) / 2 - 30)}" y="{_fmt(sb + 30)}" '
                 f'font-size="12" font-family="monospace">barcode</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
