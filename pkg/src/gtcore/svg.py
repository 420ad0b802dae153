"""Tiny SVG line-plot emitter (no plotting dependency)."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

W, H = 640, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 30, 40, 60
COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]


def _ticks(lo: float, hi: float, log: bool) -> list[float]:
    if log:
        a, b = math.floor(math.log10(lo)), math.ceil(math.log10(hi))
        return [10.0**k for k in range(a, b + 1)]
    if hi == lo:
        return [lo]
    raw = (hi - lo) / 5
    mag = 10 ** math.floor(math.log10(raw))
    step = min((s * mag for s in (1, 2, 5, 10) if s * mag >= raw), default=raw)
    start = math.ceil(lo / step) * step
    out = []
    x = start
    while x <= hi + 1e-9 * step:
        out.append(round(x, 10))
        x += step
    return out


def plot(
    series: dict[str, list[tuple[float, float]]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    loglog: bool = False,
    annotations: list[tuple[float, float, str]] = (),
) -> str:
    """Polyline plot of named point series.  Log scales drop points <= 0."""
    if loglog:
        series = {k: [(x, y) for x, y in pts if x > 0 and y > 0] for k, pts in series.items()}
        annotations = [(x, y, s) for x, y, s in annotations if x > 0 and y > 0]
    pts = [pt for s in series.values() for pt in s]
    xs = [x for x, _ in pts] or [1.0]
    ys = [y for _, y in pts] or [1.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if not loglog:
        x0, y0 = min(x0, 0.0), min(y0, 0.0)
    if x1 == x0:
        x1 = x0 * 10 if loglog else x0 + 1
    if y1 == y0:
        y1 = y0 * 10 if loglog else y0 + 1
    tr = math.log10 if loglog else (lambda v: v)

    def sx(x):
        return LEFT + (tr(x) - tr(x0)) / (tr(x1) - tr(x0)) * (W - LEFT - RIGHT)

    def sy(y):
        return H - BOTTOM - (tr(y) - tr(y0)) / (tr(y1) - tr(y0)) * (H - TOP - BOTTOM)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
        f'viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">',
        f'<rect width="{W}" height="{H}" fill="white"/>',
        f'<text x="{W / 2}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<line x1="{LEFT}" y1="{H - BOTTOM}" x2="{W - RIGHT}" y2="{H - BOTTOM}" stroke="black"/>',
        f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{H - BOTTOM}" stroke="black"/>',
    ]
    for t in _ticks(x0, x1, loglog):
        if x0 <= t <= x1:
            out.append(f'<line x1="{sx(t):.2f}" y1="{H - BOTTOM}" x2="{sx(t):.2f}" '
                       f'y2="{H - BOTTOM + 5}" stroke="black"/>')
            out.append(f'<text x="{sx(t):.2f}" y="{H - BOTTOM + 18}" '
                       f'text-anchor="middle">{t:g}</text>')
    for t in _ticks(y0, y1, loglog):
        if y0 <= t <= y1:
            out.append(f'<line x1="{LEFT - 5}" y1="{sy(t):.2f}" x2="{LEFT}" '
                       f'y2="{sy(t):.2f}" stroke="black"/>')
            out.append(f'<text x="{LEFT - 8}" y="{sy(t) + 4:.2f}" text-anchor="end">{t:g}</text>')
    out.append(f'<text x="{W / 2}" y="{H - 15}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(f'<text x="18" y="{H / 2}" text-anchor="middle" '
               f'transform="rotate(-90 18 {H / 2})">{escape(ylabel)}</text>')
    for k, (name, points) in enumerate(series.items()):
        color = COLORS[k % len(COLORS)]
        if points:
            path = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
            out.append(f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{W - RIGHT - 5}" y="{TOP + 15 * (k + 1)}" text-anchor="end" '
                   f'fill="{color}">{escape(name)}</text>')
    for x, y, text in annotations:
        out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="3"/>')
        out.append(f'<text x="{sx(x) + 5:.2f}" y="{sy(y) - 5:.2f}">{escape(text)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def staircase_svg(stairs, f: str = "f", g: str = "g") -> str:
    corners = list(stairs)
    outline = []
    if corners:
        outline.append((0.0, corners[0].q))
        for i, c in enumerate(corners):
            outline.append((c.p, c.q))
            nxt = corners[i + 1].q if i + 1 < len(corners) else 0.0
            outline.append((c.p, nxt))
    notes = [(c.p, c.q, f"{c.size1},{c.size2}") for c in corners]
    return plot({"boundary": outline}, f"Border of the (p,q) region for {f}, {g}",
                "p", "q", annotations=notes)


def sizes_svg(curves: dict[str, list[tuple[float, int]]], loglog: bool = True) -> str:
    series = {name: [(float(q), float(s)) for q, s in pts] for name, pts in curves.items()}
    return plot(series, "Core size against the free threshold", "threshold", "core size", loglog)
