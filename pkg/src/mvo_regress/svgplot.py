"""Minimal self-contained SVG scatter/line plots.

Deliberately dependency-free so plot output is byte-deterministic: no
timestamps, no toolkit version strings, fixed float formatting.
"""
from __future__ import annotations

import math
from pathlib import Path

__all__ = ["scatter_line_svg"]

WIDTH, HEIGHT = 640, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 16, 36, 48


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


class _Scale:
    def __init__(self, lo: float, hi: float, out_lo: float, out_hi: float):
        if hi <= lo:
            hi = lo + 1.0
        self.lo, self.hi = lo, hi
        self.out_lo, self.out_hi = out_lo, out_hi

    def __call__(self, v: float) -> float:
        t = (v - self.lo) / (self.hi - self.lo)
        return self.out_lo + t * (self.out_hi - self.out_lo)


def scatter_line_svg(path: str | Path, points_x, points_y, line_x, line_y,
                     title: str, xlabel: str, ylabel: str) -> None:
    """Write an SVG with scattered data points and a model curve."""
    px = [float(v) for v in points_x]
    py = [float(v) for v in points_y]
    lx = [float(v) for v in line_x]
    ly = [float(v) for v in line_y if math.isfinite(v)]
    all_x = px + lx
    all_y = py + ly
    x_lo, x_hi = min(all_x), max(all_x)
    y_lo, y_hi = min(all_y), max(all_y)
    pad_y = 0.05 * (y_hi - y_lo or 1.0)
    y_lo, y_hi = y_lo - pad_y, y_hi + pad_y
    sx = _Scale(x_lo, x_hi, MARGIN_L, WIDTH - MARGIN_R)
    sy = _Scale(y_lo, y_hi, HEIGHT - MARGIN_B, MARGIN_T)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
    ]
    # axes
    x0, y0 = MARGIN_L, HEIGHT - MARGIN_B
    x1, y1 = WIDTH - MARGIN_R, MARGIN_T
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>')
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')
    for tx in _ticks(x_lo, x_hi):
        cx = _fmt(sx(tx))
        parts.append(f'<line x1="{cx}" y1="{y0}" x2="{cx}" y2="{y0 + 4}" stroke="black"/>')
        parts.append(f'<text x="{cx}" y="{y0 + 18}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="10">{_fmt(tx)}</text>')
    for ty in _ticks(y_lo, y_hi):
        cy = _fmt(sy(ty))
        parts.append(f'<line x1="{x0 - 4}" y1="{cy}" x2="{x0}" y2="{cy}" stroke="black"/>')
        parts.append(f'<text x="{x0 - 6}" y="{cy}" text-anchor="end" dominant-baseline="middle" '
                     f'font-family="sans-serif" font-size="10">{_fmt(ty)}</text>')
    parts.append(f'<text x="{(x0 + x1) / 2}" y="{HEIGHT - 10}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="12">{xlabel}</text>')
    parts.append(f'<text x="16" y="{(y0 + y1) / 2}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="12" '
                 f'transform="rotate(-90 16 {(y0 + y1) / 2})">{ylabel}</text>')
    # model curve
    if lx:
        coords = " ".join(
            f"{_fmt(sx(a))},{_fmt(sy(b))}"
            for a, b in zip(lx, [float(v) for v in line_y])
            if math.isfinite(b))
        parts.append(f'<polyline points="{coords}" fill="none" stroke="#c0392b" '
                     f'stroke-width="1.5"/>')
    # data points
    for a, b in zip(px, py):
        parts.append(f'<circle cx="{_fmt(sx(a))}" cy="{_fmt(sy(b))}" r="3" '
                     f'fill="none" stroke="#2c3e50"/>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")
