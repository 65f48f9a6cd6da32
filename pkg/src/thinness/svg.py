"""Plain SVG emission for box and grid-path models.

Pure string building, deterministic for fixed inputs: one unit is 20px
(coordinates are stored doubled, so 10px per stored step), class 1
strokes blue, class 2 red, diagonals dashed.
"""

from __future__ import annotations

from .boxes import BoxModel
from .gridpaths import GridPathModel

_PX = 10  # stored coordinates are doubled units; 2 * 10px = 20px per unit
_PAD = 30
_CLASS_COLORS = {1: "#1f77b4", 2: "#d62728", None: "#555555"}


def _header(x_lo, x_hi, y_lo, y_hi) -> tuple[list[str], float, float]:
    width = (x_hi - x_lo) * _PX + 2 * _PAD
    height = (y_hi - y_lo) * _PX + 2 * _PAD
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    return lines, x_lo, y_hi


def _tx(x, x_lo) -> float:
    return _PAD + (x - x_lo) * _PX


def _ty(y, y_hi) -> float:
    # SVG grows downward
    return _PAD + (y_hi - y) * _PX


def render_box_model(m: BoxModel) -> str:
    xs = [v for b in m.boxes for v in (b.x1, b.x2)]
    ys = [v for b in m.boxes for v in (b.y1, b.y2)]
    x_lo, x_hi = min(xs) - 2, max(xs) + 2
    y_lo, y_hi = min(ys) - 2, max(ys) + 2
    lines, x0, y0 = _header(x_lo, x_hi, y_lo, y_hi)
    for d in (m.d1, m.d2):
        # dashed diagonal y = x + d clipped to the viewport x-range
        p1 = (x_lo, x_lo + d)
        p2 = (x_hi, x_hi + d)
        lines.append(
            f'<line x1="{_tx(p1[0], x0)}" y1="{_ty(p1[1], y0)}" '
            f'x2="{_tx(p2[0], x0)}" y2="{_ty(p2[1], y0)}" '
            'stroke="#999999" stroke-dasharray="6 4" stroke-width="1"/>')
    for b in sorted(m.boxes, key=lambda b: b.v):
        color = _CLASS_COLORS.get(b.cls, _CLASS_COLORS[None])
        lines.append(
            f'<rect x="{_tx(b.x1, x0)}" y="{_ty(b.y2, y0)}" '
            f'width="{(b.x2 - b.x1) * _PX}" height="{(b.y2 - b.y1) * _PX}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>')
        lines.append(
            f'<circle cx="{_tx(b.x2, x0)}" cy="{_ty(b.y2, y0)}" r="2.5" '
            f'fill="{color}"/>')
        lines.append(
            f'<text x="{_tx(b.x2, x0) + 4}" y="{_ty(b.y2, y0) - 4}" '
            f'font-size="10" fill="#333333">{b.v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_grid_model(m: GridPathModel) -> str:
    xs = [x for p in m.paths for x, _ in p.pts]
    ys = [y for p in m.paths for _, y in p.pts]
    x_lo, x_hi = min(xs) - 2, max(xs) + 2
    y_lo, y_hi = min(ys) - 2, max(ys) + 2
    lines, x0, y0 = _header(x_lo, x_hi, y_lo, y_hi)
    corners_on_antidiagonal = all(
        p.bends == 1 and p.pts[1][1] == -p.pts[1][0] for p in m.paths)
    if corners_on_antidiagonal and m.paths:
        p1 = (x_lo, -x_lo)
        p2 = (x_hi, -x_hi)
        lines.append(
            f'<line x1="{_tx(p1[0], x0)}" y1="{_ty(p1[1], y0)}" '
            f'x2="{_tx(p2[0], x0)}" y2="{_ty(p2[1], y0)}" '
            'stroke="#999999" stroke-dasharray="6 4" stroke-width="1"/>')
    for p in sorted(m.paths, key=lambda p: p.v):
        pointstr = " ".join(f"{_tx(x, x0)},{_ty(y, y0)}" for x, y in p.pts)
        lines.append(
            f'<polyline points="{pointstr}" fill="none" stroke="#1f77b4" '
            'stroke-width="1.5" stroke-linecap="round"/>')
        x, y = p.pts[0]
        lines.append(
            f'<text x="{_tx(x, x0) + 3}" y="{_ty(y, y0) - 3}" '
            f'font-size="10" fill="#333333">{p.v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
