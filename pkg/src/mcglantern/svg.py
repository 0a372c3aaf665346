"""Static SVG drawings of glued polygons with chord-diagram curves.

Output depends only on the inputs: coordinates are printed with three
decimals and elements are emitted in a fixed order.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .curves import BoundaryPoint
from .polygon import PolygonSurface
from .rotation import RotationMap

SIZE = 520
CENTER = SIZE / 2
RADIUS = 200
STYLES = (
    ("#c0392b", ""),
    ("#2471a3", "8 5"),
    ("#1e8449", "2 4"),
    ("#7d3c98", "10 4 2 4"),
)


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def corner_xy(n: int, i: int) -> tuple[float, float]:
    # corner 0 at the bottom-left of the vertical axis; counterclockwise on screen
    theta = -math.pi / 2 - math.pi / n + 2 * math.pi * i / n
    return CENTER + RADIUS * math.cos(theta), CENTER - RADIUS * math.sin(theta)


def point_xy(n: int, p: BoundaryPoint) -> tuple[float, float]:
    x0, y0 = corner_xy(n, p.side)
    x1, y1 = corner_xy(n, (p.side + 1) % n)
    t = float(p.t)
    return x0 + t * (x1 - x0), y0 + t * (y1 - y0)


def _pair_labels(surface: PolygonSurface) -> dict[int, str]:
    labels = {}
    for k, (i, j) in enumerate(surface.pairing.edge_pairs()):
        labels[i] = labels[j] = f"e{k}"
    return labels


def render_svg(surface: PolygonSurface, curves=(), rotation: RotationMap | None = None, title: str = "") -> str:
    n = surface.n_sides
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="7" markerHeight="7" orient="auto">',
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#333"/>',
        "</marker>",
        "</defs>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{_fmt(CENTER)}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">{escape(title)}</text>')
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (corner_xy(n, i) for i in range(n)))
    out.append(f'<polygon points="{pts}" fill="#f7f7f7" stroke="#333" stroke-width="1.5"/>')
    labels = _pair_labels(surface)
    for i in range(n):
        # gluing arrow along the middle of side i, pointing from corner i to corner i+1
        (x0, y0), (x1, y1) = corner_xy(n, i), corner_xy(n, (i + 1) % n)
        ax, ay = x0 + 0.42 * (x1 - x0), y0 + 0.42 * (y1 - y0)
        bx, by = x0 + 0.58 * (x1 - x0), y0 + 0.58 * (y1 - y0)
        out.append(
            f'<line class="glue" x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
            f'stroke="#333" stroke-width="1.5" marker-end="url(#arrow)"/>'
        )
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        lx, ly = CENTER + 1.1 * (mx - CENTER), CENTER + 1.1 * (my - CENTER)
        out.append(
            f'<text class="side" x="{_fmt(lx)}" y="{_fmt(ly + 4)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11" fill="#555">{i}:{labels[i]}</text>'
        )
    for i in range(n):
        x, y = corner_xy(n, i)
        lx, ly = CENTER + 1.08 * (x - CENTER), CENTER + 1.08 * (y - CENTER)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#333"/>')
        out.append(
            f'<text class="vertex" x="{_fmt(lx)}" y="{_fmt(ly + 4)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" font-weight="bold">{i}</text>'
        )
    for ci, curve in enumerate(curves):
        color, dash = STYLES[ci % len(STYLES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<g class="curve" id="curve{ci}" stroke="{color}" stroke-width="2.5"{dash_attr} fill="none">')
        for p, q in curve.chords():
            (x0, y0), (x1, y1) = point_xy(n, p), point_xy(n, q)
            out.append(f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}"/>')
        out.append("</g>")
    if rotation is not None:
        out.append(f'<circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="4" fill="#333"/>')
        out.append(
            f'<text class="rotation" x="{_fmt(CENTER)}" y="{_fmt(CENTER + 20)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">rotation by {rotation.shift} sides, order {rotation.order}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
