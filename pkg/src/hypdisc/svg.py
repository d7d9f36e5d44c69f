"""SVG drawing of the maximum-area construction.

The unit disc fills a 1000 x 1000 box with the y-axis pointing up.  The
canvas is widened to the right when B' falls outside it, up to
``MAX_EXTENT`` disc radii; geodesics are drawn as exact circular arcs.
"""

from __future__ import annotations

import math

from .disc import Arc, DiscPoint, geodesic_through
from .max_area import MaxAreaSolution

SCALE = 500.0
MAX_EXTENT = 4.0
PAD = 40.0


def _num(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _xy(x: float, y: float) -> tuple[str, str]:
    return _num(SCALE * (1.0 + x)), _num(SCALE * (1.0 - y))


def geodesic_segment_path(p: DiscPoint, q: DiscPoint) -> str:
    """SVG path data for the geodesic segment from ``p`` to ``q``."""
    g = geodesic_through(p, q)
    px, py = _xy(p.x, p.y)
    qx, qy = _xy(q.x, q.y)
    if not isinstance(g, Arc):
        return f"M {px} {py} L {qx} {qy}"
    r = _num(SCALE * g.radius)
    # the flipped canvas shows the plane's orientation, and SVG's
    # positive-angle sweep is clockwise on screen
    sweep = 0 if g.ccw else 1
    return f"M {px} {py} A {r} {r} 0 0 {sweep} {qx} {qy}"


def _chord_through(bx: float, cx: float, cy: float) -> tuple[tuple[float, float], tuple[float, float]]:
    """Intersections of the line through (bx, 0) and (cx, cy) with the unit circle."""
    dx, dy = cx - bx, cy
    n = math.hypot(dx, dy)
    dx, dy = dx / n, dy / n
    proj = bx * dx
    root = math.sqrt(max(proj * proj - (bx * bx - 1.0), 0.0))
    t0, t1 = -proj - root, -proj + root
    return (bx + t0 * dx, t0 * dy), (bx + t1 * dx, t1 * dy)


def render_construction(sol: MaxAreaSolution) -> str:
    A, B, C = sol.triangle.vertices
    bp = sol.b_inverse
    shown = bp.x <= MAX_EXTENT
    right = min(bp.x, MAX_EXTENT)
    width = max(1000.0, SCALE * (1.0 + right) + PAD)
    (e0x, e0y), (e1x, e1y) = _chord_through(bp.x, C.x, C.y)
    # far end of the tangent line: B' itself or the canvas edge
    if shown:
        fx, fy = bp.x, 0.0
    else:
        t = (right - C.x) / (bp.x - C.x)
        fx, fy = right, C.y * (1.0 - t)
    omega_r = SCALE * math.tanh(0.5 * sol.b)
    cx0, cy0 = _xy(0.0, 0.0)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="1000" '
        f'viewBox="0 0 {_num(width)} 1000">',
        f"<title>Maximum area triangle, b={sol.b!r}, c={sol.c!r}</title>",
        f"<desc>alpha*={sol.alpha_star!r} S*={sol.s_star!r} a*={sol.a_star!r}"
        + ("" if shown else f"; B' at x={bp.x!r} lies beyond the canvas")
        + "</desc>",
        '<rect width="100%" height="100%" fill="#ffffff"/>',
        f'<circle id="absolute" cx="{cx0}" cy="{cy0}" r="{_num(SCALE)}" '
        'fill="none" stroke="#000000" stroke-width="2"/>',
        f'<circle id="omega" cx="{cx0}" cy="{cy0}" r="{_num(omega_r)}" '
        'fill="none" stroke="#1f77b4" stroke-width="1.5" stroke-dasharray="8 6"/>',
    ]
    x0, y0 = _xy(e0x, e0y)
    x1, y1 = _xy(e1x, e1y)
    lines.append(
        f'<line id="lambda_max" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
        'stroke="#d62728" stroke-width="1.5"/>'
    )
    ex0, ey0 = _xy(C.x, C.y)
    ex1, ey1 = _xy(fx, fy)
    lines.append(
        f'<line id="tangent_extension" x1="{ex0}" y1="{ey0}" x2="{ex1}" y2="{ey1}" '
        'stroke="#d62728" stroke-width="1" stroke-dasharray="4 4"/>'
    )
    lines.append('<g id="triangle" fill="none" stroke="#000000" stroke-width="2.5">')
    for p, q in ((A, B), (B, C), (C, A)):
        lines.append(f'<path d="{geodesic_segment_path(p, q)}"/>')
    lines.append("</g>")
    labels = [("A", A.x, A.y), ("B", B.x, B.y), ("C", C.x, C.y)]
    if shown:
        labels.append(("B'", bp.x, bp.y))
    lines.append('<g id="points" font-family="serif" font-size="28">')
    for name, x, y in labels:
        sx, sy = _xy(x, y)
        lines.append(f'<circle cx="{sx}" cy="{sy}" r="5" fill="#000000"/>')
        lines.append(
            f'<text x="{_num(float(sx) + 8)}" y="{_num(float(sy) - 8)}">{name}</text>'
        )
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
