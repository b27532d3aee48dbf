"""Static SVG drawing of a Newton polygon."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from ..newton import directions, hull
from ..poly import BiPoly

__all__ = ["polygon_svg"]

_CELL = 40
_MARGIN = 60


def polygon_svg(P: BiPoly) -> str:
    """Lattice grid, support points, hull and labelled outward edge normals."""
    poly = hull(P)
    pts = sorted(P.terms)
    imax = max(i for i, _ in pts) + 1
    jmax = max(j for _, j in pts) + 1
    width = imax * _CELL + 2 * _MARGIN
    height = jmax * _CELL + 2 * _MARGIN

    def sx(i):
        return _MARGIN + i * _CELL

    def sy(j):
        return height - _MARGIN - j * _CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f"<title>{escape(str(P))}</title>",
    ]
    for i in range(imax + 1):
        out.append(f'<line x1="{sx(i)}" y1="{sy(0)}" x2="{sx(i)}" y2="{sy(jmax)}" stroke="#ddd"/>')
    for j in range(jmax + 1):
        out.append(f'<line x1="{sx(0)}" y1="{sy(j)}" x2="{sx(imax)}" y2="{sy(j)}" stroke="#ddd"/>')
    out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(imax)}" y2="{sy(0)}" stroke="black"/>')
    out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(jmax)}" stroke="black"/>')

    vs = poly.vertices
    if len(vs) > 1:
        coords = " ".join(f"{sx(i)},{sy(j)}" for i, j in vs)
        out.append(f'<polygon points="{coords}" fill="#cde" fill-opacity="0.5" stroke="#246" stroke-width="2"/>')
    for (a, b), d in zip(poly.edges(), directions(P)):
        mx, my = (sx(a[0]) + sx(b[0])) / 2, (sy(a[1]) + sy(b[1])) / 2
        norm = math.hypot(d.rho, d.sigma)
        ex, ey = mx + 30 * d.rho / norm, my - 30 * d.sigma / norm
        out.append(f'<line x1="{mx:.1f}" y1="{my:.1f}" x2="{ex:.1f}" y2="{ey:.1f}" stroke="#c33" stroke-width="1.5"/>')
        out.append(
            f'<text x="{ex:.1f}" y="{ey:.1f}" font-size="12" fill="#c33">({d.rho},{d.sigma})</text>'
        )
    for i, j in pts:
        out.append(f'<circle cx="{sx(i)}" cy="{sy(j)}" r="4" fill="#246"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
