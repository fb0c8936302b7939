"""Deterministic SVG figures of lattice polygons and their triangulations.

The y axis is flipped so that lattice "up" is screen up; one lattice unit is
32 px and a one-unit margin surrounds the bounding box. Output depends only
on the inputs, so figures can be compared byte for byte.
"""

from __future__ import annotations

from .polygon import Polygon, boundary_points, interior_points

UNIT = 32
DOT_RADIUS = 4


def render_svg(p: Polygon, triangles=None) -> str:
    x0, y0, x1, y1 = p.bbox()
    width = (x1 - x0 + 2) * UNIT
    height = (y1 - y0 + 2) * UNIT

    def sx(x):
        return (x - x0 + 1) * UNIT

    def sy(y):
        return (y1 - y + 1) * UNIT

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">',
    ]
    pts = " ".join(f"{sx(v.x)},{sy(v.y)}" for v in p.vertices)
    out.append(
        f'<polygon class="outline" points="{pts}" fill="#eef3fb"'
        ' stroke="#1a1a1a" stroke-width="2"/>'
    )
    if triangles:
        edges = set()
        for t in triangles:
            for i in range(3):
                a, b = t[i], t[(i + 1) % 3]
                edges.add((a, b) if a <= b else (b, a))
        out.append('<g class="triangulation" stroke="#3366cc" stroke-width="1">')
        for a, b in sorted(edges):
            out.append(
                f'<line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(b[0])}" y2="{sy(b[1])}"/>'
            )
        out.append("</g>")
    out.append('<g class="boundary-points" fill="#1a1a1a">')
    for q in sorted(boundary_points(p)):
        out.append(f'<circle cx="{sx(q.x)}" cy="{sy(q.y)}" r="{DOT_RADIUS}"/>')
    out.append("</g>")
    out.append('<g class="interior-points" fill="#ffffff" stroke="#cc3333" stroke-width="2">')
    for q in interior_points(p):
        out.append(f'<circle cx="{sx(q.x)}" cy="{sy(q.y)}" r="{DOT_RADIUS}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
