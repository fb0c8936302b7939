"""Simple lattice polygons: validation, lattice-point counts and areas.

Areas are carried doubled (``twice_area``) so that every value is an exact
integer. A :class:`Polygon` is always stored counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ChordEndpointsNotOnBoundary,
    ChordNotInside,
    ChordSelfIntersects,
    Collinear,
    DegenerateEdge,
    RepeatedVertex,
    SelfIntersection,
    TooFewVertices,
)
from .lattice import LatticeVector, as_vector, cross, orient

# Rows of the bounding box classified per numpy batch; bounds peak memory.
_ROW_CHUNK = 256


def _on_segment(p, a, b) -> bool:
    """Closed-segment membership for a point already known collinear."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def point_on_segment(p, a, b) -> bool:
    return orient(a, b, p) == 0 and _on_segment(p, a, b)


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ``ab`` and ``cd`` share at least one point."""
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    return (
        (d1 == 0 and _on_segment(a, c, d))
        or (d2 == 0 and _on_segment(b, c, d))
        or (d3 == 0 and _on_segment(c, a, b))
        or (d4 == 0 and _on_segment(d, a, b))
    )


def signed_twice_area(vertices: Sequence) -> int:
    """Cyclic shoelace sum; positive for counterclockwise vertex order."""
    n = len(vertices)
    total = 0
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total


def _fmt_edge(vs, i) -> str:
    a, b = vs[i], vs[(i + 1) % len(vs)]
    return f"{i} ({a[0]},{a[1]})-({b[0]},{b[1]})"


def _check_simple(vs: Sequence[LatticeVector]) -> None:
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        c = vs[(i + 2) % n]
        # adjacent edges may only meet at their shared vertex b
        if orient(a, b, c) == 0:
            if (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) < 0:
                j = (i + 1) % n
                raise SelfIntersection(
                    f"edges {_fmt_edge(vs, i)} and {_fmt_edge(vs, j)} overlap",
                    edges=(i, j),
                )
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            c, d = vs[j], vs[(j + 1) % n]
            if segments_intersect(a, b, c, d):
                raise SelfIntersection(
                    f"edges {_fmt_edge(vs, i)} and {_fmt_edge(vs, j)} intersect",
                    edges=(i, j),
                )


@dataclass(frozen=True)
class Polygon:
    """A simple (Jordan) lattice polygon, closed implicitly.

    Construction validates and normalizes to counterclockwise order, keeping
    the first vertex in place. Vertices that sit on a straight angle are
    allowed; see :func:`canonical_vertices` to drop them.
    """

    vertices: tuple[LatticeVector, ...]

    def __post_init__(self):
        vs = list(self.vertices)
        if len(vs) < 3:
            raise TooFewVertices(f"a polygon needs at least 3 vertices, got {len(vs)}")
        vs = [as_vector(v) for v in vs]
        n = len(vs)
        for i in range(n):
            if vs[i] == vs[(i + 1) % n]:
                raise DegenerateEdge(f"edge {i} has zero length at {tuple(vs[i])}")
        seen = {}
        for i, v in enumerate(vs):
            if v in seen:
                raise RepeatedVertex(
                    f"vertex {tuple(v)} repeated at positions {seen[v]} and {i}"
                )
            seen[v] = i
        _check_simple(vs)
        area = signed_twice_area(vs)
        if area == 0:
            raise SelfIntersection("polygon encloses zero area")
        if area < 0:
            vs = [vs[0]] + vs[:0:-1]
        object.__setattr__(self, "vertices", tuple(vs))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self) -> Iterable[tuple[LatticeVector, LatticeVector]]:
        vs = self.vertices
        return ((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def bbox(self) -> tuple[int, int, int, int]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def validate(vertices: Sequence) -> Polygon:
    return Polygon(tuple(vertices))


def _as_polygon(p) -> Polygon:
    return p if isinstance(p, Polygon) else Polygon(tuple(p))


# -- counting ------------------------------------------------------------


def boundary_points(p: Polygon) -> list[LatticeVector]:
    """All lattice points on the boundary, counterclockwise from vertex 0."""
    pts = []
    for a, b in _as_polygon(p).edges():
        dx, dy = b.x - a.x, b.y - a.y
        g = math.gcd(dx, dy)
        sx, sy = dx // g, dy // g
        pts.extend(LatticeVector(a.x + k * sx, a.y + k * sy) for k in range(g))
    return pts


def boundary_count(p: Polygon) -> int:
    return sum(math.gcd(b.x - a.x, b.y - a.y) for a, b in _as_polygon(p).edges())


def _classify_rows(verts, x0, x1, y0, y1):
    """Boundary and strict-interior masks over the box, one row per y.

    Crossing-number rule with the half-open convention ``(y_a > py) !=
    (y_b > py)``; the x-comparison against the crossing is done by the sign
    of an integer cross product, so no division happens anywhere.
    """
    X, Y = np.meshgrid(
        np.arange(x0, x1 + 1, dtype=np.int64),
        np.arange(y0, y1 + 1, dtype=np.int64),
    )
    on_boundary = np.zeros(X.shape, dtype=bool)
    odd = np.zeros(X.shape, dtype=bool)
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        c = (bx - ax) * (Y - ay) - (X - ax) * (by - ay)
        on_boundary |= (
            (c == 0)
            & (X >= min(ax, bx))
            & (X <= max(ax, bx))
            & (Y >= min(ay, by))
            & (Y <= max(ay, by))
        )
        if ay == by:
            continue
        straddle = (ay > Y) != (by > Y)
        right = c > 0 if by > ay else c < 0
        odd ^= straddle & right
    return on_boundary, odd & ~on_boundary


def _interior_chunks(p: Polygon):
    x0, y0, x1, y1 = p.bbox()
    verts = p.vertices
    for ys in range(y0 + 1, y1, _ROW_CHUNK):
        ye = min(ys + _ROW_CHUNK - 1, y1 - 1)
        _, inside = _classify_rows(verts, x0 + 1, x1 - 1, ys, ye)
        yield x0 + 1, ys, inside


def interior_count(p: Polygon) -> int:
    """Number of lattice points strictly inside ``p`` (bounding-box scan)."""
    p = _as_polygon(p)
    return int(sum(int(inside.sum()) for _, _, inside in _interior_chunks(p)))


def interior_points(p: Polygon) -> list[LatticeVector]:
    """Strict-interior lattice points in lexicographic ``(x, y)`` order."""
    p = _as_polygon(p)
    pts = []
    for xs, ys, inside in _interior_chunks(p):
        rows, cols = np.nonzero(inside)
        pts.extend(LatticeVector(int(xs + c), int(ys + r)) for r, c in zip(rows, cols))
    pts.sort()
    return pts


def classify_point(p: Polygon, q) -> str:
    """``"boundary"``, ``"interior"`` or ``"exterior"`` for one lattice point."""
    p = _as_polygon(p)
    on_b, inside = _classify_rows(p.vertices, q[0], q[0], q[1], q[1])
    if on_b[0, 0]:
        return "boundary"
    return "interior" if inside[0, 0] else "exterior"


def on_boundary(p: Polygon, q) -> bool:
    return any(point_on_segment(q, a, b) for a, b in _as_polygon(p).edges())


# -- areas -----------------------------------------------------------------


def pick_twice_area(p: Polygon) -> int:
    """``2A = N^b + 2 N^i - 2`` from the lattice-point counts."""
    p = _as_polygon(p)
    return boundary_count(p) + 2 * interior_count(p) - 2


def f_functional(p: Polygon) -> int:
    """Twice the additive functional ``N^b/2 + N^i - 1`` of ``p``."""
    p = _as_polygon(p)
    nb = boundary_count(p)
    ni = interior_count(p)
    return nb + 2 * ni - 2


def shoelace_twice_area(p) -> int:
    """``|sum_i (x_i y_{i+1} - x_{i+1} y_i)|`` over the closed vertex cycle.

    Accepts a :class:`Polygon` or any raw vertex sequence.
    """
    vs = p.vertices if isinstance(p, Polygon) else [as_vector(v) for v in p]
    return abs(signed_twice_area(vs))


def twice_area_of_triangle(u, v) -> int:
    """``|det(u, v)|`` for the triangle spanned by ``u`` and ``v`` at the origin."""
    u, v = as_vector(u), as_vector(v)
    d = cross(u, v)
    if d == 0:
        raise Collinear(f"{tuple(u)} and {tuple(v)} are collinear")
    return abs(d)


def format_area(twice_area: int) -> str:
    """Exact decimal for ``twice_area / 2``; always ends in ``.0`` or ``.5``."""
    q, r = divmod(twice_area, 2)
    return f"{q}.5" if r else f"{q}.0"


# -- canonical form and chord splitting ---------------------------------------


def canonical_vertices(p: Polygon) -> Polygon:
    """Drop vertices that lie on a straight angle between their neighbours."""
    p = _as_polygon(p)
    vs = p.vertices
    n = len(vs)
    keep = [v for i, v in enumerate(vs) if orient(vs[i - 1], v, vs[(i + 1) % n]) != 0]
    return Polygon(tuple(keep))


def _insert_point(vs: list, q) -> int:
    """Index of ``q`` in the vertex cycle ``vs``, splicing it into its edge."""
    try:
        return vs.index(q)
    except ValueError:
        pass
    n = len(vs)
    for i in range(n):
        if point_on_segment(q, vs[i], vs[(i + 1) % n]):
            vs.insert(i + 1, q)
            return i + 1
    raise ChordEndpointsNotOnBoundary(f"{tuple(q)} is not on the boundary")


def _touch_allowed(a, b, c, d, allowed) -> bool:
    """Chord segment ``ab`` meets edge ``cd`` only at points in ``allowed``."""
    if not segments_intersect(a, b, c, d):
        return True
    if orient(a, b, c) == 0 and orient(a, b, d) == 0:
        # collinear overlap: compare along the dominant axis
        k = 0 if a[0] != b[0] else 1
        lo = max(min(a[k], b[k]), min(c[k], d[k]))
        hi = min(max(a[k], b[k]), max(c[k], d[k]))
        if lo != hi:
            return False
        return any(e[k] == lo for e in allowed)
    return any(point_on_segment(e, c, d) for e in allowed)


def split_by_chord(p: Polygon, chord: Sequence) -> tuple[Polygon, Polygon]:
    """Cut ``p`` along a lattice path joining two boundary points.

    The path's interior must lie strictly inside ``p``. Returns
    ``(left, right)``: ``left`` runs along the boundary from the chord's start
    to its end counterclockwise and closes back along the chord.
    """
    p = _as_polygon(p)
    path = [as_vector(q) for q in chord]
    if len(path) < 2:
        raise ChordSelfIntersects("a chord needs at least two points")
    if len(set(path)) != len(path):
        raise ChordSelfIntersects("chord revisits a lattice point")
    segs = list(zip(path, path[1:]))
    for i, (a, b) in enumerate(segs):
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            if j == i + 1:
                if orient(a, b, d) == 0 and (
                    (b[0] - a[0]) * (d[0] - c[0]) + (b[1] - a[1]) * (d[1] - c[1]) < 0
                ):
                    raise ChordSelfIntersects(f"chord folds back at {tuple(b)}")
            elif segments_intersect(a, b, c, d):
                raise ChordSelfIntersects(f"chord segments {i} and {j} intersect")

    start, end = path[0], path[-1]
    for q in (start, end):
        if not on_boundary(p, q):
            raise ChordEndpointsNotOnBoundary(f"{tuple(q)} is not on the boundary")
    for q in path[1:-1]:
        if classify_point(p, q) != "interior":
            raise ChordNotInside(f"chord point {tuple(q)} is not strictly inside")
    last = len(segs) - 1
    for i, (a, b) in enumerate(segs):
        allowed = ([start] if i == 0 else []) + ([end] if i == last else [])
        for c, d in p.edges():
            if not _touch_allowed(a, b, c, d, allowed):
                raise ChordNotInside(
                    f"chord segment ({a.x},{a.y})-({b.x},{b.y}) touches the boundary"
                )
    # a segment clear of the boundary is wholly inside or wholly outside;
    # test its midpoint on the doubled lattice
    a, b = segs[0]
    if not _strictly_inside_doubled(p.vertices, a + b):
        raise ChordNotInside("chord runs outside the polygon")

    cycle = list(p.vertices)
    _insert_point(cycle, start)
    _insert_point(cycle, end)
    i, j = cycle.index(start), cycle.index(end)
    n = len(cycle)
    along = [cycle[(i + k) % n] for k in range((j - i) % n + 1)]  # start .. end
    back = [cycle[(j + k) % n] for k in range((i - j) % n + 1)]  # end .. start
    inner = path[1:-1]
    left = Polygon(tuple(along + inner[::-1]))
    right = Polygon(tuple(back + inner))
    return left, right


def _strictly_inside_doubled(verts, q2) -> bool:
    """Crossing-number test for the half-integer point ``q2 / 2``."""
    px, py = q2
    odd = False
    n = len(verts)
    for i in range(n):
        ax, ay = 2 * verts[i][0], 2 * verts[i][1]
        bx, by = 2 * verts[(i + 1) % n][0], 2 * verts[(i + 1) % n][1]
        c = (bx - ax) * (py - ay) - (px - ax) * (by - ay)
        if c == 0 and _on_segment((px, py), (ax, ay), (bx, by)):
            return False
        if (ay > py) != (by > py) and (c > 0) == (by > ay):
            odd = not odd
    return odd
