"""Elementary triangulations of lattice polygons.

A polygon is ear-clipped into lattice triangles, then every triangle that
still contains a lattice point other than its corners is split through the
lexicographically smallest such point (two pieces for a point on an edge,
three for an interior point). Twice-area drops strictly at each split, and a
lattice triangle of twice-area above one always holds an extra lattice
point, so the process ends with triangles of twice-area exactly one.
"""

from __future__ import annotations

import heapq
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import Disconnected, InconsistentTriangulation
from .lattice import LatticeVector, orient
from .polygon import (
    Polygon,
    _as_polygon,
    boundary_count,
    boundary_points,
    interior_points,
    point_on_segment,
)

SEED = "seed"
ADDS_BOUNDARY_POINT = "adds-boundary-point"
WEDGE_FILL = "wedge-fill"


class ElementaryTriangle(NamedTuple):
    a: LatticeVector
    b: LatticeVector
    c: LatticeVector

    @property
    def twice_area(self) -> int:
        return orient(self.a, self.b, self.c)

    def edges(self):
        return (
            _edge_key(self.a, self.b),
            _edge_key(self.b, self.c),
            _edge_key(self.c, self.a),
        )


@dataclass(frozen=True)
class TriangulationStats:
    n_triangles: int
    n_edges: int
    n_vertices: int
    n_boundary: int
    n_interior: int

    def euler_characteristic(self) -> int:
        # V + F - E with the outer face counted
        return self.n_vertices + (self.n_triangles + 1) - self.n_edges


def _edge_key(p, q):
    return (p, q) if p <= q else (q, p)


def _in_closed_triangle(q, a, b, c) -> bool:
    # a, b, c counterclockwise
    return orient(a, b, q) >= 0 and orient(b, c, q) >= 0 and orient(c, a, q) >= 0


def _ear_clip(vertices) -> list[tuple]:
    """Fan the polygon into lattice triangles, scanning in stored order."""
    ring = list(vertices)
    out = []
    while len(ring) > 3:
        n = len(ring)
        for i in range(n):
            a, b, c = ring[i - 1], ring[i], ring[(i + 1) % n]
            turn = orient(a, b, c)
            if turn == 0:
                # straight vertex: drop it, the triangle built on a-c will
                # later be split through b
                del ring[i]
                break
            if turn < 0:
                continue
            if any(
                _in_closed_triangle(q, a, b, c)
                for q in ring
                if q != a and q != b and q != c
            ):
                continue
            out.append((a, b, c))
            del ring[i]
            break
        else:  # pragma: no cover - two-ears theorem
            raise InconsistentTriangulation("no ear found; polygon is not simple")
    if orient(*ring) != 0:
        out.append(tuple(ring))
    return out


def _refine(tri, bucket, out) -> None:
    stack = [(tri, bucket)]
    while stack:
        (a, b, c), pts = stack.pop()
        if not pts:
            t = ElementaryTriangle(a, b, c)
            if t.twice_area != 1:
                raise InconsistentTriangulation(
                    f"triangle {t} has no extra lattice point but twice-area {t.twice_area}"
                )
            out.append(t)
            continue
        q = min(pts)
        if point_on_segment(q, a, b):
            kids = [(a, q, c), (q, b, c)]
        elif point_on_segment(q, b, c):
            kids = [(a, b, q), (a, q, c)]
        elif point_on_segment(q, c, a):
            kids = [(a, b, q), (q, b, c)]
        else:
            kids = [(a, b, q), (b, c, q), (c, a, q)]
        rest = [r for r in pts if r != q]
        # push in reverse so children are emitted in construction order
        for k in reversed(kids):
            corners = set(k)
            stack.append(
                (k, [r for r in rest if r not in corners and _in_closed_triangle(r, *k)])
            )


def triangulate(p: Polygon) -> list[ElementaryTriangle]:
    """Tile ``p`` with counterclockwise elementary lattice triangles.

    Every lattice point of ``p`` ends up as a triangle corner, and the number
    of triangles is ``N^b + 2 N^i - 2``.
    """
    p = _as_polygon(p)
    points = boundary_points(p) + interior_points(p)
    out: list[ElementaryTriangle] = []
    for tri in _ear_clip(p.vertices):
        corners = set(tri)
        bucket = [q for q in points if q not in corners and _in_closed_triangle(q, *tri)]
        _refine(tri, bucket, out)
    return out


def stats(triangles, p: Polygon) -> TriangulationStats:
    """Distinct vertex and edge counts, checked against the closed formulas."""
    p = _as_polygon(p)
    verts = set()
    edges = set()
    for t in triangles:
        verts.update(t)
        edges.update(ElementaryTriangle(*t).edges())
    nb = boundary_count(p)
    boundary = set(boundary_points(p))
    if not boundary <= verts:
        raise InconsistentTriangulation("some boundary lattice point is not a vertex")
    ni = len(verts) - nb
    s = TriangulationStats(
        n_triangles=len(triangles),
        n_edges=len(edges),
        n_vertices=len(verts),
        n_boundary=nb,
        n_interior=ni,
    )
    if s.euler_characteristic() != 2:
        raise InconsistentTriangulation(
            f"Euler check failed: V + F - E = {s.euler_characteristic()}"
        )
    if s.n_edges != 2 * nb + 3 * ni - 3:
        raise InconsistentTriangulation(f"edge count {s.n_edges} != 2N^b + 3N^i - 3")
    if s.n_triangles != nb + 2 * ni - 2:
        raise InconsistentTriangulation(f"triangle count {s.n_triangles} != N^b + 2N^i - 2")
    return s


@dataclass(frozen=True)
class ReassemblyStep:
    """One triangle added to the running union, with the union's counts after it."""

    triangle: ElementaryTriangle
    kind: str
    n_boundary: int
    n_interior: int
    twice_area: int

    @property
    def twice_f(self) -> int:
        return self.n_boundary + 2 * self.n_interior - 2


def reassembly_order(triangles) -> list[ReassemblyStep]:
    """Rebuild the polygon one triangle at a time, keeping the union a disk.

    Candidates are taken in breadth-first order over edge adjacency starting
    from the first triangle; a candidate is attached only if it meets the
    union in one edge and a new corner (``adds-boundary-point``) or in two
    edges (``wedge-fill``, which turns a boundary point into an interior
    one). After every step the union's lattice-point counts are recomputed
    from its edge multiplicities and Pick's relation is checked against the
    accumulated area.
    """
    tris = [ElementaryTriangle(*t) for t in triangles]
    if not tris:
        return []
    by_edge = defaultdict(list)
    for i, t in enumerate(tris):
        for e in t.edges():
            by_edge[e].append(i)

    seen = {0}
    queue = deque([0])
    bfs = []
    while queue:
        i = queue.popleft()
        bfs.append(i)
        for e in tris[i].edges():
            for j in by_edge[e]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
    if len(bfs) != len(tris):
        raise Disconnected(
            f"{len(tris) - len(bfs)} triangles are not edge-connected to the first"
        )

    edge_use = Counter()
    union_verts = set()
    bdry_degree = Counter()  # vertex -> number of union boundary edges at it
    placed = [False] * len(tris)
    steps = []
    twice_area = nb = 0

    def attach(t: ElementaryTriangle, kind: str):
        nonlocal twice_area, nb
        union_verts.update(t)
        for e in t.edges():
            edge_use[e] += 1
            delta = 1 if edge_use[e] == 1 else -1
            for v in e:
                before = bdry_degree[v]
                bdry_degree[v] = before + delta
                if before == 0 and before + delta > 0:
                    nb += 1
                elif before > 0 and before + delta == 0:
                    nb -= 1
        twice_area += t.twice_area
        ni = len(union_verts) - nb
        step = ReassemblyStep(t, kind, nb, ni, twice_area)
        if step.twice_f != twice_area:
            raise InconsistentTriangulation(
                f"Pick fails on running union: 2F={step.twice_f}, 2A={twice_area}"
            )
        steps.append(step)

    rank = {i: r for r, i in enumerate(bfs)}
    frontier: list[tuple[int, int]] = []
    queued = set()
    # A rejected triangle can only become attachable once a triangle across
    # one of its edges is placed, so it waits here until then.
    deferred = set()

    def place(i: int, kind: str):
        attach(tris[i], kind)
        placed[i] = True
        for e in tris[i].edges():
            for j in by_edge[e]:
                if placed[j]:
                    continue
                if j in deferred:
                    deferred.discard(j)
                    heapq.heappush(frontier, (rank[j], j))
                elif j not in queued:
                    queued.add(j)
                    heapq.heappush(frontier, (rank[j], j))

    place(0, SEED)
    while frontier:
        _, i = heapq.heappop(frontier)
        t = tris[i]
        shared = [e for e in t.edges() if edge_use[e]]
        if len(shared) == 1:
            a, b = shared[0]
            apex = next(v for v in t if v != a and v != b)
            # an apex already in the union would pinch it
            kind = None if apex in union_verts else ADDS_BOUNDARY_POINT
        else:
            kind = WEDGE_FILL if len(shared) == 2 else None
        if kind is None:
            deferred.add(i)
            continue
        place(i, kind)
    if len(steps) != len(tris):
        raise InconsistentTriangulation("no triangle can be attached as a disk")
    return steps
