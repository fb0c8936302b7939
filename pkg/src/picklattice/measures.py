"""Visibility-angle sums and the integer scaling study.

Both are alternative routes to the area of a lattice polygon. The angle sum
is computed in floating point from exact edge vectors; the scaling study is
exact throughout, with ratios held as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import LatticeVector, check_bound, orient
from .polygon import (
    Polygon,
    _as_polygon,
    boundary_count,
    boundary_points,
    interior_count,
    interior_points,
    shoelace_twice_area,
)

TAU = 2 * math.pi


@dataclass(frozen=True)
class VisibilityReport:
    """Per-point visible fraction of a small disk, and their sum."""

    per_point: list[tuple[LatticeVector, float]]
    total: float


def _vertex_alphas(p: Polygon) -> list[tuple[LatticeVector, float]]:
    pts = boundary_points(p)
    n = len(pts)
    out = []
    for i, b in enumerate(pts):
        a, c = pts[i - 1], pts[(i + 1) % n]
        if orient(a, b, c) == 0:
            # straight angle; a fold-back is impossible on a simple polygon
            out.append((b, 0.5))
            continue
        ux, uy = c.x - b.x, c.y - b.y
        vx, vy = a.x - b.x, a.y - b.y
        # counterclockwise sweep from the outgoing to the incoming edge
        angle = math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
        if angle < 0:
            angle += TAU
        out.append((b, angle / TAU))
    return out


def boundary_angle_sum(p: Polygon) -> float:
    """Sum of boundary alphas; equals ``N^b / 2 - 1`` up to rounding."""
    return math.fsum(a for _, a in _vertex_alphas(_as_polygon(p)))


def visibility_measure(p: Polygon) -> VisibilityReport:
    p = _as_polygon(p)
    per_point = _vertex_alphas(p)
    per_point.extend((q, 1.0) for q in interior_points(p))
    return VisibilityReport(per_point, math.fsum(a for _, a in per_point))


def scale(p: Polygon, k: int) -> Polygon:
    """Dilate about the origin by the positive integer ``k``."""
    if k < 1:
        raise ValueError("scale factor must be a positive integer")
    p = _as_polygon(p)
    vs = []
    for v in p.vertices:
        check_bound(v.x * k, v.y * k)
        vs.append(v * k)
    return Polygon(tuple(vs))


@dataclass(frozen=True)
class ScalingRow:
    k: int
    interior: int
    predicted: int  # k^2 A - k N^b / 2 + 1
    ratio: Fraction  # N^i(kP) / k^2
    deficit: Fraction  # A - ratio

    @property
    def holds(self) -> bool:
        return self.interior == self.predicted


@dataclass(frozen=True)
class ScalingReport:
    rows: list[ScalingRow]
    twice_area: int
    n_boundary: int

    @property
    def area(self) -> Fraction:
        return Fraction(self.twice_area, 2)

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.rows)

    def to_csv(self) -> str:
        lines = ["k,interior,ratio,deficit"]
        for r in self.rows:
            lines.append(f"{r.k},{r.interior},{r.ratio},{r.deficit}")
        return "\n".join(lines) + "\n"


def scaling_study(p: Polygon, k_max: int) -> ScalingReport:
    """Interior counts of ``k p`` for ``k = 1..k_max`` against the closed form.

    Substituting ``A(kP) = k^2 A`` and ``N^b(kP) = k N^b`` into Pick's
    relation gives ``N^i(kP) = k^2 A - k N^b / 2 + 1`` exactly; the counted
    value is reported next to it.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    p = _as_polygon(p)
    twice = shoelace_twice_area(p)
    nb = boundary_count(p)
    area = Fraction(twice, 2)
    rows = []
    for k in range(1, k_max + 1):
        ni = interior_count(scale(p, k))
        predicted = (k * k * twice - k * nb + 2) // 2
        ratio = Fraction(ni, k * k)
        rows.append(ScalingRow(k, ni, predicted, ratio, area - ratio))
    return ScalingReport(rows, twice, nb)
