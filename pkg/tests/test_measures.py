from fractions import Fraction

import pytest

from polygen import random_polygons
from picklattice.errors import CoordinateOverflow
from picklattice.measures import (
    boundary_angle_sum,
    scale,
    scaling_study,
    visibility_measure,
)
from picklattice.polygon import (
    boundary_count,
    canonical_vertices,
    pick_twice_area,
    shoelace_twice_area,
    validate,
)

SQUARE = validate([(0, 0), (1, 0), (1, 1), (0, 1)])
ELEMENTARY = validate([(0, 0), (1, 0), (0, 1)])
TRI2 = validate([(0, 0), (2, 0), (0, 2)])
TRI4 = validate([(0, 0), (4, 0), (0, 4)])
TOL = 1e-9


class TestVisibility:
    def test_square(self):
        rep = visibility_measure(SQUARE)
        assert [a for _, a in rep.per_point] == [0.25] * 4
        assert rep.total == 1.0

    def test_elementary(self):
        rep = visibility_measure(ELEMENTARY)
        assert dict(rep.per_point) == {(0, 0): 0.25, (1, 0): 0.125, (0, 1): 0.125}
        assert rep.total == 0.5

    def test_tri4(self):
        rep = visibility_measure(TRI4)
        assert abs(rep.total - 8.0) <= TOL
        alphas = dict(rep.per_point)
        assert [alphas[q] for q in [(1, 1), (1, 2), (2, 1)]] == [1.0, 1.0, 1.0]
        # straight-angle boundary points are exactly one half
        assert [alphas[q] for q in [(1, 0), (2, 0), (3, 0), (0, 2), (2, 2)]] == [0.5] * 5

    @pytest.mark.parametrize("p, expected", [(SQUARE, 1.0), (TRI2, 2.0), (ELEMENTARY, 0.5)])
    def test_boundary_sum(self, p, expected):
        assert abs(boundary_angle_sum(p) - expected) <= TOL

    def test_random(self):
        for p in random_polygons(200, seed=21):
            rep = visibility_measure(p)
            assert abs(rep.total - pick_twice_area(p) / 2) <= TOL
            assert abs(boundary_angle_sum(p) - (boundary_count(p) / 2 - 1)) <= TOL
            assert all(0 < a < 1 or a == 1.0 for _, a in rep.per_point)

    def test_translation_invariance(self):
        for p in random_polygons(20, seed=4):
            moved = validate([(v.x + 7, v.y - 3) for v in p.vertices])
            a = sorted(a for _, a in visibility_measure(p).per_point)
            b = sorted(a for _, a in visibility_measure(moved).per_point)
            assert a == pytest.approx(b, abs=1e-15)


class TestScale:
    def test_square(self):
        assert shoelace_twice_area(scale(SQUARE, 3)) == 18

    def test_identity(self):
        assert scale(TRI4, 1) == TRI4

    def test_boundary_scales(self):
        assert boundary_count(scale(ELEMENTARY, 4)) == 12

    def test_overflow(self):
        with pytest.raises(CoordinateOverflow):
            scale(validate([(0, 0), (10**8, 0), (0, 1)]), 11)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            scale(SQUARE, 0)


class TestScalingStudy:
    def test_square_k3(self):
        row = scaling_study(SQUARE, 3).rows[2]
        assert (row.k, row.interior, row.ratio) == (3, 4, Fraction(4, 9))

    def test_elementary_k2(self):
        row = scaling_study(ELEMENTARY, 2).rows[1]
        assert row.interior == row.predicted == 0

    def test_square_k10(self):
        row = scaling_study(SQUARE, 10).rows[9]
        assert row.interior == 81
        assert row.ratio == Fraction(81, 100)
        assert row.deficit == Fraction(4, 20) - Fraction(1, 100) == Fraction(19, 100)

    def test_convergence_from_below(self):
        for p in [SQUARE, TRI4, canonical_vertices(TRI2)] + random_polygons(5, seed=2, lo=-5, hi=5):
            rep = scaling_study(p, 8)
            assert rep.all_hold
            area, nb = rep.area, rep.n_boundary
            ratios = [r.ratio for r in rep.rows]
            assert all(r < area for r in ratios)
            assert ratios == sorted(ratios)
            for r in rep.rows:
                assert r.deficit == Fraction(nb, 2 * r.k) - Fraction(1, r.k**2)

    def test_csv(self):
        text = scaling_study(SQUARE, 3).to_csv()
        assert text.splitlines() == ["k,interior,ratio,deficit", "1,0,0,1", "2,1,1/4,3/4", "3,4,4/9,5/9"]
