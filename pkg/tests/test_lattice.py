import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import gcd_by_divisors, min_twice_area_exhaustive, points_strictly_between
from picklattice.errors import BothZero, CoordinateOverflow, NotSimple, ZeroVector
from picklattice.lattice import (
    MAX_COORD,
    BasisChange,
    LatticeVector,
    all_partners,
    as_vector,
    cross,
    euclid_steps,
    extended_gcd,
    gcd,
    interior_lattice_points_on_segment,
    is_simple,
    is_unimodular,
    minimal_triangle,
    primitive_partner,
)
from picklattice.polygon import interior_count

ints = st.integers(-(10**6), 10**6)


@pytest.mark.parametrize("a, b, expected", [(173, 16, 1), (0, 7, 7), (12, 8, 4), (0, 0, 0), (-12, 8, 4)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected
    assert gcd_by_divisors(a, b) == expected


class TestExtendedGcd:
    def test_worked_example(self):
        cert = extended_gcd(173, 16)
        assert (cert.g, cert.s, cert.t) == (1, 5, -54)
        assert 5 * 173 - 54 * 16 == 1
        assert str(cert) == "1 = 5·173 − 54·16"

    def test_euclid_steps_of_worked_example(self):
        assert euclid_steps(173, 16)[:3] == [(173, 10, 16, 13), (16, 1, 13, 3), (13, 4, 3, 1)]

    def test_identity_case(self):
        cert = extended_gcd(1, 0)
        assert (cert.g, cert.s, cert.t) == (1, 1, 0)

    def test_twelve_eight(self):
        cert = extended_gcd(12, 8)
        assert cert.g == 4
        assert cert.s * 12 + cert.t * 8 == 4
        # exhaustive search over |s|, |t| <= 8 finds the same minimal |s|
        sols = [(s, t) for s in range(-8, 9) for t in range(-8, 9) if 12 * s + 8 * t == 4]
        assert abs(cert.s) == min(abs(s) for s, _ in sols)

    def test_both_zero(self):
        with pytest.raises(BothZero):
            extended_gcd(0, 0)

    @given(ints, ints)
    def test_certificate_holds(self, a, b):
        if a == 0 and b == 0:
            return
        cert = extended_gcd(a, b)
        assert cert.s * a + cert.t * b == cert.g
        assert cert.g == gcd(a, b) > 0
        if b != 0:
            assert 2 * abs(cert.s) * cert.g <= abs(b)


class TestSimple:
    def test_examples(self):
        assert is_simple((173, 16))
        assert is_simple((1, 0))
        assert not is_simple((6, 4))

    def test_zero_vector(self):
        with pytest.raises(ZeroVector):
            is_simple((0, 0))
        with pytest.raises(ZeroVector):
            interior_lattice_points_on_segment((0, 0))

    @pytest.mark.parametrize("v, expected", [((6, 4), 1), ((1, 1), 0), ((0, 5), 4)])
    def test_points_on_segment(self, v, expected):
        assert interior_lattice_points_on_segment(v) == expected
        assert len(points_strictly_between(*v)) == expected

    def test_agrees_with_segment_walk(self):
        for x in range(-50, 51):
            for y in range(-50, 51):
                if x == 0 and y == 0:
                    continue
                assert is_simple((x, y)) == (not points_strictly_between(x, y))


class TestPartner:
    @pytest.mark.parametrize(
        "u, w", [((173, 16), (54, 5)), ((1, 0), (0, 1)), ((3, 2), (1, 1))]
    )
    def test_examples(self, u, w):
        assert primitive_partner(u) == w
        assert cross(u, w) == 1

    def test_not_simple(self):
        with pytest.raises(NotSimple):
            primitive_partner((6, 4))

    def test_canonical_range(self):
        for u in [(5, 3), (-5, 3), (5, -3), (-5, -3), (0, 1), (0, -1), (1, 7)]:
            w = primitive_partner(u)
            if u[0]:
                assert 0 <= w.x < abs(u[0])
            else:
                assert 0 <= w.y < abs(u[1])

    def test_random_large_vectors(self):
        rng = random.Random(1)
        done = 0
        while done < 1000:
            u = (rng.randint(-(10**6), 10**6), rng.randint(-(10**6), 10**6))
            if u == (0, 0) or gcd(*u) != 1:
                continue
            w = primitive_partner(u)
            assert cross(u, w) == 1
            assert gcd(*w) == 1
            done += 1

    def test_all_partners_worked_example(self):
        ws = all_partners((173, 16), 2)
        assert len(ws) == 4
        for w in [(54, 5), (-54, -5), (119, 11), (-119, -11)]:
            assert w in ws
        assert all(abs(cross((173, 16), w)) == 1 for w in ws)

    def test_all_partners_small(self):
        assert set(all_partners((1, 0), 1)) == {(0, 1), (0, -1)}
        ws = all_partners((3, 2), 3)
        assert len(ws) == 6 and len(set(ws)) == 6
        assert all(abs(3 * w[1] - 2 * w[0]) == 1 for w in ws)


class TestUnimodular:
    @pytest.mark.parametrize(
        "m, expected", [((1, 0, 0, 1), True), ((2, 1, 1, 1), True), ((2, 0, 0, 2), False)]
    )
    def test_examples(self, m, expected):
        assert is_unimodular(BasisChange(*m)) is expected

    @given(
        st.sampled_from([(1, 0, 0, 1), (2, 1, 1, 1), (1, 3, 0, 1), (0, 1, -1, 0), (5, 2, 2, 1)]),
        st.tuples(ints, ints),
        st.tuples(ints, ints),
    )
    def test_basis_change_preserves_area(self, m, u, v):
        change = BasisChange(*m)
        assert is_unimodular(change)
        p, q = change.apply((1, 0), (0, 1))
        # coordinates of u, v in the basis {p, q} map to these lattice vectors
        u2 = LatticeVector(*p) * u[0] + LatticeVector(*q) * u[1]
        v2 = LatticeVector(*p) * v[0] + LatticeVector(*q) * v[1]
        assert abs(cross(u2, v2)) == abs(cross(u, v))


class TestMinimalTriangle:
    def test_examples(self):
        w, twice = minimal_triangle(6, 4)
        assert twice == 2 == min_twice_area_exhaustive(6, 4, 10)
        assert abs(6 * w.y - 4 * w.x) == 2
        assert minimal_triangle(1, 0) == ((0, 1), 1)
        w, twice = minimal_triangle(173, 16)
        assert twice == 1 and w == primitive_partner((173, 16))

    def test_zero(self):
        with pytest.raises(ZeroVector):
            minimal_triangle(0, 0)

    def test_no_interior_points(self):
        for a, b in [(6, 4), (12, -9), (0, 7), (-10, 0), (30, 18)]:
            w, twice = minimal_triangle(a, b)
            assert twice == gcd(a, b)
            assert interior_count([(0, 0), (a, b), tuple(w)]) == 0


class TestBounds:
    def test_overflow(self):
        with pytest.raises(CoordinateOverflow):
            as_vector((MAX_COORD + 1, 0))
        with pytest.raises(CoordinateOverflow):
            primitive_partner((MAX_COORD + 1, 1))

    def test_max_bound_is_exact(self):
        u = (MAX_COORD, MAX_COORD - 1)
        w = primitive_partner(u)
        assert cross(u, w) == 1

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            as_vector((1.0, 2))
        with pytest.raises(TypeError):
            as_vector((True, 2))
