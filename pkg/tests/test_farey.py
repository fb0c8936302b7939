from fractions import Fraction as F

import pytest

from oracles import farey_by_sorting, totients
from picklattice.errors import NotNeighbors, NotOrdered, TooLarge
from picklattice.farey import (
    farey_sequence,
    format_fraction,
    mediant,
    neighbor_to_cell,
    verify_neighbors,
)
from picklattice.lattice import cross, is_simple

F5 = ["0/1", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1/1"]


def test_small_orders():
    assert farey_sequence(1) == [F(0), F(1)]
    assert [format_fraction(f) for f in farey_sequence(5)] == F5


def test_length_100():
    assert len(farey_sequence(100)) == 3045 == 1 + sum(totients(100)[1:])


def test_matches_sorting_oracle():
    for n in range(1, 60):
        assert farey_sequence(n) == farey_by_sorting(n)


def test_length_recurrence():
    phi = totients(100)
    prev = farey_sequence(1)
    for n in range(2, 101):
        cur = farey_sequence(n)
        assert len(cur) == len(prev) + phi[n]
        it = iter(cur)
        assert all(f in it for f in prev)  # ordered subsequence
        prev = cur


def test_symmetry():
    for n in (7, 30):
        seq = set(farey_sequence(n))
        assert all(1 - f in seq for f in seq)


def test_too_large():
    with pytest.raises(TooLarge):
        farey_sequence(10**6 + 1)


class TestNeighbors:
    def test_examples(self):
        assert F(1, 3).denominator * F(2, 5).numerator - F(1, 3).numerator * F(2, 5).denominator == 1
        assert verify_neighbors(farey_sequence(1))
        assert not verify_neighbors([F(0), F(1, 2), F(1, 3)])

    def test_all_orders(self):
        assert all(verify_neighbors(farey_sequence(n)) for n in range(1, 101))


class TestMediant:
    @pytest.mark.parametrize(
        "a, b, m", [(F(0), F(1), F(1, 2)), (F(1, 3), F(2, 5), F(3, 8)), (F(1, 2), F(1), F(2, 3))]
    )
    def test_examples(self, a, b, m):
        assert mediant(a, b) == m
        assert a < m < b

    def test_first_new_term(self):
        seq = farey_sequence(8)
        for a, b in zip(seq, seq[1:]):
            m = mediant(a, b)
            first = next(n for n in range(1, 20) if m in farey_sequence(n))
            assert first == a.denominator + b.denominator

    def test_not_ordered(self):
        with pytest.raises(NotOrdered):
            mediant(F(1, 2), F(1, 3))


class TestCells:
    @pytest.mark.parametrize(
        "a, b, cell",
        [
            (F(1, 3), F(2, 5), ((3, 1), (5, 2))),
            (F(0), F(1), ((1, 0), (1, 1))),
            (F(1, 2), F(2, 3), ((2, 1), (3, 2))),
        ],
    )
    def test_examples(self, a, b, cell):
        u, v = neighbor_to_cell(a, b)
        assert (u, v) == cell
        assert abs(cross(u, v)) == 1

    def test_not_neighbors(self):
        with pytest.raises(NotNeighbors):
            neighbor_to_cell(F(1, 3), F(2, 3))

    def test_every_pair_is_a_unit_cell(self):
        seq = farey_sequence(40)
        for a, b in zip(seq, seq[1:]):
            u, v = neighbor_to_cell(a, b)
            assert abs(cross(u, v)) == 1
            assert is_simple(u) and is_simple(v)
