"""Farey sequences and their link to unit-area lattice cells."""

from __future__ import annotations

from fractions import Fraction

from .errors import NotNeighbors, NotOrdered, TooLarge
from .lattice import LatticeVector

MAX_ORDER = 10**6


def _check_proper(f: Fraction) -> None:
    if not 0 <= f <= 1:
        raise ValueError(f"{f} is not a proper non-negative fraction")


def farey_sequence(n: int) -> list[Fraction]:
    """All reduced fractions in ``[0, 1]`` with denominator at most ``n``, ascending.

    Generated term by term from the last two: after ``a/b, c/d`` comes
    ``(k c - a) / (k d - b)`` with ``k = (n + b) // d``.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > MAX_ORDER:
        raise TooLarge(f"order {n} exceeds {MAX_ORDER}")
    a, b, c, d = 0, 1, 1, n
    out = [Fraction(0, 1)]
    while c <= n:
        out.append(Fraction(c, d))
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return out


def verify_neighbors(seq) -> bool:
    """Every adjacent pair ``a/b, c/d`` satisfies ``b c - a d == 1``."""
    return all(
        x.denominator * y.numerator - x.numerator * y.denominator == 1
        for x, y in zip(seq, seq[1:])
    )


def mediant(a: Fraction, b: Fraction) -> Fraction:
    if not a < b:
        raise NotOrdered(f"mediant needs a < b, got {a} and {b}")
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def neighbor_to_cell(a: Fraction, b: Fraction) -> tuple[LatticeVector, LatticeVector]:
    """Vectors ``(den, num)`` of two Farey neighbours; they span a unit cell."""
    for f in (a, b):
        _check_proper(f)
    if a.denominator * b.numerator - a.numerator * b.denominator != 1:
        raise NotNeighbors(f"{a} and {b} are not Farey neighbours")
    return (
        LatticeVector(a.denominator, a.numerator),
        LatticeVector(b.denominator, b.numerator),
    )


def format_fraction(f: Fraction) -> str:
    """``p/q`` even for integers (``0/1``, ``1/1``)."""
    return f"{f.numerator}/{f.denominator}"
