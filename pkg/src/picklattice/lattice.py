"""Integer-pair primitives on Z^2.

Everything here is exact integer arithmetic. Inputs are bounded by
``MAX_COORD`` in absolute value so that every 2x2 determinant built from
them (and from differences of them) stays inside a signed 64-bit word; the
numpy point classifier in :mod:`picklattice.polygon` relies on that bound.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BothZero, CoordinateOverflow, NotSimple, ZeroVector

MAX_COORD = 10**9


class LatticeVector(NamedTuple):
    x: int
    y: int

    def __add__(self, other):
        return LatticeVector(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return LatticeVector(self.x - other[0], self.y - other[1])

    def __neg__(self):
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, k):
        return LatticeVector(self.x * k, self.y * k)

    __rmul__ = __mul__


# Points and vectors share one representation.
LatticePoint = LatticeVector


def check_bound(*values: int) -> None:
    for v in values:
        if abs(v) > MAX_COORD:
            raise CoordinateOverflow(
                f"|{v}| exceeds the supported coordinate bound {MAX_COORD}"
            )


def as_vector(v) -> LatticeVector:
    """Coerce a pair of integers to a bounded :class:`LatticeVector`.

    Floats, strings and bools are rejected with ``TypeError``; exactness is
    the point of the package, so nothing is silently rounded.
    """
    if isinstance(v, LatticeVector):
        x, y = v
    else:
        try:
            x, y = v
        except (TypeError, ValueError):
            raise TypeError(f"expected an integer pair, got {v!r}") from None
    for c in (x, y):
        if isinstance(c, bool):
            raise TypeError(f"coordinate {c!r} is not an integer")
    try:
        x, y = operator.index(x), operator.index(y)
    except TypeError:
        raise TypeError(f"coordinates of {v!r} are not integers") from None
    check_bound(x, y)
    return LatticeVector(x, y)


def cross(u, v) -> int:
    """The 2x2 determinant ``u.x * v.y - u.y * v.x``."""
    return u[0] * v[1] - u[1] * v[0]


def orient(o, a, b) -> int:
    """Twice the signed area of triangle ``o, a, b`` (positive when CCW)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


@dataclass(frozen=True)
class BezoutCertificate:
    """``s*a + t*b == g`` with ``g = gcd(|a|, |b|)``."""

    a: int
    b: int
    g: int
    s: int
    t: int

    def holds(self) -> bool:
        return self.s * self.a + self.t * self.b == self.g

    def __str__(self) -> str:
        # e.g. "1 = 5·173 − 54·16"
        sign = "−" if self.t < 0 else "+"
        return (
            f"{self.g} = {_num(self.s)}·{_paren(self.a)}"
            f" {sign} {abs(self.t)}·{_paren(self.b)}"
        )


def _num(n: int) -> str:
    return str(n).replace("-", "−")


def _paren(n: int) -> str:
    return f"({_num(n)})" if n < 0 else str(n)


def euclid_steps(a: int, b: int) -> list[tuple[int, int, int, int]]:
    """Division steps ``(dividend, quotient, divisor, remainder)`` of Euclid.

    >>> euclid_steps(173, 16)
    [(173, 10, 16, 13), (16, 1, 13, 3), (13, 4, 3, 1), (3, 3, 1, 0)]
    """
    a, b = abs(a), abs(b)
    steps = []
    while b:
        q, r = divmod(a, b)
        steps.append((a, q, b, r))
        a, b = b, r
    return steps


def extended_gcd(a: int, b: int) -> BezoutCertificate:
    """Bezout coefficients by back-substitution through Euclid's divisions.

    The coefficient pair is canonicalized so that ``|s| <= |b| / (2g)`` when
    ``b != 0`` (``s`` taken in the half-open range ``(-|b|/2g, |b|/2g]``), and
    ``(s, t) = (sign(a), 0)`` when ``b == 0``.
    """
    a, b = operator.index(a), operator.index(b)
    if a == 0 and b == 0:
        raise BothZero("extended_gcd(0, 0) has no certificate")
    # Invariant: old_r == old_s*|a| + old_t*|b|, same for r, s, t.
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    g = old_r
    s_coef = old_s if a >= 0 else -old_s
    t_coef = old_t if b >= 0 else -old_t

    if b == 0:
        s_coef, t_coef = (1 if a > 0 else -1), 0
    else:
        period = abs(b) // g
        s_coef %= period
        if 2 * s_coef > period:
            s_coef -= period
        t_coef = (g - s_coef * a) // b
    cert = BezoutCertificate(a, b, g, s_coef, t_coef)
    assert cert.holds()
    return cert


def is_simple(v) -> bool:
    """True iff the segment from the origin to ``v`` has no lattice points
    strictly between its endpoints."""
    x, y = as_vector(v)
    if x == 0 and y == 0:
        raise ZeroVector("the zero vector is neither simple nor composite")
    return math.gcd(x, y) == 1


def interior_lattice_points_on_segment(v) -> int:
    x, y = as_vector(v)
    if x == 0 and y == 0:
        raise ZeroVector("segment of zero length")
    return math.gcd(x, y) - 1


def primitive_partner(u) -> LatticeVector:
    """A vector ``w`` with ``cross(u, w) == +1``.

    ``w`` is only determined up to adding multiples of ``u``; we return the
    representative with ``0 <= w.x < |u.x|`` (or ``0 <= w.y < |u.y|`` when
    ``u.x == 0``).

    >>> primitive_partner((173, 16))
    LatticeVector(x=54, y=5)
    """
    u = as_vector(u)
    if u == (0, 0):
        raise ZeroVector("the zero vector has no partner")
    cert = extended_gcd(u.x, u.y)
    if cert.g != 1:
        raise NotSimple(f"{tuple(u)} is not simple (gcd {cert.g})")
    # s*ux + t*uy = 1  =>  cross(u, (-t, s)) = 1
    w = LatticeVector(-cert.t, cert.s)
    if u.x != 0:
        j = -(w.x // abs(u.x)) * (1 if u.x > 0 else -1)
    else:
        j = -(w.y // abs(u.y)) * (1 if u.y > 0 else -1)
    w = w + u * j
    assert cross(u, w) == 1
    return w


def all_partners(u, k: int) -> list[LatticeVector]:
    """``2k`` partners of ``u``: ``w + j*u`` for ``j`` in ``[-(k//2), k - k//2)``
    and their negations, where ``w`` is :func:`primitive_partner`.

    Each spans a unit-area parallelogram with ``u``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    u = as_vector(u)
    w = primitive_partner(u)
    out = []
    for j in range(-(k // 2), k - k // 2):
        v = w + u * j
        out.extend([v, -v])
    return out


@dataclass(frozen=True)
class BasisChange:
    """Integer matrix taking a basis ``{p, q}`` to ``{a p + b q, c p + d q}``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, p, q) -> tuple[LatticeVector, LatticeVector]:
        p, q = LatticeVector(*p), LatticeVector(*q)
        return p * self.a + q * self.b, p * self.c + q * self.d


def is_unimodular(m: BasisChange) -> bool:
    return abs(m.det) == 1


def minimal_triangle(a: int, b: int) -> tuple[LatticeVector, int]:
    """A lattice point ``(alpha, beta)`` minimizing ``|a*beta - b*alpha| > 0``.

    The minimum is ``gcd(|a|, |b|)`` and is attained by the point read off
    the Bezout certificate: ``a*beta - b*alpha == gcd`` with
    ``(alpha, beta) = (-t, s)``. The triangle on the origin, ``(a, b)`` and the
    returned point contains no interior lattice points.
    """
    v = as_vector((a, b))
    if v == (0, 0):
        raise ZeroVector("minimal_triangle needs a nonzero vector")
    cert = extended_gcd(v.x, v.y)
    w = LatticeVector(-cert.t, cert.s)
    twice_area = cross(v, w)
    assert twice_area == cert.g
    return w, twice_area
