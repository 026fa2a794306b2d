"""Elliptic curves over Q in Weierstrass form and the chord-tangent group law.

Curves are immutable values and points carry no reference to a curve; the
curve is always passed explicitly.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

# Mazur: the order of a rational torsion point is at most 12.
MAX_TORSION_ORDER = 12


class SingularCurveError(ValueError):
    """The Weierstrass equation has zero discriminant."""


class NotOnCurveError(ValueError):
    pass


def _as_exact(v: Rational) -> Rational:
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


@dataclass(frozen=True)
class Point:
    """An affine rational point, or the point at infinity when x is None."""

    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates must be given, or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "Point":
        if self.is_infinity:
            return self
        return Point(self.x, -self.y)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Point(O)"
        return f"Point({self.x}, {self.y})"


INFINITY = Point()


@dataclass(frozen=True)
class ShortCurve:
    """Y^2 = X^3 + A X + B.

    The algorithms want integral A and B; rational coefficients are accepted
    so that intermediate models can use the same group law.
    """

    A: Rational
    B: Rational

    def __post_init__(self):
        object.__setattr__(self, "A", _as_exact(self.A))
        object.__setattr__(self, "B", _as_exact(self.B))
        if discriminant(self) == 0:
            raise SingularCurveError(f"singular curve: discriminant of Y^2 = X^3 + ({self.A})X + ({self.B}) is 0")

    @property
    def is_integral(self) -> bool:
        return isinstance(self.A, int) and isinstance(self.B, int)

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        return P.y * P.y == P.x**3 + self.A * P.x + self.B

    def __str__(self) -> str:
        return f"Y^2 = X^3 + ({self.A})X + ({self.B})"


@dataclass(frozen=True)
class GeneralCurve:
    """Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6."""

    a1: Rational = 0
    a2: Rational = 0
    a3: Rational = 0
    a4: Rational = 0
    a6: Rational = 0

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, _as_exact(getattr(self, name)))

    @property
    def ainvs(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def contains(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        return lhs == x**3 + self.a2 * x * x + self.a4 * x + self.a6


def discriminant(C: ShortCurve) -> Rational:
    """4A^3 + 27B^2 (the sign and scale convention used throughout)."""
    return 4 * C.A**3 + 27 * C.B**2


def _check(C: ShortCurve, P: Point) -> None:
    if not C.contains(P):
        raise NotOnCurveError(f"{P!r} is not on {C}")


def add(C: ShortCurve, P: Point, Q: Point) -> Point:
    _check(C, P)
    _check(C, Q)
    return _add(C, P, Q)


def _add(C: ShortCurve, P: Point, Q: Point) -> Point:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return INFINITY
        slope = (3 * P.x * P.x + C.A) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - P.x - Q.x
    return Point(x3, slope * (P.x - x3) - P.y)


def neg(C: ShortCurve, P: Point) -> Point:
    _check(C, P)
    return -P


def scalar_mul(C: ShortCurve, k: int, P: Point) -> Point:
    """k*P by double-and-add; negative k multiplies -P."""
    _check(C, P)
    if k < 0:
        k, P = -k, -P
    result = INFINITY
    addend = P
    while k:
        if k & 1:
            result = _add(C, result, addend)
        addend = _add(C, addend, addend)
        k >>= 1
    return result


def point_order(C: ShortCurve, P: Point) -> int | None:
    """Order of P, or None when P has infinite order.

    Only multiples up to 12 are tried: no rational point of finite order has
    larger order.
    """
    _check(C, P)
    Q = P
    for n in range(1, MAX_TORSION_ORDER + 1):
        if Q.is_infinity:
            return n
        Q = _add(C, Q, P)
    return None


def two_torsion_x(C: ShortCurve) -> list[Fraction]:
    """Rational roots of X^3 + AX + B, ascending.

    Each root r gives the point (r, 0) of order 2.
    """
    from .intpoly import IntPoly

    A, B = Fraction(C.A), Fraction(C.B)
    # X = x/d^2 keeps the cubic monic with integral coefficients.
    d = math.lcm(A.denominator, B.denominator)
    cubic = IntPoly([int(B * d**6), int(A * d**4), 0, 1])
    return [Fraction(r, d * d) for r in cubic.rational_roots()]
