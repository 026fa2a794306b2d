"""Tate normal form families and their final polynomials.

Every curve with a rational point of order n in {4,...,10, 12} is
isomorphic to a member of

    Y^2 + (1 - c) XY - b Y = X^3 - b X^2

for some parameter alpha, with (0, 0) of order n.  For n <= 9 the short
coefficients A_n(alpha), B_n(alpha) are derived symbolically, and a curve
(A, B) has a point of order n only if alpha solves

    B_n(alpha)^2 A^3 - A_n(alpha)^3 B^2 = 0.

The final polynomial is that equation, cleared of denominators and rewritten
in a reparametrization beta = r*alpha + s that keeps its coefficients small.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

from .curve import GeneralCurve, ShortCurve, SingularCurveError
from .intpoly import IntPoly, affine_scaled, poly_gcd, seminorm
from .models import short_coefficients

FAMILY_ORDERS = (4, 5, 6, 7, 8, 9, 10, 12)
FINAL_ORDERS = (4, 5, 6, 7, 8, 9)


@dataclass(frozen=True)
class TateFamily:
    n: int
    # beta = r * alpha + s
    r: Fraction = Fraction(1)
    s: Fraction = Fraction(0)
    degree_expected: int | None = None
    seminorm_constant: int | None = None

    def beta_from_alpha(self, alpha: Fraction) -> Fraction:
        return self.r * alpha + self.s

    def alpha_from_beta(self, beta: Fraction) -> Fraction:
        return (beta - self.s) / self.r


FAMILIES = {
    4: TateFamily(4, Fraction(12), Fraction(1), 6, 56667),
    5: TateFamily(5, degree_expected=12, seminorm_constant=898312),
    6: TateFamily(6, Fraction(3), Fraction(1), 12, 2220071),
    7: TateFamily(7, degree_expected=18, seminorm_constant=110725743),
    8: TateFamily(8, Fraction(2), Fraction(-1), 24, 46702469380),
    9: TateFamily(9, degree_expected=36, seminorm_constant=11353024920),
    10: TateFamily(10),
    12: TateFamily(12),
}


def tate_bc(n: int, a):
    """(b, c) of the order-n family at parameter ``a``.

    ``a`` may be a Fraction or a symbolic rational function; only field
    operations are used.
    """
    if n == 4:
        return a, 0 * a
    if n == 5:
        return a, a
    if n == 6:
        return a + a * a, a
    if n == 7:
        return a**3 - a**2, a * a - a
    if n == 8:
        b = (2 * a - 1) * (a - 1)
        return b, b / a
    if n == 9:
        c = a * a * (a - 1)
        return c * (a * (a - 1) + 1), c
    if n == 10:
        d = a - (a - 1) ** 2
        c = (2 * a**3 - 3 * a**2 + a) / d
        return c * a * a / d, c
    if n == 12:
        c = (3 * a * a - 3 * a + 1) * (a - 2 * a * a) / (a - 1) ** 3
        return c * (2 * a - 2 * a * a - 1) / (a - 1), c
    raise ValueError(f"no Tate family for n={n}; expected one of {FAMILY_ORDERS}")


def tate_curve(n: int, alpha) -> GeneralCurve:
    """Member of the order-n family; raises ValueError at poles and singular members."""
    alpha = Fraction(alpha)
    try:
        b, c = tate_bc(n, alpha)
    except ZeroDivisionError:
        raise ValueError(f"alpha={alpha} is a pole of the n={n} family") from None
    G = GeneralCurve(1 - c, -b, -b, 0, 0)
    A, B, _ = short_coefficients(*(Fraction(v) for v in G.ainvs))
    if 4 * A**3 + 27 * B**2 == 0:
        raise SingularCurveError(f"alpha={alpha} gives a singular member of the n={n} family")
    return G


class RatFunc:
    """Element of Q(alpha) as a reduced quotient of integer polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly = IntPoly([1])):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.degree > 0 and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        if num.is_zero():
            den = IntPoly([1])
        k = math.gcd(num.content(), den.content())
        if den.lc < 0:
            k = -k
        if k != 1:
            num, den = num.exact_div(k), den.exact_div(k)
        self.num, self.den = num, den

    @staticmethod
    def _lift(v) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, int):
            return RatFunc(IntPoly([v]))
        if isinstance(v, Fraction):
            return RatFunc(IntPoly([v.numerator]), IntPoly([v.denominator]))
        raise TypeError(type(v))

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        return RatFunc(self.num**k, self.den**k)

    def __eq__(self, other):
        o = self._lift(other)
        return self.num == o.num and self.den == o.den

    def __call__(self, v):
        return Fraction(self.num(Fraction(v))) / self.den(Fraction(v))

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"


def _check_final_order(n: int) -> None:
    if n not in FINAL_ORDERS:
        raise ValueError(f"final polynomials exist for n in {FINAL_ORDERS}, not n={n}")


@lru_cache(maxsize=None)
def family_short_coeffs(n: int) -> tuple[RatFunc, RatFunc]:
    """(A_n, B_n) as rational functions of alpha, in lowest terms."""
    _check_final_order(n)
    b, c = tate_bc(n, RatFunc(IntPoly.x()))
    A, B, _ = short_coefficients(1 - c, -b, -b, 0, 0)
    return A, B


@lru_cache(maxsize=None)
def raw_final_pair(n: int) -> tuple[IntPoly, IntPoly]:
    """Polynomials (P, Q) in alpha with B_n^2 A^3 - A_n^3 B^2 = (P A^3 + Q B^2) / L.

    L is the least common denominator; no content is removed.
    """
    An, Bn = family_short_coeffs(n)
    dB2, dA3 = Bn.den**2, An.den**3
    L = (dB2 * dA3).exact_div(poly_gcd(dB2, dA3))
    P = Bn.num**2 * L.exact_div(dB2)
    Q = -(An.num**3) * L.exact_div(dA3)
    return P, Q


@lru_cache(maxsize=None)
def final_pair(n: int) -> tuple[IntPoly, IntPoly]:
    """(F_A, F_B) in beta with F_n = F_A * A^3 + F_B * B^2.

    The pair is jointly primitive: no integer divides every coefficient of
    both polynomials.
    """
    fam = FAMILIES[n]
    P, Q = raw_final_pair(n)
    d = max(P.degree, Q.degree)
    FP = affine_scaled(P, fam.r, fam.s, d)
    FQ = affine_scaled(Q, fam.r, fam.s, d)
    g = math.gcd(FP.content(), FQ.content())
    return FP.exact_div(g), FQ.exact_div(g)


def _curve(C) -> ShortCurve:
    if not isinstance(C, ShortCurve):
        C = ShortCurve(*C)
    if not C.is_integral:
        raise ValueError("final polynomials need an integral model")
    return C


def final_polynomial(n: int, C: ShortCurve) -> IntPoly:
    """F_n for the curve C, as a polynomial in the minimal parameter beta."""
    _check_final_order(n)
    C = _curve(C)
    FA, FB = final_pair(n)
    return FA * C.A**3 + FB * C.B**2


def pre_substitution_polynomial(n: int, C: ShortCurve) -> IntPoly:
    """The final equation in the original parameter alpha, before reparametrizing."""
    _check_final_order(n)
    C = _curve(C)
    P, Q = raw_final_pair(n)
    return P * C.A**3 + Q * C.B**2


def bound_scale(C: ShortCurve) -> int:
    """N = max(|A|^3, B^2)."""
    return max(abs(C.A) ** 3, C.B**2)


def seminorm_bound_check(n: int, C: ShortCurve) -> bool:
    _check_final_order(n)
    C = _curve(C)
    return seminorm(final_polynomial(n, C)) <= FAMILIES[n].seminorm_constant * bound_scale(C)


def format_final_polynomial(n: int, C: ShortCurve) -> str:
    """One line per coefficient, highest degree first, in decimal."""
    F = final_polynomial(n, C)
    lines = [f"F_{n}: degree {F.degree}, seminorm {seminorm(F)}"]
    for i in range(F.degree, -1, -1):
        lines.append(f"  beta^{i}: {F[i]}")
    return "\n".join(lines)
