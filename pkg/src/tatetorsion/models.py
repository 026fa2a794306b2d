"""Changes of variables between Weierstrass models.

The short model of a long Weierstrass equation is taken to be
Y^2 = X^3 - 27 c4 X - 54 c6, reached by x' = 36x + 3 b2,
y' = 108 (2y + a1 x + a3).  Short models are related by the scalings
(x, y) -> (x/u^2, y/u^3), which send (A, B) to (A/u^4, B/u^6).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .curve import GeneralCurve, Point, ShortCurve, SingularCurveError
from .numtheory import partial_factor, rational_root, valuation


@dataclass(frozen=True)
class LongToShort:
    a1: Fraction
    a3: Fraction
    b2: Fraction
    inverted: bool = False

    def inverse(self) -> "LongToShort":
        return LongToShort(self.a1, self.a3, self.b2, not self.inverted)

    def __call__(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        a1, a3, b2 = self.a1, self.a3, self.b2
        if not self.inverted:
            x = 36 * P.x + 3 * b2
            return Point(x, 108 * (2 * P.y + a1 * P.x + a3))
        x = (P.x - 3 * b2) / 36
        return Point(x, (P.y / 108 - a1 * x - a3) / 2)


@dataclass(frozen=True)
class Scale:
    """(x, y) on (A, B) -> (x/u^2, y/u^3) on (A/u^4, B/u^6)."""

    u: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        if self.u == 0:
            raise ValueError("scaling factor must be nonzero")

    def inverse(self) -> "Scale":
        return Scale(1 / self.u)

    def __call__(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        u = self.u
        return Point(P.x / u**2, P.y / u**3)


@dataclass(frozen=True)
class Compose:
    """Apply ``maps`` left to right."""

    maps: tuple

    def inverse(self) -> "Compose":
        return Compose(tuple(m.inverse() for m in reversed(self.maps)))

    def __call__(self, P: Point) -> Point:
        for m in self.maps:
            P = m(P)
        return P


ModelMap = Union[LongToShort, Scale, Compose]


def compose(*maps: ModelMap) -> Compose:
    flat: list = []
    for m in maps:
        flat.extend(m.maps if isinstance(m, Compose) else (m,))
    return Compose(tuple(flat))


def inverse(m: ModelMap) -> ModelMap:
    return m.inverse()


def apply_map(m: ModelMap, P: Point) -> Point:
    return m(P)


def short_coefficients(a1, a2, a3, a4, a6):
    """(A, B, b2) of the short model.

    Works for any ring elements supporting +, - and * with ints, so the same
    code serves concrete rationals and symbolic families.
    """
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
    return -27 * c4, -54 * c6, b2


def to_short_form(G: GeneralCurve) -> tuple[Fraction, Fraction, LongToShort]:
    A, B, b2 = short_coefficients(*(Fraction(a) for a in G.ainvs))
    return A, B, LongToShort(Fraction(G.a1), Fraction(G.a3), b2)


def _min_scaling_exponent(vA: float, vB: float) -> int:
    # largest e with vA - 4e >= 0 and vB - 6e >= 0
    return min(math.floor(vA / 4) if vA != math.inf else math.inf,
               math.floor(vB / 6) if vB != math.inf else math.inf)


def to_integral_model(A, B, budget: float = 5.0) -> tuple[ShortCurve, Scale]:
    """Integral model (A/u^4, B/u^6) with u as large as possible.

    Primes are found by factoring the coefficients' denominators and the gcd
    of their numerators; factors that resist ``budget`` seconds of factoring
    are left alone, so the model is then integral but possibly not minimal.
    """
    A, B = Fraction(A), Fraction(B)
    if 4 * A**3 + 27 * B**2 == 0:
        raise SingularCurveError("singular curve: discriminant is 0")
    num_gcd = math.gcd(A.numerator, B.numerator)
    primes: set[int] = set()
    for n in (A.denominator, B.denominator, num_gcd):
        if n > 1:
            primes.update(partial_factor(n, budget)[0])
    u = Fraction(1)
    for p in primes:
        vA = math.inf if A == 0 else valuation(A.numerator, p) - valuation(A.denominator, p)
        vB = math.inf if B == 0 else valuation(B.numerator, p) - valuation(B.denominator, p)
        e = _min_scaling_exponent(vA, vB)
        u *= Fraction(p) ** e
    scale = Scale(u)
    return ShortCurve(A / u**4, B / u**6), scale


def find_scaling(A, B, C, D) -> Fraction | None:
    """Positive rational u with A = C u^4 and B = D u^6, if one exists."""
    A, B, C, D = (Fraction(v) for v in (A, B, C, D))
    if (A == 0) != (C == 0) or (B == 0) != (D == 0):
        return None
    if A == 0:
        return rational_root(B / D, 6)
    if B == 0:
        return rational_root(A / C, 4)
    u4, u6 = A / C, B / D
    w = u6 / u4
    if w * w != u4 or w**3 != u6:
        return None
    return rational_root(w, 2)


class RatioMarker(enum.Enum):
    """A^3/B^2 is undefined because B = 0."""

    B_ZERO = "B=0"


def invariant_ratio(C: ShortCurve) -> Fraction | RatioMarker:
    if C.B == 0:
        return RatioMarker.B_ZERO
    return Fraction(C.A) ** 3 / Fraction(C.B) ** 2
