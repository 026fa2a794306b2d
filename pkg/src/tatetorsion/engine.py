"""Torsion subgroup of E(Q) from Tate normal forms.

1. Count the rational 2-torsion points (s).
2. Bound the torsion order by reduction at a few good primes (M).
3. s in {0, 1}: probe the Mazur-allowed orders d | M from the top down; the
   first order with a rational point gives C_d.
4. s = 3: probe d in {8, 6, 4} with d | M/2 the same way, giving C_2 x C_d.

Orders 4..9 are probed with final polynomials, order 3 with the division
quartic, and orders 10 and 12 through their subgroups of order 2, 5 and
4, 6.  A candidate point is accepted only after its order is checked on the
curve itself.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from . import fpbound
from .curve import (
    GeneralCurve,
    Point,
    ShortCurve,
    SingularCurveError,
    add,
    point_order,
    scalar_mul,
    two_torsion_x,
)
from .intpoly import IntPoly, rational_roots
from .models import (
    Scale,
    compose,
    find_scaling,
    inverse,
    to_integral_model,
    to_short_form,
)
from .numtheory import iroot
from .tate import FAMILIES, final_polynomial, tate_curve

log = logging.getLogger(__name__)

MAZUR_CYCLIC = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)
MAZUR_PRODUCT = (2, 4, 6, 8)
CYCLIC_PROBES = (12, 10, 9, 8, 7, 6, 5, 4, 3)
PRODUCT_PROBES = (8, 6, 4)


@dataclass(frozen=True, order=True)
class Structure:
    """The group C_m x C_n with m | n and m in {1, 2}."""

    m: int
    n: int

    @classmethod
    def cyclic(cls, n: int) -> "Structure":
        return cls(1, n)

    @classmethod
    def product(cls, n: int) -> "Structure":
        return cls(2, n)

    @classmethod
    def parse(cls, text: str) -> "Structure":
        parts = text.upper().split("X")
        if len(parts) == 1:
            return cls.cyclic(int(parts[0][1:]))
        return cls(int(parts[0][1:]), int(parts[1][1:]))

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def is_mazur(self) -> bool:
        if self.m == 1:
            return self.n in MAZUR_CYCLIC
        return self.m == 2 and self.n in MAZUR_PRODUCT

    def __str__(self) -> str:
        return f"C{self.n}" if self.m == 1 else f"C{self.m}xC{self.n}"


MAZUR_STRUCTURES = tuple(
    [Structure.cyclic(n) for n in MAZUR_CYCLIC] + [Structure.product(n) for n in MAZUR_PRODUCT]
)


@dataclass
class TorsionResult:
    structure: Structure
    generators: list[Point]
    trace: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.structure.order


def _new_trace() -> dict:
    return {"bound": None, "primes": [], "probes": {}, "quartic_rejected": []}


def point_of_order_3(C: ShortCurve, trace: dict | None = None) -> Point | None:
    """A rational point of order 3, from the integral roots of 3x^4 + 6Ax^2 + 12Bx - A^2."""
    quartic = IntPoly([-C.A * C.A, 12 * C.B, 6 * C.A, 0, 3])
    for x in rational_roots(quartic):
        if x.denominator != 1:
            continue
        y2 = x**3 + C.A * x + C.B
        y, exact = (0, True) if y2 == 0 else (iroot(int(y2), 2) if y2 > 0 else (0, False))
        if not exact:
            # order 3 only over a quadratic field
            if trace is not None:
                trace["quartic_rejected"].append(str(x))
            continue
        P = Point(x, y)
        if point_order(C, P) == 3:
            return P
    return None


def _height(P: Point) -> tuple:
    return (max(abs(P.x.numerator), P.x.denominator), P.x, P.y)


def point_of_order_n(C: ShortCurve, n: int, trace: dict | None = None) -> Point | None:
    """A rational point of order n in 4..9 via the order-n Tate family, or None.

    Every root of the final polynomial is tried; among the points of order n
    found, the one of least height is returned.
    """
    fam = FAMILIES[n]
    roots = rational_roots(final_polynomial(n, C))
    probe = {"roots": [str(r) for r in roots], "hits": []}
    if trace is not None:
        trace["probes"][n] = probe
    best = None
    for beta in roots:
        alpha = fam.alpha_from_beta(beta)
        try:
            G = tate_curve(n, alpha)
        except ValueError:
            continue
        An, Bn, to_short = to_short_form(G)
        u = find_scaling(C.A, C.B, An, Bn)
        if u is None:
            continue
        # (An, Bn) = (A/u^4, B/u^6), so Scale(u) runs from C to the family's short model
        P = compose(to_short, inverse(Scale(u)))(Point(0, 0))
        if point_order(C, P) != n:
            log.warning("alpha=%s for n=%d did not give a point of order %d", alpha, n, n)
            continue
        probe["hits"].append({"alpha": str(alpha), "u": str(u), "point": [str(P.x), str(P.y)]})
        if best is None or _height(P) < _height(best):
            best = P
    return best


def _two_torsion_points(C: ShortCurve) -> list[Point]:
    return [Point(x, 0) for x in two_torsion_x(C)]


def _point_of_order_6(C: ShortCurve, trace: dict | None) -> Point | None:
    R = point_of_order_n(C, 6, trace)
    if R is not None:
        return R
    S = point_of_order_3(C, trace)
    twos = _two_torsion_points(C)
    if S is not None and twos:
        return add(C, S, twos[0])
    return None


def point_of_composite_order(C: ShortCurve, n: int, trace: dict | None = None) -> Point | None:
    """Order 10 from orders 2 and 5; order 12 from orders 4 and 6."""
    if n == 10:
        twos = _two_torsion_points(C)
        if not twos:
            return None
        P = point_of_order_n(C, 5, trace)
        return None if P is None else add(C, P, twos[0])
    if n == 12:
        Q = point_of_order_n(C, 4, trace)
        if Q is None:
            return None
        R = _point_of_order_6(C, trace)
        if R is None:
            return None
        for a, b in itertools.product(range(1, 4), range(1, 6)):
            T = add(C, scalar_mul(C, a, Q), scalar_mul(C, b, R))
            if point_order(C, T) == 12:
                return T
        return None
    raise ValueError(f"composite orders are 10 and 12, not {n}")


def _probe(C: ShortCurve, d: int, trace: dict) -> Point | None:
    if d == 3:
        return point_of_order_3(C, trace)
    if d in (10, 12):
        return point_of_composite_order(C, d, trace)
    return point_of_order_n(C, d, trace)


def torsion_subgroup(C: ShortCurve, k_primes: int = fpbound.DEFAULT_PRIMES) -> TorsionResult:
    """Torsion subgroup of an integral short Weierstrass curve."""
    if not C.is_integral:
        raise ValueError("torsion_subgroup needs an integral model; see torsion_of_short")
    trace = _new_trace()
    twos = _two_torsion_points(C)
    s = len(twos)
    M, reports = fpbound.bound_report(C, k_primes)
    trace["bound"] = M
    trace["primes"] = [r.p for r in reports]
    trace["two_torsion"] = s

    if s <= 1:
        for d in CYCLIC_PROBES:
            # an even order needs a rational point of order 2
            if M % d or (s == 0 and d % 2 == 0):
                continue
            P = _probe(C, d, trace)
            if P is not None:
                return TorsionResult(Structure.cyclic(d), [P], trace)
        if s == 1:
            return TorsionResult(Structure.cyclic(2), twos, trace)
        return TorsionResult(Structure.cyclic(1), [], trace)

    half = M // 2
    for d in PRODUCT_PROBES:
        if M % 2 or half % d:
            continue
        P = _probe(C, d, trace)
        if P is not None:
            inside = scalar_mul(C, d // 2, P)
            T = next(T for T in twos if T != inside)
            return TorsionResult(Structure.product(d), [T, P], trace)
    return TorsionResult(Structure.product(2), twos[:2], trace)


def torsion_of_short(A, B, k_primes: int = fpbound.DEFAULT_PRIMES) -> tuple[TorsionResult, ShortCurve, Scale]:
    """Torsion of Y^2 = X^3 + AX + B with rational A, B.

    Returns the result with generators on the given model, together with the
    integral model used and the scaling from the given model to it.
    """
    model, scale = to_integral_model(A, B)
    result = torsion_subgroup(model, k_primes)
    back = scale.inverse()
    result.generators = [back(P) for P in result.generators]
    result.trace["scaling"] = str(scale.u)
    return result, model, scale


def torsion_of_general(G: GeneralCurve, k_primes: int = fpbound.DEFAULT_PRIMES) -> tuple[TorsionResult, ShortCurve, object]:
    """Torsion of a long Weierstrass model; generators are given on G."""
    A, B, to_short = to_short_form(G)
    if 4 * A**3 + 27 * B**2 == 0:
        raise SingularCurveError("singular curve: discriminant is 0")
    model, scale = to_integral_model(A, B)
    result = torsion_subgroup(model, k_primes)
    m = compose(to_short, scale)
    back = m.inverse()
    result.generators = [back(P) for P in result.generators]
    result.trace["scaling"] = str(scale.u)
    return result, model, m
