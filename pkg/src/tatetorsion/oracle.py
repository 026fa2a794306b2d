"""Classical torsion computation by the Lutz-Nagell theorem.

A rational torsion point (x, y) on Y^2 = X^3 + AX + B with A, B integral has
x, y integral and y = 0 or y^2 | 4A^3 + 27B^2.  Enumerating square divisors
of the discriminant therefore finds every torsion point.  This needs the
factorization of the discriminant and serves as a cross-check for the
engine, not as the main path.
"""

from __future__ import annotations

from .curve import Point, ShortCurve, discriminant, point_order, scalar_mul
from .engine import Structure, TorsionResult
from .numtheory import FactorizationBudgetExceeded, factorint, iroot

__all__ = [
    "FactorizationBudgetExceeded",
    "integral_cubic_roots",
    "lutz_nagell_points",
    "lutz_nagell_torsion",
    "square_divisors",
]


def square_divisors(delta: int, budget: float | None = 30.0) -> list[int]:
    """All m >= 1 with m^2 | delta, ascending."""
    if delta == 0:
        raise ValueError("discriminant must be nonzero")
    ms = [1]
    for p, e in factorint(delta, budget).items():
        ms = [m * p**i for m in ms for i in range(e // 2 + 1)]
    return sorted(ms)


def _cubic(a: int, c: int, x: int) -> int:
    return x * x * x + a * x + c


def _root_in(a: int, c: int, lo: int, hi: int, increasing: bool) -> int | None:
    # integer root of a monotone piece on [lo, hi]
    while lo <= hi:
        mid = (lo + hi) // 2
        v = _cubic(a, c, mid)
        if v == 0:
            return mid
        if (v < 0) == increasing:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def integral_cubic_roots(a: int, c: int) -> list[int]:
    """Integer roots of x^3 + a x + c, by bisection on monotone pieces."""
    bound = 1 + max(abs(a), abs(c))
    if a >= 0:
        pieces = [(-bound, bound, True)]
    else:
        # turning points at +-sqrt(-a/3); t is the integer part
        t = iroot(-a // 3, 2)[0]
        pieces = [(-bound, -t - 1, True), (-t, t, False), (t + 1, bound, True)]
    roots = []
    for lo, hi, increasing in pieces:
        r = _root_in(a, c, lo, hi, increasing)
        if r is not None:
            roots.append(r)
    return sorted(roots)


def lutz_nagell_points(C: ShortCurve, budget: float | None = 30.0) -> list[Point]:
    """Every affine rational torsion point of an integral curve, sorted by (x, y)."""
    if not C.is_integral:
        raise ValueError("the Lutz-Nagell search needs an integral model")
    points = {Point(r, 0) for r in integral_cubic_roots(C.A, C.B)}
    for m in square_divisors(discriminant(C), budget):
        for x in integral_cubic_roots(C.A, C.B - m * m):
            for y in (m, -m):
                P = Point(x, y)
                if point_order(C, P) is not None:
                    points.add(P)
    return sorted(points, key=lambda P: (P.x, P.y))


def lutz_nagell_torsion(C: ShortCurve, budget: float | None = 30.0) -> TorsionResult:
    """Torsion subgroup from a census of the Lutz-Nagell candidates."""
    points = lutz_nagell_points(C, budget)
    order = len(points) + 1
    orders = {P: point_order(C, P) for P in points}
    twos = [P for P in points if orders[P] == 2]
    top = max(orders.values(), default=1)
    P = next((P for P in points if orders[P] == top), None)
    if len(twos) == 3:
        structure = Structure.product(order // 2)
        inside = None
        if P is not None and top > 2:
            inside = scalar_mul(C, top // 2, P)
        T = next(T for T in twos if T != inside and T != P)
        generators = [T, P]
        expected_top = order // 2
    else:
        structure = Structure.cyclic(order)
        generators = [] if P is None else [P]
        expected_top = order
    if top != expected_top or not structure.is_mazur:
        raise RuntimeError(f"inconsistent torsion census on {C}: {order} points, maximal order {top}")
    return TorsionResult(structure, generators, {"method": "lutz-nagell", "points": len(points) + 1})
