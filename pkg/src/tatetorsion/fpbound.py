"""Reduction at good primes and the resulting bound on the torsion order.

Reduction modulo an odd prime p not dividing the discriminant embeds the
rational torsion into E(F_p), so |E_T(Q)| divides every |E(F_p)|.  Comparing
the 2-torsion over Q (s points) with the 2-torsion over F_p (t points)
sharpens the bound: an F_p-point of order 2 with no rational counterpart
can be divided out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .curve import ShortCurve, discriminant, two_torsion_x
from .numtheory import next_prime

DEFAULT_PRIMES = 5


@dataclass(frozen=True)
class FpCurve:
    p: int
    a: int
    b: int

    def __post_init__(self):
        p = self.p
        object.__setattr__(self, "a", self.a % p)
        object.__setattr__(self, "b", self.b % p)
        if p <= 2:
            raise ValueError("reduction needs an odd prime")
        if (4 * self.a**3 + 27 * self.b**2) % p == 0:
            raise ValueError(f"p={p} divides the discriminant")

    @classmethod
    def reduce(cls, C: ShortCurve, p: int) -> "FpCurve":
        return cls(p, C.A, C.B)


@lru_cache(maxsize=64)
def _chi_table(p: int) -> tuple[int, ...]:
    table = [-1] * p
    table[0] = 0
    for y in range(1, (p + 1) // 2):
        table[y * y % p] = 1
    return tuple(table)


def count_points(F: FpCurve) -> int:
    """|E(F_p)| including the point at infinity."""
    p, a, b = F.p, F.a, F.b
    chi = _chi_table(p)
    return 1 + sum(1 + chi[(x * x * x + a * x + b) % p] for x in range(p))


def count_two_torsion(F: FpCurve) -> int:
    """Number of points of order 2 over F_p (roots of x^3 + ax + b)."""
    p, a, b = F.p, F.a, F.b
    return sum(1 for x in range(p) if (x * x * x + a * x + b) % p == 0)


def good_primes(C: ShortCurve, k: int) -> list[int]:
    """The k smallest odd primes not dividing the discriminant."""
    delta = discriminant(C)
    primes: list[int] = []
    p = 2
    while len(primes) < k:
        p = next_prime(p)
        if delta % p:
            primes.append(p)
    return primes


def adjusted_count(M: int, s: int, t: int) -> int:
    """Shrink |E(F_p)| by the 2-torsion that cannot come from Q."""
    if s == t:
        return M
    if (s, t) in ((0, 1), (1, 3)):
        return M // 2
    if (s, t) == (0, 3):
        return M // 4
    raise AssertionError(f"impossible 2-torsion counts s={s}, t={t}")


@dataclass(frozen=True)
class PrimeReport:
    p: int
    points: int
    two_torsion: int
    adjusted: int


def bound_report(C: ShortCurve, k: int = DEFAULT_PRIMES) -> tuple[int, list[PrimeReport]]:
    """(M, per-prime details); the torsion order divides M."""
    if not C.is_integral:
        raise ValueError("reduction needs an integral model")
    s = len(two_torsion_x(C))
    reports = []
    for p in good_primes(C, k):
        F = FpCurve.reduce(C, p)
        M, t = count_points(F), count_two_torsion(F)
        reports.append(PrimeReport(p, M, t, adjusted_count(M, s, t)))
    return math.gcd(*(r.adjusted for r in reports)), reports


def torsion_bound(C: ShortCurve, k: int = DEFAULT_PRIMES) -> int:
    return bound_report(C, k)[0]
