"""Integer helpers: exact roots, primes, and factorization with a time budget."""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from functools import lru_cache

import gmpy2

TRIAL_LIMIT = 10**6


class FactorizationBudgetExceeded(RuntimeError):
    """Raised when a factorization does not finish within its time budget."""

    def __init__(self, n: int, budget: float):
        super().__init__(f"could not factor {n} within {budget:g}s")
        self.n = n
        self.budget = budget


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Integer k-th root of a nonnegative integer and whether it is exact."""
    if n < 0:
        raise ValueError("iroot of a negative number")
    r, exact = gmpy2.iroot(n, k)
    return int(r), bool(exact)


def rational_root(q: Fraction, k: int) -> Fraction | None:
    """Exact rational k-th root of ``q`` or None.

    For even ``k`` the nonnegative root is returned.
    """
    q = Fraction(q)
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign = -1
    rn, ok_n = iroot(abs(q.numerator), k)
    if not ok_n:
        return None
    rd, ok_d = iroot(q.denominator, k)
    if not ok_d:
        return None
    return Fraction(sign * rn, rd)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    return int(gmpy2.next_prime(n))


@lru_cache(maxsize=None)
def small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, v in enumerate(sieve) if v)


def _brent(n: int, deadline: float, rng: random.Random) -> int:
    # Pollard-Brent; returns a nontrivial factor of composite odd n.
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                if time.monotonic() > deadline:
                    raise TimeoutError
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n: int, budget: float | None = 30.0, seed: int = 0) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{prime: exponent}``.

    Trial division up to ``TRIAL_LIMIT`` and Pollard-Brent afterwards. Raises
    FactorizationBudgetExceeded when ``budget`` seconds elapse.
    """
    factors, rest = partial_factor(n, budget, seed)
    if rest != 1:
        raise FactorizationBudgetExceeded(abs(n), budget or 0.0)
    return factors


def partial_factor(n: int, budget: float | None = 30.0, seed: int = 0) -> tuple[dict[int, int], int]:
    """Factor ``|n|`` as far as the budget allows.

    Returns ``(factors, cofactor)`` where the cofactor is 1 on success and an
    unfactored composite otherwise.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors: dict[int, int] = {}

    def push(p: int, e: int = 1) -> None:
        factors[p] = factors.get(p, 0) + e

    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            push(p, e)
    if n == 1:
        return factors, 1
    if n < TRIAL_LIMIT * TRIAL_LIMIT:
        push(n)
        return factors, 1

    deadline = math.inf if budget is None else time.monotonic() + budget
    rng = random.Random(seed)
    stack = [n]
    leftover = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            push(m)
            continue
        r, exact = iroot(m, 2)
        if exact:
            stack += [r, r]
            continue
        try:
            d = _brent(m, deadline, rng)
        except TimeoutError:
            leftover *= m
            continue
        stack += [d, m // d]
    return factors, leftover


def divisors(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
