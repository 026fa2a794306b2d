"""Dense univariate polynomials over Z and their rational roots."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .numtheory import divisors, factorint, next_prime


class IntPoly:
    """Immutable polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Sequence[Fraction], lead: int = 1) -> "IntPoly":
        """Primitive-up-to-``lead`` polynomial vanishing at the given rationals."""
        f = cls([lead])
        for r in roots:
            r = Fraction(r)
            f = f * cls([-r.numerator, r.denominator])
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                mag = str(abs(a)) if (abs(a) != 1 or i == 0) else ""
                sep = "*" if mag and mono else ""
                terms.append(("- " if a < 0 else "+ ") + mag + sep + mono)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    # arithmetic

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, v):
        """Evaluate by Horner's rule at an int or Fraction."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * v + a
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> "IntPoly":
        """Divide out the content; keeps the sign of the leading coefficient."""
        g = self.content()
        return self if g in (0, 1) else IntPoly(a // g for a in self.coeffs)

    def exact_div(self, other: "IntPoly | int") -> "IntPoly":
        """Quotient when ``other`` divides ``self`` in Z[x]; raises otherwise."""
        if isinstance(other, int):
            other = IntPoly([other])
        q, r = divmod_exact(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def rational_roots(self) -> list[Fraction]:
        return rational_roots(self)


def seminorm(f: IntPoly) -> int:
    """Sum of the absolute values of the coefficients."""
    return sum(abs(a) for a in f.coeffs)


def divmod_exact(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division in Z[x]; raises when a quotient coefficient is not integral."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg, lg = g.degree, g.lc
    q = [0] * max(len(rem) - dg, 0)
    for i in range(len(rem) - 1 - dg, -1, -1):
        c, r = divmod(rem[i + dg], lg)
        if r:
            raise ArithmeticError("division is not exact over Z")
        q[i] = c
        if c:
            for j, b in enumerate(g.coeffs):
                rem[i + j] -= c * b
    return IntPoly(q), IntPoly(rem)


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    rem = list(f.coeffs)
    dg, lg = g.degree, g.lc
    while len(rem) - 1 >= dg and rem:
        shift = len(rem) - 1 - dg
        c = rem[-1]
        rem = [lg * a for a in rem]
        for j, b in enumerate(g.coeffs):
            rem[shift + j] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPoly(rem)


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd in Z[x] (primitive PRS), positive leading coefficient."""
    if f.is_zero():
        h = g
    elif g.is_zero():
        h = f
    else:
        c = math.gcd(f.content(), g.content())
        a, b = f.primitive(), g.primitive()
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            a, b = b, pseudo_rem(a, b).primitive()
        h = a.primitive() * c if a.degree > 0 else IntPoly([c])
    if h.lc < 0:
        h = -h
    return h


def squarefree_part(f: IntPoly) -> IntPoly:
    g = poly_gcd(f, f.derivative())
    if g.degree <= 0:
        return f.primitive()
    return f.primitive().exact_div(g.primitive())


def affine_scaled(f: IntPoly, r: Fraction, s: Fraction, degree: int | None = None) -> IntPoly:
    """m^degree * f((beta - s)/r) as an integer polynomial in beta.

    ``m`` is the positive denominator arising from r and s and ``degree``
    defaults to deg(f); no content is removed.
    """
    r, s = Fraction(r), Fraction(s)
    if r == 0:
        raise ValueError("affine substitution needs r != 0")
    # (beta - s)/r = (p*beta + q)/m
    p = r.denominator * s.denominator
    q = -r.denominator * s.numerator
    m = s.denominator * r.numerator
    if m < 0:
        p, q, m = -p, -q, -m
    lin = IntPoly([q, p])
    d = f.degree if degree is None else degree
    out = IntPoly()
    power = IntPoly([1])
    for i, a in enumerate(f.coeffs):
        if a:
            out = out + power * (a * m ** (d - i))
        power = power * lin
    return out


def substitute_affine(f: IntPoly, r: Fraction, s: Fraction) -> IntPoly:
    """Primitive polynomial in beta = r*alpha + s proportional to f.

    Roots correspond: alpha0 is a root of f iff r*alpha0 + s is a root of the
    result.  The leading coefficient keeps the sign of f's.
    """
    g = affine_scaled(f, r, s).primitive()
    if (g.lc < 0) != (f.lc < 0):
        g = -g
    return g


# --- root finding ------------------------------------------------------------

def _mod_coeffs(f: IntPoly, p: int) -> list[int]:
    c = [a % p for a in f.coeffs]
    while c and c[-1] == 0:
        c.pop()
    return c


def _gcd_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        # a mod b
        a = list(a)
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return a


def _squarefree_mod_p(f: IntPoly, p: int) -> bool:
    fp = _mod_coeffs(f, p)
    dp = _mod_coeffs(f.derivative(), p)
    return len(_gcd_mod_p(fp, dp, p)) == 1


def _roots_mod_p(f: IntPoly, p: int) -> list[int]:
    c = [a % p for a in f.coeffs]
    roots = []
    for x in range(p):
        acc = 0
        for a in reversed(c):
            acc = (acc * x + a) % p
        if acc == 0:
            roots.append(x)
    return roots


def _hensel_lift(f: IntPoly, df: IntPoly, r: int, p: int, target: int) -> tuple[int, int]:
    """Newton-lift a simple root mod p until the modulus exceeds ``target``."""
    mod = p
    while mod <= target:
        mod = mod * mod
        r = (r - _eval_mod(f, r, mod) * pow(_eval_mod(df, r, mod), -1, mod)) % mod
    return r, mod


def _eval_mod(f: IntPoly, x: int, m: int) -> int:
    acc = 0
    for a in reversed(f.coeffs):
        acc = (acc * x + a) % m
    return acc


def _reconstruct(a: int, m: int, num_bound: int, den_bound: int) -> Fraction | None:
    """Rational n/d with n = a*d mod m, |n| <= num_bound, 0 < d <= den_bound."""
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > den_bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _is_root(f: IntPoly, q: Fraction) -> bool:
    # q^deg * f(p/q) == 0 without fractions
    n, d = q.numerator, q.denominator
    acc = 0
    dpow = 1
    for a in reversed(f.coeffs):
        acc = acc * n + a * dpow
        dpow *= d
    return acc == 0


def _roots_by_lifting(f: IntPoly, max_primes: int = 200) -> list[Fraction] | None:
    lead, trail = abs(f.lc), abs(f[0])
    target = 2 * lead * trail
    df = f.derivative()
    p = 2
    for _ in range(max_primes):
        p = next_prime(p)
        if lead % p == 0 or not _squarefree_mod_p(f, p):
            continue
        found = []
        for r in _roots_mod_p(f, p):
            lifted, mod = _hensel_lift(f, df, r, p, target)
            q = _reconstruct(lifted, mod, trail, lead)
            if q is not None and _is_root(f, q):
                found.append(q)
        return found
    return None


def rational_roots_by_divisors(f: IntPoly, budget: float | None = 30.0) -> list[Fraction]:
    """Rational root theorem: try +-a/b with a | f(0) and b | lc(f).

    ``f`` must have a nonzero constant term.
    """
    nums = divisors(factorint(f[0], budget))
    dens = divisors(factorint(f.lc, budget))
    found = set()
    for b in dens:
        for a in nums:
            for q in (Fraction(a, b), Fraction(-a, b)):
                if q not in found and _is_root(f, q):
                    found.add(q)
    return sorted(found)


def rational_roots(f: IntPoly) -> list[Fraction]:
    """All rational roots of a nonzero polynomial, ascending, without repeats.

    Main path: a prime p with f squarefree mod p, roots mod p lifted p-adically
    and turned into rationals by rational reconstruction.  Non-squarefree
    input is reduced to its squarefree part first; the rational root theorem
    is the last resort.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has every rational as a root")
    roots: list[Fraction] = []
    m = 0
    while f[m] == 0:
        m += 1
    if m:
        roots.append(Fraction(0))
        f = IntPoly(f.coeffs[m:])
    f = f.primitive()
    if f.degree >= 1:
        found = _roots_by_lifting(f)
        if found is None:
            f = squarefree_part(f)
            found = _roots_by_lifting(f)
        if found is None:
            found = rational_roots_by_divisors(f)
        roots.extend(found)
    return sorted(set(roots))
