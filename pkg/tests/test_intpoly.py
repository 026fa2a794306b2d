from fractions import Fraction

from hypothesis import given, settings, strategies as st

from tatetorsion.curve import ShortCurve
from tatetorsion.intpoly import (
    IntPoly,
    affine_scaled,
    poly_gcd,
    rational_roots,
    rational_roots_by_divisors,
    seminorm,
    squarefree_part,
    substitute_affine,
)
from tatetorsion.tate import final_polynomial

X = IntPoly.x()


def brute_force_roots(f: IntPoly) -> set:
    """Rational roots by trying every p/q with p | a_low, q | a_high."""
    coeffs = list(f.coeffs)
    roots = set()
    if coeffs[0] == 0:
        roots.add(Fraction(0))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    lo, hi = abs(coeffs[0]), abs(coeffs[-1])
    nums = [d for d in range(1, lo + 1) if lo % d == 0]
    dens = [d for d in range(1, hi + 1) if hi % d == 0]
    for p in nums:
        for q in dens:
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**i for i, c in enumerate(coeffs)) == 0:
                    roots.add(cand)
    return roots


def test_seminorm_examples():
    assert seminorm(IntPoly()) == 0
    assert seminorm(IntPoly([2, -3, 1])) == 6


def test_seminorm_of_order_4_polynomial_at_b_only():
    # B^2 parts of the seven coefficients of F_4
    printed = [27, 6 * 135, 3 * 2646, 4 * 5940, 6 * 2646, 24 * 135, 216]
    assert seminorm(final_polynomial(4, ShortCurve(0, 1))) == sum(printed) == 51867


def test_arithmetic_and_evaluation():
    f = (X - 1) * (X - 2)
    assert f == IntPoly([2, -3, 1])
    assert f(3) == 2
    assert f(Fraction(1, 2)) == Fraction(3, 4)
    assert (f + 1).coeffs == (3, -3, 1)
    assert (f - f).is_zero()
    assert (X**3).degree == 3
    assert f.derivative() == IntPoly([-3, 2])
    assert IntPoly([6, 4, 2]).content() == 2
    assert IntPoly([-6, 4, -2]).primitive() == IntPoly([-3, 2, -1])


def test_from_roots():
    f = IntPoly.from_roots([Fraction(1, 2), Fraction(-3)], lead=2)
    # lead times the primitive product (2x - 1)(x + 3)
    assert f == IntPoly([-6, 10, 4])


def test_gcd_and_squarefree_part():
    f = (X - 1) ** 2 * (2 * X + 3)
    g = (X - 1) * (X + 5)
    assert poly_gcd(f, g) == X - 1
    assert squarefree_part(f) == (X - 1) * (2 * X + 3)


def test_substitute_affine_examples():
    assert substitute_affine(X, 1, 0) == X
    # alpha = (beta + 1) / 12
    assert substitute_affine(12 * X - 12, 12, -1) == X - 11


def test_affine_scaled_keeps_common_degree():
    f = affine_scaled(IntPoly([1]), Fraction(2), Fraction(0), degree=2)
    assert f == IntPoly([4])


def test_rational_roots_examples():
    assert rational_roots(X**2 - 1) == [-1, 1]
    assert rational_roots(3 * X**4 + 48 * X) == [0]
    assert rational_roots(IntPoly([5])) == []
    assert rational_roots((4 * X - 3) ** 2 * (X + 7)) == [-7, Fraction(3, 4)]
    assert X.rational_roots() == [0]


def test_order_5_final_polynomial_roots():
    F = final_polynomial(5, ShortCurve(12933, -2285226))
    assert F.degree == 12
    assert rational_roots(F) == [Fraction(-1, 10), 10]


def test_divisor_method_agrees_on_example():
    f = (10 * X + 1) * (X - 10) * (X**2 + 1)
    assert rational_roots_by_divisors(f) == rational_roots(f) == [Fraction(-1, 10), 10]


small_root = st.fractions(min_value=-12, max_value=12, max_denominator=6)


@settings(max_examples=120, deadline=None)
@given(
    st.lists(small_root, min_size=0, max_size=4),
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
)
def test_rational_roots_match_brute_force(roots, cofactor):
    # planted roots times a random integer cofactor
    g = IntPoly(cofactor)
    if g.is_zero():
        g = IntPoly([1])
    f = IntPoly.from_roots(roots) * g
    found = rational_roots(f)
    assert all(f(r) == 0 for r in found)
    assert set(found) == brute_force_roots(f)
    assert set(roots) <= set(found)


@settings(max_examples=80, deadline=None)
@given(
    st.lists(small_root, min_size=1, max_size=4),
    st.integers(-5, 5).filter(bool),
    st.integers(-5, 5),
)
def test_substitution_maps_roots(roots, r, s):
    f = IntPoly.from_roots(roots, lead=3)
    g = substitute_affine(f, r, s)
    assert set(rational_roots(g)) == {r * a + s for a in set(roots)}


polys = st.lists(st.integers(-1000, 1000), min_size=1, max_size=8).map(IntPoly)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_seminorm_subadditive_and_submultiplicative(f, g):
    assert seminorm(f + g) <= seminorm(f) + seminorm(g)
    assert seminorm(f * g) <= seminorm(f) * seminorm(g)
