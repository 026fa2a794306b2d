import math

import pytest
from hypothesis import given, settings, strategies as st

from tatetorsion.curve import ShortCurve, discriminant, two_torsion_x
from tatetorsion.fpbound import (
    FpCurve,
    adjusted_count,
    bound_report,
    count_points,
    count_two_torsion,
    good_primes,
    torsion_bound,
)
from tatetorsion.oracle import lutz_nagell_torsion
from conftest import random_curves

ODD_PRIMES_TO_50 = [p for p in range(3, 51) if all(p % q for q in range(2, p))]


def brute_count(p, a, b):
    return 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - a * x - b) % p == 0)


def test_count_points_examples():
    assert count_points(FpCurve(3, 1, 0)) == 4
    assert count_points(FpCurve(5, 1, 0)) == 4
    assert count_points(FpCurve(7, 0, 1)) == 12 == brute_count(7, 0, 1)


def test_count_two_torsion_examples():
    assert count_two_torsion(FpCurve(3, 1, 0)) == 1
    assert count_two_torsion(FpCurve(5, 1, 0)) == 3
    assert count_two_torsion(FpCurve(5, 0, 1)) == 1


def test_bad_primes_are_rejected():
    with pytest.raises(ValueError):
        FpCurve(3, 0, 1)
    with pytest.raises(ValueError):
        FpCurve(2, 1, 1)


def test_good_primes_examples():
    assert good_primes(ShortCurve(1, 0), 2) == [3, 5]
    assert good_primes(ShortCurve(0, 1), 3) == [5, 7, 11]
    [p] = good_primes(ShortCurve(12933, -2285226), 1)
    assert p > 2 and discriminant(ShortCurve(12933, -2285226)) % p


def test_bound_for_y2_x3_plus_x():
    M, reports = bound_report(ShortCurve(1, 0), 2)
    assert [(r.p, r.points, r.two_torsion, r.adjusted) for r in reports] == [(3, 4, 1, 4), (5, 4, 3, 2)]
    assert M == 2


def test_bounds_are_multiples_of_known_torsion():
    assert torsion_bound(ShortCurve(12933, -2285226), 3) % 5 == 0
    assert torsion_bound(ShortCurve(-43, 166), 3) % 7 == 0


def test_adjusted_count_rules():
    assert adjusted_count(12, 1, 1) == 12
    assert adjusted_count(12, 0, 1) == 6
    assert adjusted_count(12, 1, 3) == 6
    assert adjusted_count(12, 0, 3) == 3
    with pytest.raises(AssertionError):
        adjusted_count(12, 3, 1)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ODD_PRIMES_TO_50), st.integers(0, 49), st.integers(0, 49))
def test_count_points_matches_brute_force(p, a, b):
    if (4 * a**3 + 27 * b**2) % p == 0:
        return
    assert count_points(FpCurve(p, a, b)) == brute_count(p, a, b)
    assert count_two_torsion(FpCurve(p, a, b)) in (0, 1, 3)


def test_rational_two_torsion_injects():
    for C in random_curves(150, 100, seed=7):
        s = len(two_torsion_x(C))
        for p in good_primes(C, 5):
            t = count_two_torsion(FpCurve.reduce(C, p))
            assert s <= t
            assert (s, t) in {(0, 0), (1, 1), (3, 3), (0, 1), (1, 3), (0, 3)}


@pytest.mark.parametrize("k", [1, 2, 5])
def test_torsion_order_divides_bound(k):
    for C in random_curves(60, 60, seed=k):
        assert torsion_bound(C, k) % lutz_nagell_torsion(C).order == 0


def test_bound_is_gcd_of_adjusted_counts():
    M, reports = bound_report(ShortCurve(-43, 166), 5)
    assert M == math.gcd(*(r.adjusted for r in reports))
    assert len(reports) == 5
