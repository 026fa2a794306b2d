from fractions import Fraction

import pytest

from tatetorsion.curve import Point, ShortCurve, discriminant, point_order
from tatetorsion.numtheory import FactorizationBudgetExceeded, factorint, partial_factor
from tatetorsion.oracle import (
    integral_cubic_roots,
    lutz_nagell_points,
    lutz_nagell_torsion,
    square_divisors,
)
from conftest import random_curves
from vectors import C5_A, C5_B


def test_square_divisors_examples():
    assert square_divisors(4) == [1, 2]
    assert square_divisors(27) == [1, 3]
    assert square_divisors(-4) == [1, 2]
    assert 1080 in square_divisors(discriminant(ShortCurve(C5_A, C5_B)))
    with pytest.raises(ValueError):
        square_divisors(0)


def test_square_divisors_by_brute_force():
    for d in (720, -3600, 2**7 * 3**4 * 5, 1):
        expected = [m for m in range(1, abs(d) + 1) if d % (m * m) == 0]
        assert square_divisors(d) == expected


def test_integral_cubic_roots():
    assert integral_cubic_roots(-1, 0) == [-1, 0, 1]
    assert integral_cubic_roots(0, 8) == [-2]
    assert integral_cubic_roots(-7, 6) == [-3, 1, 2]
    assert integral_cubic_roots(1, 1) == []
    for a in range(-30, 31):
        for c in range(-30, 31):
            found = integral_cubic_roots(a, c)
            assert found == [x for x in range(-40, 41) if x**3 + a * x + c == 0]


def test_oracle_examples():
    assert str(lutz_nagell_torsion(ShortCurve(1, 0)).structure) == "C2"
    r = lutz_nagell_torsion(ShortCurve(-43, 166))
    assert str(r.structure) == "C7"
    assert Point(3, 8) in lutz_nagell_points(ShortCurve(-43, 166))
    assert Point(0, 2) in lutz_nagell_points(ShortCurve(0, 4))
    assert lutz_nagell_torsion(ShortCurve(0, 4)).order == 3
    assert str(lutz_nagell_torsion(ShortCurve(-1, 0)).structure) == "C2xC2"


def test_oracle_needs_integral_model():
    with pytest.raises(ValueError):
        lutz_nagell_points(ShortCurve(Fraction(1, 4), 1))


def test_factorization():
    n = 1000003 * 998244353 * 2**5
    assert factorint(n) == {2: 5, 1000003: 1, 998244353: 1}
    assert factorint(-12) == {2: 2, 3: 1}


def test_factorization_budget_is_reported():
    p, q = 2**89 - 1, 2**107 - 1
    with pytest.raises(FactorizationBudgetExceeded):
        factorint(p * q * (2**127 - 1) * 1000000007 ** 2 * 3, budget=0.0)
    found, rest = partial_factor(3 * 1000000007**2 * (2**61 - 1) ** 2, budget=5.0)
    assert rest == 1 and found[1000000007] == 2


def test_census_matches_order_and_points_are_integral():
    for C in random_curves(200, 200, seed=5):
        delta = discriminant(C)
        pts = lutz_nagell_points(C)
        r = lutz_nagell_torsion(C)
        assert len(pts) + 1 == r.order
        assert r.structure.is_mazur
        for P in pts:
            assert P.x.denominator == 1 and P.y.denominator == 1
            assert P.y == 0 or delta % (P.y * P.y) == 0
            assert point_order(C, P) is not None
