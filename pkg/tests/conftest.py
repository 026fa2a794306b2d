import random
import sys
from fractions import Fraction

import pytest

from tatetorsion.curve import ShortCurve, SingularCurveError


def random_curves(count, bound, seed):
    """Nonsingular integral short curves with |A|, |B| <= bound."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        A, B = rng.randint(-bound, bound), rng.randint(-bound, bound)
        try:
            out.append(ShortCurve(A, B))
        except SingularCurveError:
            pass
    return out


def small_fractions(num=6, den=4):
    return sorted({Fraction(p, q) for p in range(-num, num + 1) for q in range(1, den + 1)})


@pytest.fixture
def c5_curve():
    return ShortCurve(12933, -2285226)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS.values():
        terminalreporter.write_line(line)
