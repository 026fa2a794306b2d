"""Torsion subgroups of elliptic curves over Q via Tate normal forms."""

from .curve import (
    INFINITY,
    GeneralCurve,
    NotOnCurveError,
    Point,
    ShortCurve,
    SingularCurveError,
    add,
    discriminant,
    point_order,
    scalar_mul,
    two_torsion_x,
)
from .engine import (
    MAZUR_STRUCTURES,
    Structure,
    TorsionResult,
    torsion_of_general,
    torsion_of_short,
    torsion_subgroup,
)
from .oracle import lutz_nagell_torsion

__version__ = "0.1.0"
