"""Fredholm criterion and index for piecewise continuous matching pairs"""

from tph_invert.pc_fredholm.criterion import (
    ConditionCheck,
    FredholmVerdict,
    distance_mod_one,
    fredholm_conditions,
)
from tph_invert.pc_fredholm.curves import (
    ClosedCurve,
    arc_points,
    be_index,
    build_curve,
    conjugate_exponent,
    curve_windings,
)
from tph_invert.pc_fredholm.pc_symbol import PCSymbol

__all__ = [
    "PCSymbol",
    "ClosedCurve",
    "arc_points",
    "build_curve",
    "be_index",
    "curve_windings",
    "conjugate_exponent",
    "ConditionCheck",
    "FredholmVerdict",
    "fredholm_conditions",
    "distance_mod_one",
]
