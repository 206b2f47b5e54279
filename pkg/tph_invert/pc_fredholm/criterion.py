"""
Fredholm conditions on H^p for piecewise continuous matching pairs

T(a)+H(b) is Fredholm on H^p iff neither c^{#,p} nor d̃^{#,q} passes through the
origin. For data that vanishes nowhere this reduces to three argument
conditions per function, each read modulo 1:

- endpoint 1:  arg f⁻(1)/2π  ∉ 1/2 + 1/(2r)
- endpoint −1: arg f⁻(−1)/2π ∉ 1/(2r)
- jump at τ ∈ 𝕋⁺: arg(f⁻(τ)/f⁺(τ))/2π ∉ 1/r

with r = p for c and r = q = p/(p−1) for d̃.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np

from tph_invert.config import get_tolerances
from tph_invert.pc_fredholm.curves import conjugate_exponent
from tph_invert.pc_fredholm.pc_symbol import PCSymbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConditionCheck:
    """One argument condition: ``value`` must avoid ``excluded`` modulo 1"""

    name: str
    value: float
    excluded: float
    violated: bool
    location: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "name": self.name,
            "value": self.value,
            "excluded": self.excluded,
            "violated": self.violated,
            "location": self.location,
        }


@dataclass
class FredholmVerdict:
    """Overall verdict with the violated condition names and every check made"""

    fredholm: bool
    violated: List[str] = field(default_factory=list)
    checks: List[ConditionCheck] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "fredholm": self.fredholm,
            "violated": list(self.violated),
            "checks": [check.to_dict() for check in self.checks],
        }


def distance_mod_one(x: float, y: float) -> float:
    """Distance between x and y on ℝ/ℤ"""
    delta = (x - y) % 1.0
    return min(delta, 1.0 - delta)


def _argument_fraction(z: complex) -> float:
    return float(np.angle(z) / (2.0 * np.pi)) % 1.0


def _function_checks(label: str, f: PCSymbol, r: float) -> List[ConditionCheck]:
    tol = get_tolerances().angle
    checks = []

    def check(name: str, z: complex, excluded: float, location: float) -> None:
        value = _argument_fraction(z)
        violated = distance_mod_one(value, excluded) <= tol
        checks.append(ConditionCheck(f"{label}:{name}", value, excluded % 1.0, violated, location))

    check("endpoint-one", f.left_limit(0.0), 0.5 + 0.5 / r, 0.0)
    check("endpoint-minus-one", f.left_limit(np.pi), 0.5 / r, float(np.pi))
    for tau in f.upper_jumps():
        check("jump", f.left_limit(tau) / f.right_limit(tau), 1.0 / r, tau)
    return checks


def fredholm_conditions(c: PCSymbol, d_tilde: PCSymbol, p: float) -> FredholmVerdict:
    """
    Check the Fredholm conditions for the pair with subordinated data (c, d̃).

    Values within the origin tolerance of zero are reported as the
    '<name>:nonzero' condition; arguments within the angle tolerance of an
    excluded value count as violations.
    """
    if not p > 1:
        raise ValueError(f"p must be greater than 1, got {p}")
    tol = get_tolerances()
    q = conjugate_exponent(p)
    checks: List[ConditionCheck] = []
    violated: List[str] = []
    for label, f, r in (("c", c, p), ("d", d_tilde, q)):
        if f.min_modulus() <= tol.origin:
            violated.append(f"{label}:nonzero")
            continue
        checks.extend(_function_checks(label, f, r))
    violated.extend(check.name for check in checks if check.violated)
    violated = list(dict.fromkeys(violated))
    verdict = FredholmVerdict(fredholm=not violated, violated=violated, checks=checks)
    logger.debug("Fredholm conditions at p=%.4g: violated %s", p, violated)
    return verdict
