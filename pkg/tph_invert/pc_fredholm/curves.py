"""
Closed curves of piecewise continuous symbols and their winding numbers

The curve f^{#,p} traces f over the upper half circle from t = 1 to t = −1,
fills every jump inside 𝕋⁺ with the arc 𝒜(f⁻, f⁺; 1/p) and joins the end
values to 1 with 𝒜(1, f⁺(1); 1/2 + 1/(2p)) and 𝒜(f⁻(−1), 1; 1/(2p)). The
arc 𝒜(z₁, z₂; θ) is the set of z with arg((z − z₁)/(z − z₂)) ≡ 2πθ; it is
the segment [z₁, z₂] for θ = 1/2 and empty for z₁ = z₂.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

from tph_invert.config import get_tolerances
from tph_invert.core.encoding import array_to_json
from tph_invert.errors import CurveThroughOrigin
from tph_invert.pc_fredholm.pc_symbol import PCSymbol

logger = logging.getLogger(__name__)

# Samples per arc before refinement
DEFAULT_ARC_SAMPLES = 256
# Arcs are refined until every argument increment is below this
MAX_ARC_INCREMENT = np.pi / 4
_MAX_REFINEMENTS = 40


def _arc_at(z1: complex, z2: complex, theta: float, s: np.ndarray) -> np.ndarray:
    """Möbius parametrization: s ∈ (0, 1) ↦ (z₁ − w·z₂)/(1 − w), w = s/(1−s)·e^{2πiθ}"""
    w = (s / (1.0 - s)) * np.exp(2j * np.pi * theta)
    return (z1 - w * z2) / (1.0 - w)


def arc_points(
    z1: complex, z2: complex, theta: float, samples: int = DEFAULT_ARC_SAMPLES
) -> np.ndarray:
    """
    Interior points of 𝒜(z₁, z₂; θ), ordered from z₁ to z₂.

    Args:
        z1: Start point
        z2: End point
        theta: Arc parameter in (0, 1)
        samples: Number of points, at least 2

    Returns:
        Points z with arg((z − z₁)/(z − z₂)) ≡ 2πθ; empty when z₁ = z₂
    """
    if samples < 2:
        raise ValueError(f"Need at least 2 samples, got {samples}")
    if not 0.0 < theta < 1.0:
        raise ValueError(f"Arc parameter must lie in (0, 1), got {theta}")
    if abs(z1 - z2) <= get_tolerances().angle:
        return np.array([], dtype=complex)
    s = np.arange(1, samples + 1) / (samples + 1)
    return _arc_at(complex(z1), complex(z2), theta, s)


def _refined_arc(z1: complex, z2: complex, theta: float, samples: int) -> np.ndarray:
    """arc_points with bisection wherever the argument jumps by more than π/4"""
    tol = get_tolerances()
    if abs(z1 - z2) <= tol.angle:
        return np.array([], dtype=complex)
    s = np.concatenate([[0.0], np.arange(1, samples + 1) / (samples + 1), [1.0]])
    for _ in range(_MAX_REFINEMENTS):
        z = np.concatenate([[z1], _arc_at(z1, z2, theta, s[1:-1]), [z2]])
        if np.min(np.abs(z)) <= tol.origin:
            raise CurveThroughOrigin(f"Arc from {z1} to {z2} (θ={theta}) meets the origin")
        increments = np.abs(np.angle(z[1:] / z[:-1]))
        coarse = np.nonzero(increments > MAX_ARC_INCREMENT)[0]
        if coarse.size == 0:
            return z[1:-1]
        midpoints = 0.5 * (s[coarse] + s[coarse + 1])
        s = np.sort(np.concatenate([s, midpoints]))
    raise CurveThroughOrigin(f"Arc from {z1} to {z2} (θ={theta}) passes too close to the origin")


@dataclass(eq=False)
class ClosedCurve:
    """Ordered points of a closed curve with the kind ('smooth' or 'arc') of each"""

    points: np.ndarray
    kinds: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.points = np.asarray(self.points, dtype=complex)
        if len(self.kinds) != self.points.size:
            raise ValueError(f"{self.points.size} points need as many kinds, got {len(self.kinds)}")

    def increments(self) -> np.ndarray:
        """Argument increments between consecutive points, including the closing step"""
        tol = get_tolerances()
        if self.points.size == 0:
            return np.array([], dtype=float)
        if np.min(np.abs(self.points)) <= tol.origin:
            raise CurveThroughOrigin("Curve passes through the origin")
        closed = np.concatenate([self.points, self.points[:1]])
        return np.angle(closed[1:] / closed[:-1])

    def cumulative_arg(self) -> np.ndarray:
        """Argument accumulated up to each point, starting at 0"""
        steps = self.increments()
        return np.concatenate([[0.0], np.cumsum(steps[:-1])]) if steps.size else steps

    def winding(self) -> int:
        """
        Winding number about the origin.

        Raises:
            CurveThroughOrigin: a point lies on the origin, or consecutive points are
                too far apart to resolve the argument
        """
        steps = self.increments()
        if steps.size == 0:
            return 0
        largest = float(np.max(np.abs(steps)))
        if largest >= np.pi - get_tolerances().angle:
            raise CurveThroughOrigin(
                f"Argument increment {largest:.3f} is not resolved; refine the sampling"
            )
        return int(round(float(np.sum(steps)) / (2.0 * np.pi)))

    def rows(self) -> List[Tuple[float, float, str, float]]:
        """(re, im, kind, cumulative argument) per point"""
        cumulative = self.cumulative_arg()
        return [
            (float(z.real), float(z.imag), kind, float(arg))
            for z, kind, arg in zip(self.points, self.kinds, cumulative)
        ]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {"points": array_to_json(self.points), "kinds": list(self.kinds)}


def build_curve(
    f: PCSymbol, p: float, arc_samples: int = DEFAULT_ARC_SAMPLES
) -> ClosedCurve:
    """The closed curve f^{#,p}"""
    if not p > 1:
        raise ValueError(f"p must be greater than 1, got {p}")
    tol = get_tolerances()
    points: List[np.ndarray] = []
    kinds: List[str] = []

    def extend(values: np.ndarray, kind: str) -> None:
        points.append(np.asarray(values, dtype=complex))
        kinds.extend([kind] * len(values))

    start = f.right_limit(0.0)
    if abs(start - 1.0) > tol.angle:
        extend(np.array([1.0 + 0j]), "arc")
        extend(_refined_arc(1.0 + 0j, start, 0.5 + 0.5 / p, arc_samples), "arc")

    previous_end = None
    for k in f.upper_segments():
        segment = f.segments[k]
        if previous_end is not None:
            extend(_refined_arc(previous_end, complex(segment[0]), 1.0 / p, arc_samples), "arc")
        extend(segment, "smooth")
        previous_end = complex(segment[-1])

    end = f.left_limit(np.pi)
    if abs(end - 1.0) > tol.angle:
        extend(_refined_arc(end, 1.0 + 0j, 0.5 / p, arc_samples), "arc")
        extend(np.array([1.0 + 0j]), "arc")

    curve = ClosedCurve(np.concatenate(points), kinds)
    logger.debug("Curve with %d points for p=%.4g", curve.points.size, p)
    return curve


def conjugate_exponent(p: float) -> float:
    """q with 1/p + 1/q = 1"""
    return p / (p - 1.0)


def curve_windings(
    c: PCSymbol, d_tilde: PCSymbol, p: float, arc_samples: int = DEFAULT_ARC_SAMPLES
) -> Tuple[int, int]:
    """(wind c^{#,p}, wind d̃^{#,q})"""
    q = conjugate_exponent(p)
    return (
        build_curve(c, p, arc_samples).winding(),
        build_curve(d_tilde, q, arc_samples).winding(),
    )


def be_index(
    c: PCSymbol, d_tilde: PCSymbol, p: float, arc_samples: int = DEFAULT_ARC_SAMPLES
) -> int:
    """
    Fredholm index wind(d̃^{#,q}) − wind(c^{#,p}) of T(a)+H(b) on H^p.

    Raises:
        CurveThroughOrigin: one of the curves meets the origin
    """
    wind_c, wind_d = curve_windings(c, d_tilde, p, arc_samples)
    logger.debug("Windings: c=%d, d_tilde=%d", wind_c, wind_d)
    return wind_d - wind_c
