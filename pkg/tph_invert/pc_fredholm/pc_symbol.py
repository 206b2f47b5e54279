"""
Piecewise continuous symbols

A PCSymbol stores a function on 𝕋 as a list of breakpoint angles in [0, 2π)
and one sampled segment per gap. Segment k covers [θ_k, θ_{k+1}] (the last one
wraps to 2π); its first sample is the right limit f⁺ at θ_k and its last sample
the left limit f⁻ at θ_{k+1}. The angles 0 and π are always breakpoints, so the
upper half circle 𝕋⁺ is a union of whole segments.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Mapping, Sequence

import numpy as np

from tph_invert.config import get_tolerances
from tph_invert.core.encoding import array_from_json, array_to_json, complex_from_json
from tph_invert.core.symbol import RationalSymbol, make_symbol
from tph_invert.errors import InvalidSymbolSpec

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi

# Samples per smooth segment
DEFAULT_SAMPLES = 2048


def _normalized_breakpoints(angles: Sequence[float]) -> List[float]:
    """Sorted angles in [0, 2π) with 0 and π added, near-duplicates merged"""
    tol = get_tolerances().angle
    merged: List[float] = []
    for angle in sorted([float(a) % TWO_PI for a in angles] + [0.0, np.pi]):
        if not merged or angle - merged[-1] > tol:
            merged.append(angle)
    if len(merged) > 1 and TWO_PI - merged[-1] <= tol:
        merged.pop()
    return merged


@dataclass(eq=False)
class PCSymbol:
    """Breakpoint angles and one sample array per segment"""

    breakpoints: List[float]
    segments: List[np.ndarray]

    def __post_init__(self) -> None:
        if len(self.breakpoints) != len(self.segments):
            raise InvalidSymbolSpec(
                f"{len(self.breakpoints)} breakpoints need as many segments, "
                f"got {len(self.segments)}"
            )
        self.segments = [np.asarray(s, dtype=complex) for s in self.segments]
        for segment in self.segments:
            if segment.size < 2:
                raise InvalidSymbolSpec("Every segment needs at least its two end values")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_function(
        cls,
        f: Callable[[np.ndarray], np.ndarray],
        breakpoints: Sequence[float] = (),
        samples: int = DEFAULT_SAMPLES,
    ) -> "PCSymbol":
        """Sample a callable of t ∈ 𝕋 between the breakpoints"""
        angles = _normalized_breakpoints(breakpoints)
        ends = angles[1:] + [TWO_PI]
        segments = []
        for start, stop in zip(angles, ends):
            theta = np.linspace(start, stop, samples)
            segments.append(np.asarray(f(np.exp(1j * theta)), dtype=complex))
        return cls(angles, segments)

    @classmethod
    def from_rational(cls, g: RationalSymbol, samples: int = DEFAULT_SAMPLES) -> "PCSymbol":
        """A rational symbol as continuous PC data"""
        return cls.from_function(g, (), samples)

    @classmethod
    def piecewise_constant(
        cls, breakpoints: Sequence[float], values: Sequence[Any]
    ) -> "PCSymbol":
        """
        Constant values[k] on [breakpoints[k], breakpoints[k+1]).

        Example:
            >>> PCSymbol.piecewise_constant([0.0, np.pi], [1j, -1j])
        """
        if len(breakpoints) != len(values) or not values:
            raise InvalidSymbolSpec("piecewise_constant needs one value per breakpoint")
        given = sorted(
            zip([float(b) % TWO_PI for b in breakpoints], [complex_from_json(v) for v in values])
        )
        angles = _normalized_breakpoints([b for b, _ in given])

        def value_at(angle: float) -> complex:
            current = given[-1][1]
            for start, value in given:
                if start <= angle + get_tolerances().angle:
                    current = value
            return current

        return cls(angles, [np.full(2, value_at(a)) for a in angles])

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PCSymbol":
        """
        Build from JSON data.

        Accepts {"breakpoints": [...], "values": [...]} (piecewise constant),
        {"breakpoints": [...], "segments": [[...], ...]} (sampled), or any
        rational symbol spec.
        """
        if "segments" in data:
            return cls(
                [float(b) for b in data["breakpoints"]],
                [array_from_json(s) for s in data["segments"]],
            )
        if "values" in data:
            return cls.piecewise_constant(data.get("breakpoints", [0.0]), data["values"])
        return cls.from_rational(make_symbol(data))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "breakpoints": list(self.breakpoints),
            "segments": [array_to_json(s) for s in self.segments],
        }

    # -- one-sided limits ---------------------------------------------------

    def _position(self, angle: float) -> int:
        tol = get_tolerances().angle
        angle = float(angle) % TWO_PI
        for k, start in enumerate(self.breakpoints):
            if abs(start - angle) <= tol or abs(start - angle) >= TWO_PI - tol:
                return k
        raise ValueError(f"Angle {angle} is not a breakpoint. Available: {self.breakpoints}")

    def right_limit(self, angle: float) -> complex:
        """f⁺ at a breakpoint"""
        return complex(self.segments[self._position(angle)][0])

    def left_limit(self, angle: float) -> complex:
        """f⁻ at a breakpoint"""
        return complex(self.segments[self._position(angle) - 1][-1])

    def upper_segments(self) -> List[int]:
        """Segment indices covering 𝕋⁺, in order from θ = 0 to θ = π"""
        return [k for k, start in enumerate(self.breakpoints) if start < np.pi]

    def upper_jumps(self) -> List[float]:
        """Breakpoints strictly inside 𝕋⁺"""
        return [start for start in self.breakpoints if 0.0 < start < np.pi]

    def min_modulus(self) -> float:
        return float(min(np.min(np.abs(s)) for s in self.segments))

    def refined(self, factor: int = 2) -> "PCSymbol":
        """Same data with linearly interpolated samples, ``factor`` times denser"""
        segments = []
        for segment in self.segments:
            old = np.linspace(0.0, 1.0, segment.size)
            new = np.linspace(0.0, 1.0, (segment.size - 1) * factor + 1)
            real = np.interp(new, old, segment.real)
            segments.append(real + 1j * np.interp(new, old, segment.imag))
        return PCSymbol(list(self.breakpoints), segments)
