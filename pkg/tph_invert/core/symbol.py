"""
Rational symbols on the unit circle

Supports:
- RationalSymbol: canonical zero-pole-gain form gain·t^power·Π(t−z)/Π(t−p)
- Laurent-polynomial input (roots by companion-matrix eigenvalues)
- Products, quotients, the flip g(1/t) and the boundary conjugate
- Exact Fourier coefficients from partial fractions with pole multiplicities
- Winding numbers from zero/pole counts
"""

import cmath
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import binom

from tph_invert.config import get_tolerances
from tph_invert.core.encoding import (
    array_from_json,
    array_to_json,
    complex_from_json,
    complex_to_json,
)
from tph_invert.errors import (
    EvalAtPole,
    InvalidSymbolSpec,
    PoleOnCircle,
    ZeroGain,
    ZeroOnCircle,
)

logger = logging.getLogger(__name__)

Number = Union[int, float, complex]


def _sort_key(z: complex) -> Tuple[float, float]:
    return (round(abs(z), 12), round(cmath.phase(z), 12))


def _near_circle(z: complex, rel: float) -> bool:
    return abs(abs(z) - 1.0) <= rel * abs(z)


def _match_multisets(first: Sequence[complex], second: Sequence[complex], tol: float) -> bool:
    """Greedy nearest matching of two root multisets"""
    if len(first) != len(second):
        return False
    pool = list(second)
    for z in first:
        if not pool:
            return False
        distances = [abs(z - w) for w in pool]
        best = int(np.argmin(distances))
        if distances[best] > tol * max(1.0, abs(z)):
            return False
        pool.pop(best)
    return True


@dataclass(frozen=True)
class RationalSymbol:
    """
    Canonical rational function g(t) = gain·t^power·Π(t−zᵢ)/Π(t−pⱼ).

    Zeros and poles are nonzero (the origin is folded into ``power``), no zero
    cancels a pole, and both multisets are sorted by (modulus, argument).
    Instances are immutable and hashable, so they can key coefficient caches.
    Use ``build`` rather than the raw constructor.
    """

    gain: complex
    power: int = 0
    zeros: Tuple[complex, ...] = ()
    poles: Tuple[complex, ...] = ()

    @classmethod
    def build(
        cls,
        gain: Number,
        power: int = 0,
        zeros: Iterable[Number] = (),
        poles: Iterable[Number] = (),
        check_circle: bool = True,
    ) -> "RationalSymbol":
        """
        Canonicalize and construct.

        Args:
            gain: Leading factor, must be nonzero
            power: Exponent of the monomial factor
            zeros: Zeros (zeros at the origin raise ``power``)
            poles: Poles (poles at the origin lower ``power``)
            check_circle: Reject poles on the unit circle. Weighted factors of the
                antisymmetric factorization are built with this disabled.

        Raises:
            ZeroGain: gain is zero or not finite
            PoleOnCircle: a pole lies within the circle tolerance of 𝕋
        """
        tol = get_tolerances()
        gain = complex(gain)
        if gain == 0 or not np.isfinite(gain):
            raise ZeroGain(f"Gain must be finite and nonzero, got {gain}")
        power = int(power)

        zs: List[complex] = []
        for z in zeros:
            z = complex(z)
            if abs(z) <= tol.cancel:
                power += 1
            else:
                zs.append(z)
        ps: List[complex] = []
        for p in poles:
            p = complex(p)
            if abs(p) <= tol.cancel:
                power -= 1
            else:
                ps.append(p)

        kept_zeros: List[complex] = []
        for z in zs:
            match: Optional[int] = None
            best = np.inf
            for i, p in enumerate(ps):
                distance = abs(z - p)
                if distance <= tol.cancel * max(1.0, abs(z)) and distance < best:
                    match, best = i, distance
            if match is None:
                kept_zeros.append(z)
            else:
                ps.pop(match)

        if check_circle:
            for p in ps:
                if _near_circle(p, tol.circle):
                    raise PoleOnCircle(f"Pole {p} lies on the unit circle")

        return cls(
            gain=gain,
            power=power,
            zeros=tuple(sorted(kept_zeros, key=_sort_key)),
            poles=tuple(sorted(ps, key=_sort_key)),
        )

    @classmethod
    def constant(cls, value: Number) -> "RationalSymbol":
        """The constant function"""
        return cls.build(value)

    @classmethod
    def monomial(cls, power: int, gain: Number = 1.0) -> "RationalSymbol":
        """gain·t^power"""
        return cls.build(gain, power)

    @property
    def is_constant(self) -> bool:
        return self.power == 0 and not self.zeros and not self.poles

    @property
    def degree(self) -> int:
        """Total count of zeros, poles and |power|"""
        return len(self.zeros) + len(self.poles) + abs(self.power)

    def checked(self) -> "RationalSymbol":
        """Return self after rejecting poles on the unit circle"""
        tol = get_tolerances()
        for p in self.poles:
            if _near_circle(p, tol.circle):
                raise PoleOnCircle(f"Pole {p} lies on the unit circle")
        return self

    # -- arithmetic -----------------------------------------------------------

    def __mul__(self, other: Union["RationalSymbol", Number]) -> "RationalSymbol":
        if not isinstance(other, RationalSymbol):
            return RationalSymbol.build(
                self.gain * complex(other), self.power, self.zeros, self.poles, check_circle=False
            )
        return RationalSymbol.build(
            self.gain * other.gain,
            self.power + other.power,
            self.zeros + other.zeros,
            self.poles + other.poles,
            check_circle=False,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Union["RationalSymbol", Number]) -> "RationalSymbol":
        if not isinstance(other, RationalSymbol):
            return self * (1.0 / complex(other))
        return self * other.inverse()

    def __neg__(self) -> "RationalSymbol":
        return self * -1.0

    def inverse(self) -> "RationalSymbol":
        """1/g"""
        return RationalSymbol.build(
            1.0 / self.gain, -self.power, self.poles, self.zeros, check_circle=False
        )

    def shifted(self, m: int) -> "RationalSymbol":
        """t^m·g"""
        return RationalSymbol(self.gain, self.power + m, self.zeros, self.poles)

    def tilde(self) -> "RationalSymbol":
        """g̃(t) = g(1/t)"""
        gain = self.gain
        for z in self.zeros:
            gain *= -z
        for p in self.poles:
            gain /= -p
        power = -self.power - len(self.zeros) + len(self.poles)
        return RationalSymbol.build(
            gain,
            power,
            [1.0 / z for z in self.zeros],
            [1.0 / p for p in self.poles],
            check_circle=False,
        )

    def bar(self) -> "RationalSymbol":
        """Boundary conjugate: the rational function equal to conj(g(t)) on 𝕋"""
        conjugated = RationalSymbol(
            self.gain.conjugate(),
            self.power,
            tuple(z.conjugate() for z in self.zeros),
            tuple(p.conjugate() for p in self.poles),
        )
        return conjugated.tilde()

    # -- evaluation -----------------------------------------------------------

    def __call__(self, t: Any) -> Any:
        arr = np.asarray(t, dtype=complex)
        value = self.gain * arr**self.power
        for z in self.zeros:
            value = value * (arr - z)
        for p in self.poles:
            value = value / (arr - p)
        if arr.ndim == 0:
            return complex(value)
        return value

    @property
    def decay_ratio(self) -> float:
        """Geometric decay rate of the Fourier coefficients on 𝕋"""
        ratio = 0.0
        for p in self.poles:
            modulus = abs(p)
            ratio = max(ratio, modulus if modulus < 1.0 else 1.0 / modulus)
        return ratio

    def is_close(self, other: "RationalSymbol", tol: Optional[float] = None) -> bool:
        """
        Equality of rational functions within a relative tolerance.

        The canonical forms are compared first. Roots obtained numerically from
        multiple roots can differ by much more than the tolerance, so a failed
        structural match falls back to comparing values on enough points of the
        circle to determine the difference uniquely.
        """
        tol = get_tolerances().matching if tol is None else tol
        if (
            self.power == other.power
            and abs(self.gain - other.gain) <= tol * max(abs(self.gain), abs(other.gain))
            and _match_multisets(self.zeros, other.zeros, tol)
            and _match_multisets(self.poles, other.poles, tol)
        ):
            return True
        samples = max(256, 4 * (self.degree + other.degree) + 8)
        t = np.exp(2j * np.pi * (np.arange(samples) + 0.5) / samples)
        mine, theirs = self(t), other(t)
        scale = max(np.max(np.abs(mine)), np.max(np.abs(theirs)))
        return bool(np.max(np.abs(mine - theirs)) <= tol * scale)

    def is_one(self, tol: Optional[float] = None) -> bool:
        return self.is_close(RationalSymbol.constant(1.0), tol)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "gain": complex_to_json(self.gain),
            "power": self.power,
            "zeros": array_to_json(self.zeros),
            "poles": array_to_json(self.poles),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "RationalSymbol":
        """Create from dictionary"""
        return make_symbol(data)

    def __repr__(self) -> str:
        return (
            f"RationalSymbol(gain={self.gain:.6g}, power={self.power}, "
            f"zeros={len(self.zeros)}, poles={len(self.poles)})"
        )


@dataclass(eq=False)
class CoeffWindow:
    """Fourier coefficients on the index range [lo, hi]"""

    lo: int
    hi: int
    coeffs: np.ndarray
    decay_ratio: float = 0.0

    def __post_init__(self) -> None:
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.shape != (self.hi - self.lo + 1,):
            raise ValueError(
                f"Window [{self.lo}, {self.hi}] needs {self.hi - self.lo + 1} coefficients, "
                f"got shape {self.coeffs.shape}"
            )

    @classmethod
    def from_mapping(cls, values: Mapping[int, Number], lo: int, hi: int) -> "CoeffWindow":
        """Window holding the given coefficients, zero elsewhere"""
        coeffs = np.zeros(hi - lo + 1, dtype=complex)
        for index, value in values.items():
            if lo <= index <= hi:
                coeffs[index - lo] = value
        return cls(lo, hi, coeffs)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    def coefficient(self, n: int) -> complex:
        """Coefficient n, zero outside the window"""
        if self.lo <= n <= self.hi:
            return complex(self.coeffs[n - self.lo])
        return 0j

    def restrict(self, lo: int, hi: int) -> "CoeffWindow":
        """Same sequence on another index range (zero padded)"""
        coeffs = np.zeros(hi - lo + 1, dtype=complex)
        start, stop = max(lo, self.lo), min(hi, self.hi)
        if start <= stop:
            coeffs[start - lo : stop - lo + 1] = self.coeffs[start - self.lo : stop - self.lo + 1]
        return CoeffWindow(lo, hi, coeffs, self.decay_ratio)

    def interior(self) -> "CoeffWindow":
        """The inner half of the window, where operator results are trusted"""
        quarter = (self.hi - self.lo + 1) // 4
        return self.restrict(self.lo + quarter, self.hi - quarter)

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def combine(self, other: "CoeffWindow", alpha: complex = 1.0) -> "CoeffWindow":
        """self + alpha·other on the union of both ranges"""
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        coeffs = self.restrict(lo, hi).coeffs + alpha * other.restrict(lo, hi).coeffs
        return CoeffWindow(lo, hi, coeffs, max(self.decay_ratio, other.decay_ratio))

    def scaled(self, alpha: complex) -> "CoeffWindow":
        return CoeffWindow(self.lo, self.hi, alpha * self.coeffs, self.decay_ratio)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "lo": self.lo,
            "hi": self.hi,
            "coeffs": array_to_json(self.coeffs),
            "decay_ratio": self.decay_ratio,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CoeffWindow":
        """Create from dictionary"""
        return cls(
            int(data["lo"]),
            int(data["hi"]),
            array_from_json(data["coeffs"]),
            float(data.get("decay_ratio", 0.0)),
        )


# -- construction -----------------------------------------------------------


def laurent_symbol(coefficients: Mapping[Any, Any]) -> RationalSymbol:
    """
    Symbol of the Laurent polynomial Σ c_k t^k.

    Keys are exponents (ints or decimal strings), values any complex encoding.
    Roots come from the companion-matrix eigenvalues of the trimmed coefficient vector.
    """
    items: Dict[int, complex] = {}
    for key, value in coefficients.items():
        try:
            exponent = int(key)
        except (TypeError, ValueError) as exc:
            raise InvalidSymbolSpec(f"Laurent exponent must be an integer, got {key!r}") from exc
        coefficient = complex_from_json(value)
        if coefficient != 0:
            items[exponent] = items.get(exponent, 0j) + coefficient
    items = {k: v for k, v in items.items() if v != 0}
    if not items:
        raise ZeroGain("Laurent polynomial has no nonzero coefficient")

    kmin, kmax = min(items), max(items)
    vector = np.array([items.get(k, 0j) for k in range(kmax, kmin - 1, -1)], dtype=complex)
    roots = np.roots(vector) if vector.size > 1 else np.array([], dtype=complex)
    return RationalSymbol.build(items[kmax], kmin, roots)


def make_symbol(spec: Union[RationalSymbol, Mapping[str, Any]]) -> RationalSymbol:
    """
    Build a canonical symbol from a zero-pole-gain object or a Laurent ratio.

    Examples:
        >>> make_symbol({"gain": 1, "zeros": [2], "poles": [0.5]})
        >>> make_symbol({"num": {"1": 1, "0": -2}, "den": {"0": 1}})

    Raises:
        PoleOnCircle, ZeroGain, InvalidSymbolSpec
    """
    if isinstance(spec, RationalSymbol):
        return spec.checked()
    if not isinstance(spec, Mapping):
        raise InvalidSymbolSpec(f"Symbol spec must be an object, got {type(spec).__name__}")

    if "num" in spec or "den" in spec:
        numerator = laurent_symbol(spec.get("num", {"0": 1}))
        denominator = laurent_symbol(spec.get("den", {"0": 1}))
        return (numerator / denominator).checked()

    unknown = set(spec) - {"gain", "power", "zeros", "poles"}
    if unknown:
        raise InvalidSymbolSpec(f"Unknown symbol fields: {sorted(unknown)}")
    try:
        power = int(spec.get("power", 0))
    except (TypeError, ValueError) as exc:
        raise InvalidSymbolSpec(f"power must be an integer, got {spec.get('power')!r}") from exc
    return RationalSymbol.build(
        complex_from_json(spec.get("gain", 1.0)),
        power,
        [complex_from_json(z) for z in spec.get("zeros", [])],
        [complex_from_json(p) for p in spec.get("poles", [])],
    )


def compose(op: str, a: RationalSymbol, b: RationalSymbol) -> RationalSymbol:
    """Canonical product ("mul") or quotient ("div")"""
    if op == "mul":
        return (a * b).checked()
    if op == "div":
        return (a / b).checked()
    raise ValueError(f"Unknown composition: {op}. Available: ['mul', 'div']")


def involution(kind: str, g: RationalSymbol) -> RationalSymbol:
    """g(1/t) ("tilde") or the boundary conjugate ("bar")"""
    if kind == "tilde":
        return g.tilde()
    if kind == "bar":
        return g.bar()
    raise ValueError(f"Unknown involution: {kind}. Available: ['tilde', 'bar']")


def evaluate(g: RationalSymbol, t: Number) -> complex:
    """Value of g at a point of the punctured plane"""
    t = complex(t)
    if t == 0 and g.power < 0:
        raise EvalAtPole("Symbol has a pole at the origin")
    for p in g.poles:
        if abs(t - p) <= 1e-14 * max(1.0, abs(p)):
            raise EvalAtPole(f"Symbol has a pole at {p}")
    return complex(g(t))


def winding_number(g: RationalSymbol) -> int:
    """Winding number of g(𝕋) about the origin"""
    tol = get_tolerances()
    for z in g.zeros:
        if _near_circle(z, tol.circle):
            raise ZeroOnCircle(f"Zero {z} lies on the unit circle")
    for p in g.poles:
        if _near_circle(p, tol.circle):
            raise PoleOnCircle(f"Pole {p} lies on the unit circle")
    inside_zeros = sum(1 for z in g.zeros if abs(z) < 1.0)
    inside_poles = sum(1 for p in g.poles if abs(p) < 1.0)
    return g.power + inside_zeros - inside_poles


# -- Fourier coefficients ---------------------------------------------------


def _monic(roots: Sequence[complex]) -> np.ndarray:
    if len(roots) == 0:
        return np.array([1.0 + 0j])
    return np.atleast_1d(np.poly(np.asarray(roots, dtype=complex))).astype(complex)


def _truncated_product(first: np.ndarray, second: np.ndarray, order: int) -> np.ndarray:
    return np.convolve(first, second)[:order]


def _clusters(poles: Sequence[complex], rel: float) -> List[Tuple[complex, List[int]]]:
    """Group numerically coincident poles into (center, member indices)"""
    groups: List[List[int]] = []
    for i, p in enumerate(poles):
        for group in groups:
            if abs(poles[group[0]] - p) <= rel * max(1.0, abs(p)):
                group.append(i)
                break
        else:
            groups.append([i])
    return [(complex(np.mean([poles[i] for i in group])), group) for group in groups]


@lru_cache(maxsize=512)
def _coefficients(g: RationalSymbol, lo: int, hi: int, cluster: float) -> np.ndarray:
    n = np.arange(lo, hi + 1)
    out = np.zeros(n.size, dtype=complex)

    zeros = list(g.zeros) + [0j] * max(g.power, 0)
    poles = list(g.poles) + [0j] * max(-g.power, 0)

    # Polynomial part
    if len(zeros) >= len(poles):
        quotient, _ = np.polydiv(_monic(zeros), _monic(poles))
        degree = quotient.size - 1
        for k in range(max(lo, 0), min(hi, degree) + 1):
            out[k - lo] += g.gain * quotient[degree - k]

    # Principal parts, one per pole cluster
    for center, members in _clusters(poles, cluster):
        order = len(members)
        series = np.zeros(order, dtype=complex)
        series[0] = g.gain
        for z in zeros:
            series = _truncated_product(series, np.array([center - z, 1.0]), order)
        for j, q in enumerate(poles):
            if j in members:
                continue
            delta = center - q
            inverse = np.array([(-1.0) ** i / delta ** (i + 1) for i in range(order)])
            series = _truncated_product(series, inverse, order)

        for k in range(1, order + 1):
            amplitude = series[order - k]
            if amplitude == 0:
                continue
            if center == 0:
                if lo <= -k <= hi:
                    out[-k - lo] += amplitude
            elif abs(center) > 1.0:
                mask = n >= 0
                m = n[mask]
                out[mask] += (
                    amplitude * (-center) ** (-k) * binom(m + k - 1, k - 1) * (1.0 / center) ** m
                )
            else:
                mask = n <= -k
                m = n[mask]
                out[mask] += amplitude * binom(-m - 1, k - 1) * center ** (-m - k)

    out.flags.writeable = False
    return out


def fourier_coefficients(g: RationalSymbol, lo: int, hi: int) -> CoeffWindow:
    """
    Fourier coefficients ĝ_n for lo ≤ n ≤ hi.

    Uses the partial fraction expansion with the known poles, so no sampling or
    FFT error enters. Coefficients decay like decay_ratio^|n|.

    Raises:
        PoleOnCircle: g has a pole on 𝕋
    """
    if hi < lo:
        raise ValueError(f"Empty coefficient range [{lo}, {hi}]")
    g.checked()
    coeffs = _coefficients(g, lo, hi, get_tolerances().cluster)
    return CoeffWindow(lo, hi, coeffs.copy(), g.decay_ratio)
