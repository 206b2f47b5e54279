"""
Configuration for tph_invert

Supports:
- Numeric tolerances shared by every module (Tolerances)
- A process-wide active tolerance set with get/set accessors
- CLI run configuration with validation (RunConfig)
"""

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional

from tph_invert.errors import InvalidConfig


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds"""

    # Relative distance of a pole or zero to the unit circle
    circle: float = 1e-9
    # Zero/pole cancellation during canonicalization
    cancel: float = 1e-10
    # Canonical-form equality (matching checks, identity re-verification)
    matching: float = 1e-9
    # Snapping g₊(0) to ±1
    signature: float = 1e-6
    # Fourier coefficient tail that may be dropped from a window
    tail: float = 1e-14
    # Relative singular value threshold for numerical rank
    rank: float = 1e-8
    # Kernel membership residual
    residual: float = 1e-8
    # Membership of an argument in an excluded residue class mod 1
    angle: float = 1e-9
    # Poles closer than this (relative) are merged into one multiple pole
    cluster: float = 1e-7
    # Distance of a curve to the origin
    origin: float = 1e-9
    min_window: int = 64
    max_window: int = 2**14

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Tolerances":
        """Create from dictionary, ignoring unknown keys"""
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})


_active_tolerances = Tolerances()


def get_tolerances() -> Tolerances:
    """Get the active tolerance set"""
    return _active_tolerances


def set_tolerances(tolerances: Tolerances) -> Tolerances:
    """Replace the active tolerance set and return the previous one"""
    global _active_tolerances
    previous = _active_tolerances
    _active_tolerances = tolerances
    return previous


SUBCOMMANDS = ("analyze", "kernel", "inverse", "verify", "pc-index", "curve-dump")
RHO_READINGS = ("tilde-of-plus", "plus-of-tilde")


@dataclass
class RunConfig:
    """
    Configuration for one CLI invocation.

    Symbol specs are the JSON objects accepted by make_symbol (or, for the
    piecewise-constant inputs of pc-index, breakpoint/value lists).
    """

    subcommand: str = "analyze"
    symbol_a: Optional[Dict[str, Any]] = None
    symbol_b: Optional[Dict[str, Any]] = None
    symbol_c: Optional[Dict[str, Any]] = None
    symbol_d_tilde: Optional[Dict[str, Any]] = None
    n: int = 256
    tol: float = 1e-8
    p: float = 2.0
    output: Optional[str] = None
    rho_reading: str = "tilde-of-plus"
    seed: int = 0x5EED
    sign: str = "+"
    curve: str = "c"
    verbose: bool = False

    def validate(self) -> "RunConfig":
        """Check ranges and required inputs; raise InvalidConfig on the first problem"""
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidConfig(
                f"Unknown subcommand: {self.subcommand}. Available: {list(SUBCOMMANDS)}"
            )
        if self.n < 32 or self.n > 16384 or self.n & (self.n - 1):
            raise InvalidConfig(f"N must be a power of two in [32, 16384], got {self.n}")
        if not self.tol > 0:
            raise InvalidConfig(f"tol must be positive, got {self.tol}")
        if not self.p > 1:
            raise InvalidConfig(f"p must be greater than 1, got {self.p}")
        if self.rho_reading not in RHO_READINGS:
            raise InvalidConfig(
                f"Unknown rho reading: {self.rho_reading}. Available: {list(RHO_READINGS)}"
            )
        if self.sign not in ("+", "-"):
            raise InvalidConfig(f"sign must be '+' or '-', got {self.sign!r}")
        if self.curve not in ("c", "d_tilde"):
            raise InvalidConfig(f"curve must be 'c' or 'd_tilde', got {self.curve!r}")

        pc_direct = self.symbol_c is not None and self.symbol_d_tilde is not None
        if self.subcommand in ("pc-index", "curve-dump") and pc_direct:
            return self
        if self.symbol_a is None or self.symbol_b is None:
            raise InvalidConfig(f"{self.subcommand} needs both --a and --b")
        return self

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunConfig":
        """Create from dictionary"""
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})

    @classmethod
    def from_json(cls, json_path: str) -> "RunConfig":
        """Load a run configuration from a JSON file"""
        try:
            with open(Path(json_path), "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidConfig(f"Cannot read run configuration {json_path!r}: {exc}") from exc
        if not isinstance(data, dict):
            kind = type(data).__name__
            raise InvalidConfig(f"Run configuration must be a JSON object, got {kind}")
        return cls.from_dict(data)
