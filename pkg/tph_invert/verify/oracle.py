"""
Numerical oracles

Independent checks of the constructive results:
- Defect counts from singular values of dense finite sections
- Residuals of operator identities on test vectors
- Convergence sweeps over the section size
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from tph_invert.core.symbol import CoeffWindow, RationalSymbol
from tph_invert.operators.dense import DenseOperator, truncate
from tph_invert.operators.expr import OperatorExpr, compose, hankel, toeplitz
from tph_invert.operators.window import apply, as_window

logger = logging.getLogger(__name__)

# The counted cluster must sit this far below the next singular value
GAP_RATIO = 10.0

Vector = Union[CoeffWindow, RationalSymbol, np.ndarray]


@dataclass
class OracleReport:
    """Defect estimates of one finite section"""

    N: int
    singular_values_tail: List[float]
    adjoint_singular_values_tail: List[float]
    est_dim_ker: int
    est_dim_coker: int
    residuals: Dict[str, float] = field(default_factory=dict)
    unstable: bool = False
    expected: Optional[Tuple[int, int]] = None

    @property
    def matches_expected(self) -> Optional[bool]:
        if self.expected is None:
            return None
        return (self.est_dim_ker, self.est_dim_coker) == tuple(self.expected)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "N": self.N,
            "singular_values_tail": list(self.singular_values_tail),
            "adjoint_singular_values_tail": list(self.adjoint_singular_values_tail),
            "est_dim_ker": self.est_dim_ker,
            "est_dim_coker": self.est_dim_coker,
            "residuals": dict(self.residuals),
            "unstable": self.unstable,
            "expected": None if self.expected is None else list(self.expected),
            "matches_expected": self.matches_expected,
        }


def count_small(singular: np.ndarray, tol: float) -> Tuple[int, bool]:
    """
    Number of singular values at or below tol·σ_max, and whether the count is stable.

    Stable means a gap of at least GAP_RATIO between the counted cluster and the
    next value (or, for a zero count, between the smallest value and tol·σ_max).
    """
    singular = np.sort(np.asarray(singular, dtype=float))[::-1]
    if singular.size == 0 or singular[0] == 0:
        return singular.size, False
    threshold = tol * singular[0]
    count = int(np.sum(singular <= threshold))
    if count == 0:
        return 0, bool(singular[-1] >= GAP_RATIO * threshold)
    if count == singular.size:
        return count, True
    largest_small = singular[singular.size - count]
    next_value = singular[singular.size - count - 1]
    return count, bool(next_value >= GAP_RATIO * max(largest_small, np.finfo(float).tiny))


def _tail(singular: np.ndarray, count: int) -> List[float]:
    keep = 2 * max(count, 1)
    return [float(s) for s in np.sort(singular)[:keep]]


def svd_defects(
    op: DenseOperator, expected: Optional[Tuple[int, int]] = None, tol: float = 1e-8
) -> OracleReport:
    """
    Estimate kernel and cokernel dimensions of the operator behind a finite section.

    With a margin the kernel is counted on the tall section (all rows, first N
    columns) and the cokernel on the conjugate transpose of the wide section, so
    the two counts separate. Without a margin both come from the square section.
    """
    if op.margin > 0:
        kernel_values = scipy.linalg.svdvals(op.tall)
        cokernel_values = scipy.linalg.svdvals(op.wide)
    else:
        kernel_values = cokernel_values = scipy.linalg.svdvals(op.section)

    dim_ker, stable_ker = count_small(kernel_values, tol)
    dim_coker, stable_coker = count_small(cokernel_values, tol)
    report = OracleReport(
        N=op.N,
        singular_values_tail=_tail(kernel_values, dim_ker),
        adjoint_singular_values_tail=_tail(cokernel_values, dim_coker),
        est_dim_ker=dim_ker,
        est_dim_coker=dim_coker,
        unstable=not (stable_ker and stable_coker),
        expected=None if expected is None else (int(expected[0]), int(expected[1])),
    )
    if report.unstable:
        logger.warning("Defect estimate at N=%d has no clear spectral gap", op.N)
    if report.matches_expected is False:
        logger.warning(
            "Oracle counts (%d, %d) differ from expected %s at N=%d",
            dim_ker,
            dim_coker,
            expected,
            op.N,
        )
    return report


def residual(
    checks: Mapping[str, Union[OperatorExpr, np.ndarray]],
    vectors: Sequence[Vector],
    window: Optional[int] = None,
) -> Dict[str, float]:
    """
    Largest sup-norm residual of each named check over the vectors.

    A check is an expression that vanishes on the vectors, evaluated on the
    trusted window interior, or a matrix applied to the leading coefficients.

    Raises:
        TruncationTooSmall: an expression needs a window beyond the maximum
    """
    results: Dict[str, float] = {}
    for name, check in checks.items():
        worst = 0.0
        for vector in vectors:
            if isinstance(check, np.ndarray):
                x = as_window(vector).restrict(0, check.shape[1] - 1).coeffs
                value = float(np.max(np.abs(check @ x))) if check.size else 0.0
            else:
                value = apply(check, vector, window).sup_norm()
            worst = max(worst, value)
        results[name] = worst
        logger.debug("Residual %s: %.3e", name, worst)
    return results


def widom_identity_expr(a: RationalSymbol, b: RationalSymbol) -> OperatorExpr:
    """T(ab) − T(a)T(b) − H(a)H(b̃), which is zero"""
    return (
        toeplitz(a * b)
        - compose(toeplitz(a), toeplitz(b))
        - compose(hankel(a), hankel(b.tilde()))
    )


def hankel_identity_expr(a: RationalSymbol, b: RationalSymbol) -> OperatorExpr:
    """H(ab) − T(a)H(b) − H(a)T(b̃), which is zero"""
    return (
        hankel(a * b)
        - compose(toeplitz(a), hankel(b))
        - compose(hankel(a), toeplitz(b.tilde()))
    )


def random_windows(count: int, length: int, seed: int = 0x5EED) -> List[CoeffWindow]:
    """Reproducible complex Gaussian vectors supported on [0, length−1]"""
    rng = np.random.default_rng(seed)
    return [
        CoeffWindow(0, length - 1, rng.standard_normal(length) + 1j * rng.standard_normal(length))
        for _ in range(count)
    ]


@dataclass
class SweepReport:
    """Oracle reports across section sizes"""

    reports: List[OracleReport]
    stabilized: bool
    counts: Optional[Tuple[int, int]]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "reports": [r.to_dict() for r in self.reports],
            "stabilized": self.stabilized,
            "counts": None if self.counts is None else list(self.counts),
        }


def convergence_sweep(
    a: RationalSymbol,
    b: Optional[RationalSymbol],
    Ns: Sequence[int],
    tol: float = 1e-8,
    expected: Optional[Tuple[int, int]] = None,
) -> SweepReport:
    """
    svd_defects for each N in Ns, with a margin of N/4.

    Stabilized when the largest section is stable and every stable section from
    the first one on reports the same counts.
    """
    reports = [
        svd_defects(truncate(a, b, N, margin=N // 4), expected, tol) for N in sorted(Ns)
    ]
    stable = [r for r in reports if not r.unstable]
    counts = (stable[-1].est_dim_ker, stable[-1].est_dim_coker) if stable else None
    stabilized = bool(
        reports
        and not reports[-1].unstable
        and all((r.est_dim_ker, r.est_dim_coker) == counts for r in stable)
    )
    logger.debug("Sweep over %s: counts %s, stabilized=%s", list(Ns), counts, stabilized)
    return SweepReport(reports=reports, stabilized=stabilized, counts=counts)
