"""
Invertibility decisions for T(a) ± H(b)

The decision runs in this order:
1. The signature clauses: nine (κ₁, κ₂, σ(c), σ(d)) patterns with |κ| ≤ 1 under
   which the operator is invertible, each with an explicit inverse.
2. The sign quadrants: κ₁, κ₂ ≥ 0 (right-invertible), κ₁, κ₂ ≤ 0 (left-invertible)
   and κ₁ ≥ 0 ≥ κ₂ (generalized invertible), refined by the kernel and cokernel
   dimensions.
3. κ₁ < 0 < κ₂: the parity and signature relations that invertibility forces,
   and for (−2n, 2n) the W_n tests for one-sided and two-sided invertibility.
   Other configurations stay undetermined.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple

from tph_invert.core.encoding import complex_from_json, complex_to_json
from tph_invert.core.pairs import MatchingPairAnalysis, subordinated_pair
from tph_invert.core.symbol import RationalSymbol
from tph_invert.classify.kernels import KernelBasis, cokernel, kernel, sign_value
from tph_invert.classify.omega import wn_matrix
from tph_invert.operators.expr import OperatorExpr, expr_from_dict
from tph_invert.operators.inverses import Clause, build_inverse

logger = logging.getLogger(__name__)


class InvertibilityStatus(str, Enum):
    INVERTIBLE = "Invertible"
    LEFT_INVERTIBLE = "LeftInvertible"
    RIGHT_INVERTIBLE = "RightInvertible"
    GENERALIZED_INVERTIBLE = "GeneralizedInvertible"
    NOT_INVERTIBLE = "NotInvertible"
    UNDETERMINED = "Undetermined"


# (κ₁, κ₂) -> (required σ(c), required σ(d)); None means unconstrained
_SIGNATURE_CLAUSES: Dict[Tuple[int, int], Tuple[Clause, Optional[int], Optional[int]]] = {
    (0, 0): (Clause.SIGNATURE_I, None, None),
    (1, 0): (Clause.SIGNATURE_II, 1, None),
    (0, 1): (Clause.SIGNATURE_III, None, -1),
    (1, 1): (Clause.SIGNATURE_IV, 1, -1),
    (0, -1): (Clause.SIGNATURE_V, None, 1),
    (-1, 0): (Clause.SIGNATURE_VI, -1, None),
    (-1, -1): (Clause.SIGNATURE_VII, -1, 1),
    (1, -1): (Clause.SIGNATURE_VIII, 1, 1),
    (-1, 1): (Clause.SIGNATURE_IX, -1, -1),
}


def match_sufficient_clause(
    kappa1: int, kappa2: int, sigma_c: int, sigma_d: int
) -> Optional[Clause]:
    """The signature clause that guarantees invertibility, if any"""
    entry = _SIGNATURE_CLAUSES.get((kappa1, kappa2))
    if entry is None:
        return None
    clause, want_c, want_d = entry
    if want_c is not None and sigma_c != want_c:
        return None
    if want_d is not None and sigma_d != want_d:
        return None
    return clause


def necessary_conditions(
    kappa1: int, kappa2: int, sigma_c: int, sigma_d: int
) -> Dict[str, bool]:
    """
    Relations every invertible T(a)+H(b) satisfies, by name.

    For κ₁ ≥ κ₂ or κ₁κ₂ ≥ 0 both indices lie in {−1, 0, 1}. For κ₁ < 0 < κ₂ the
    relation depends on the parities:
    - both even: κ₂ = −κ₁
    - κ₁ odd, κ₂ even: κ₂ = −κ₁ + σ(c)
    - κ₁ even, κ₂ odd: κ₂ = −κ₁ − σ(d)
    - both odd: κ₂ = −κ₁ + σ(c) − σ(d)
    """
    if kappa1 >= kappa2 or kappa1 * kappa2 >= 0:
        return {"index-bound": abs(kappa1) <= 1 and abs(kappa2) <= 1}

    odd1, odd2 = kappa1 % 2 == 1, kappa2 % 2 == 1
    if not odd1 and not odd2:
        return {"parity-even-even": kappa2 == -kappa1}
    if odd1 and not odd2:
        return {"parity-odd-even": kappa2 == -kappa1 + sigma_c}
    if not odd1 and odd2:
        return {"parity-even-odd": kappa2 == -kappa1 - sigma_d}
    return {"parity-odd-odd": kappa2 == -kappa1 + sigma_c - sigma_d}


@dataclass
class ClassificationReport:
    """Outcome of ``decide``, with the bases and inverse it is based on"""

    status: InvertibilityStatus
    clause: Clause
    kappa1: int
    kappa2: int
    sigma_c: int
    sigma_d: int
    dim_ker: int
    dim_coker: int
    kernel: KernelBasis = field(default_factory=KernelBasis)
    cokernel: KernelBasis = field(default_factory=KernelBasis)
    inverse: Optional[OperatorExpr] = None
    wn_determinant: Optional[complex] = None
    necessary: Dict[str, bool] = field(default_factory=dict)
    operator_sign: str = "+"

    @property
    def index(self) -> int:
        return self.dim_ker - self.dim_coker

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "status": self.status.value,
            "clause": self.clause.value,
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
            "sigma_c": self.sigma_c,
            "sigma_d": self.sigma_d,
            "dim_ker": self.dim_ker,
            "dim_coker": self.dim_coker,
            "kernel": self.kernel.to_dict()["elements"],
            "cokernel": self.cokernel.to_dict()["elements"],
            "inverse": None if self.inverse is None else self.inverse.to_dict(),
            "wn_determinant": (
                None if self.wn_determinant is None else complex_to_json(self.wn_determinant)
            ),
            "necessary": dict(self.necessary),
            "operator_sign": self.operator_sign,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ClassificationReport":
        """Create from dictionary"""
        inverse = data.get("inverse")
        determinant = data.get("wn_determinant")
        return cls(
            status=InvertibilityStatus(data["status"]),
            clause=Clause(data["clause"]),
            kappa1=int(data["kappa1"]),
            kappa2=int(data["kappa2"]),
            sigma_c=int(data["sigma_c"]),
            sigma_d=int(data["sigma_d"]),
            dim_ker=int(data["dim_ker"]),
            dim_coker=int(data["dim_coker"]),
            kernel=KernelBasis.from_dict({"elements": data.get("kernel", [])}),
            cokernel=KernelBasis.from_dict({"elements": data.get("cokernel", [])}),
            inverse=None if inverse is None else expr_from_dict(inverse),
            wn_determinant=None if determinant is None else complex_from_json(determinant),
            necessary=dict(data.get("necessary", {})),
            operator_sign=data.get("operator_sign", "+"),
        )


def _status_from_dims(dim_ker: int, dim_coker: int) -> InvertibilityStatus:
    if dim_ker == 0 and dim_coker == 0:
        return InvertibilityStatus.INVERTIBLE
    if dim_ker == 0:
        return InvertibilityStatus.LEFT_INVERTIBLE
    if dim_coker == 0:
        return InvertibilityStatus.RIGHT_INVERTIBLE
    return InvertibilityStatus.GENERALIZED_INVERTIBLE


def decide(
    analysis: MatchingPairAnalysis, operator_sign: str = "+", window: Optional[int] = None
) -> ClassificationReport:
    """
    Classify T(a)+H(b) (or T(a)−H(b) with operator_sign '-').

    Args:
        analysis: The matching pair (a, b)
        operator_sign: '+' or '-'
        window: Minimum evaluation window for the kernel computations

    Returns:
        Report with status, deciding clause, bases and the inverse when a formula exists
    """
    s = sign_value(operator_sign)
    label = "+" if s > 0 else "-"
    if s < 0:
        analysis = analysis.negated()

    k1, k2 = analysis.indices
    sc, sd = analysis.signatures
    ker = kernel(analysis, "+", window)
    coker = cokernel(analysis, "+", window)
    report = ClassificationReport(
        status=InvertibilityStatus.UNDETERMINED,
        clause=Clause.NECESSARY_ONLY,
        kappa1=k1,
        kappa2=k2,
        sigma_c=sc,
        sigma_d=sd,
        dim_ker=ker.dim,
        dim_coker=coker.dim,
        kernel=ker,
        cokernel=coker,
        necessary=necessary_conditions(k1, k2, sc, sd),
        operator_sign=label,
    )

    clause = match_sufficient_clause(k1, k2, sc, sd)
    if clause is not None:
        report.status = InvertibilityStatus.INVERTIBLE
        report.clause = clause
        report.inverse = build_inverse(analysis, clause, window)
    elif k1 >= 0 and k2 >= 0:
        report.clause = Clause.RIGHT_INVERSE
        report.status = _status_from_dims(ker.dim, 0)
        report.inverse = build_inverse(analysis, Clause.RIGHT_INVERSE, window)
    elif k1 <= 0 and k2 <= 0:
        report.clause = Clause.LEFT_INVERSE
        report.status = _status_from_dims(0, coker.dim)
        report.inverse = build_inverse(analysis, Clause.LEFT_INVERSE, window)
    elif k1 >= 0 >= k2:
        report.clause = Clause.GENERALIZED_INVERSE
        report.status = _status_from_dims(ker.dim, coker.dim)
        report.inverse = build_inverse(analysis, Clause.GENERALIZED_INVERSE, window)
    elif k2 == -k1 and k1 % 2 == 0:
        _decide_shift_case(analysis, report, window)
    elif all(report.necessary.values()):
        report.clause = Clause.NECESSARY_ONLY
        report.status = InvertibilityStatus.UNDETERMINED
    else:
        report.clause = Clause.NECESSARY_VIOLATED
        if ker.dim == 0 and coker.dim:
            report.status = InvertibilityStatus.LEFT_INVERTIBLE
        elif coker.dim == 0 and ker.dim:
            report.status = InvertibilityStatus.RIGHT_INVERTIBLE
        else:
            report.status = InvertibilityStatus.NOT_INVERTIBLE

    _check_consistency(report)
    logger.debug(
        "T(a)%sH(b): kappa=(%d, %d) sigma=(%d, %d) -> %s via %s",
        label,
        k1,
        k2,
        sc,
        sd,
        report.status.value,
        report.clause.value,
    )
    return report


def _decide_shift_case(
    analysis: MatchingPairAnalysis, report: ClassificationReport, window: Optional[int]
) -> None:
    """(−2n, 2n): left-invertible iff W_n(a, b) is non-degenerate, right iff W_n of the adjoint"""
    n = -analysis.kappa1 // 2
    left = wn_matrix(analysis, n, window)
    right = wn_matrix(analysis.adjoint(), n, window)
    report.wn_determinant = left.determinant
    report.clause = Clause.SHIFT_CORRECTION
    if left.nondegenerate and right.nondegenerate:
        report.status = InvertibilityStatus.INVERTIBLE
        report.inverse = build_inverse(analysis, Clause.SHIFT_CORRECTION, window)
    elif left.nondegenerate:
        report.status = InvertibilityStatus.LEFT_INVERTIBLE
    elif right.nondegenerate:
        report.status = InvertibilityStatus.RIGHT_INVERTIBLE
    else:
        report.status = InvertibilityStatus.NOT_INVERTIBLE


def _check_consistency(report: ClassificationReport) -> None:
    """Warn when the verdict contradicts the computed dimensions"""
    status = report.status
    if status == InvertibilityStatus.INVERTIBLE and (report.dim_ker or report.dim_coker):
        logger.warning(
            "Invertible verdict with dim_ker=%d, dim_coker=%d", report.dim_ker, report.dim_coker
        )
    elif status == InvertibilityStatus.LEFT_INVERTIBLE and report.dim_ker:
        logger.warning("Left-invertible verdict with dim_ker=%d", report.dim_ker)
    elif status == InvertibilityStatus.RIGHT_INVERTIBLE and report.dim_coker:
        logger.warning("Right-invertible verdict with dim_coker=%d", report.dim_coker)


def coburn_simonenko_forms(a: RationalSymbol) -> Dict[str, Tuple[MatchingPairAnalysis, str]]:
    """
    The four operators T(a)+H(a), T(a)−H(a), T(a)−H(a·t⁻¹), T(a)+H(a·t).

    Each has a trivial kernel or a trivial cokernel. Values are (analysis of the
    pair (a, b), operator sign).
    """
    a_shift_down = a.shifted(-1)
    a_shift_up = a.shifted(1)
    return {
        "T(a)+H(a)": (subordinated_pair(a, a), "+"),
        "T(a)-H(a)": (subordinated_pair(a, a), "-"),
        "T(a)-H(at^-1)": (subordinated_pair(a, a_shift_down), "-"),
        "T(a)+H(at)": (subordinated_pair(a, a_shift_up), "+"),
    }
