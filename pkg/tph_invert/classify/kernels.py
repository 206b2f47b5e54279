"""
Kernels and cokernels of T(a) ± H(b)

For a matching function g with T(g) of index n > 0 the kernel of T(g) splits into
the images of the projections P_g^± = (I ± JQgP)/2, with explicit bases built from
the plus factor of g. When κ₁ ≥ 0 the kernel of T(a) ± H(b) is the image of
im P_d^± under the transition map φ± plus im P_c^∓. When κ₁ < 0 the operator is
written as the operator of the pair (a·t^{−n}, b·t^{n}) times T(t^n) and the
kernel is cut out of the lifted kernel by the first n coefficients. Cokernels are
kernels of the adjoint pair.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Union

import numpy as np
import scipy.linalg

from tph_invert.config import get_tolerances
from tph_invert.core.factorization import matching_factorization
from tph_invert.core.pairs import MatchingPairAnalysis
from tph_invert.core.symbol import CoeffWindow, RationalSymbol, laurent_symbol
from tph_invert.errors import CaseUnsupported, NotInKernel
from tph_invert.operators.expr import (
    Flip,
    OperatorExpr,
    ProjP,
    ProjQ,
    add,
    compose,
    multiply,
    scale,
    toeplitz,
)
from tph_invert.operators.inverses import toeplitz_inverse_expr
from tph_invert.operators.window import apply, as_window, symbol_window

logger = logging.getLogger(__name__)

Sign = Union[str, int]


def sign_value(sign: Sign) -> int:
    """'+' / '-' / ±1 as ±1"""
    if sign in ("+", 1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"Unknown sign: {sign!r}. Available: ['+', '-']")


def _sign_label(sign: int) -> str:
    return "+" if sign > 0 else "-"


@dataclass(eq=False)
class KernelBasis:
    """Linearly independent coefficient vectors with a provenance tag each"""

    elements: List[CoeffWindow] = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)

    def add(self, element: CoeffWindow, origin: str) -> None:
        self.elements.append(element)
        self.provenance.append(origin)

    @property
    def dim(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(zip(self.elements, self.provenance))

    def matrix(self, lo: int = 0, hi: Optional[int] = None) -> np.ndarray:
        """Elements as columns over the index range [lo, hi]"""
        if not self.elements:
            return np.zeros((0, 0), dtype=complex)
        hi = max(e.hi for e in self.elements) if hi is None else hi
        return np.column_stack([e.restrict(lo, hi).coeffs for e in self.elements])

    def rank(self, tol: Optional[float] = None) -> int:
        if not self.elements:
            return 0
        tol = get_tolerances().rank if tol is None else tol
        singular = scipy.linalg.svdvals(self.matrix())
        return int(np.sum(singular > tol * singular[0])) if singular[0] > 0 else 0

    def is_independent(self, tol: Optional[float] = None) -> bool:
        return self.rank(tol) == self.dim

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "dim": self.dim,
            "elements": [e.to_dict() for e in self.elements],
            "provenance": list(self.provenance),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "KernelBasis":
        """Create from dictionary"""
        return cls(
            [CoeffWindow.from_dict(e) for e in data.get("elements", [])],
            list(data.get("provenance", [])),
        )


def projection_basis(g: RationalSymbol, sign: Sign, window: Optional[int] = None) -> KernelBasis:
    """
    Basis of im P_g^± ⊂ ker T(g) for a matching function g.

    With n = ind T(g) and g₊ the plus factor:
    - n = 2r: g₊⁻¹(t^{r−k−1} ± σ t^{r+k}), k = 0..r−1
    - n = 2r+1: g₊⁻¹(t^{r+k} ± σ t^{r−k}), k = 0..r, dropping the zero vector at k = 0

    Empty when n ≤ 0.
    """
    s = sign_value(sign)
    factors = matching_factorization(g)
    n = factors.index_n
    basis = KernelBasis()
    if n <= 0:
        logger.debug("T(g) has index %d, projection basis is empty", n)
        return basis

    inverse_plus = factors.plus.inverse()
    weight = float(s * factors.sigma)
    r, odd = divmod(n, 2)
    if odd:
        exponents = [(r + k, r - k) for k in range(r + 1)]
    else:
        exponents = [(r - k - 1, r + k) for k in range(r)]

    for k, (first, second) in enumerate(exponents):
        if first == second:
            if 1.0 + weight == 0:
                continue
            coefficients = {first: 1.0 + weight}
        else:
            coefficients = {first: 1.0, second: weight}
        element = symbol_window(inverse_plus * laurent_symbol(coefficients), window)
        basis.add(element, f"projection{_sign_label(s)}[k={k}]")
    return basis


def kernel_involution(g: RationalSymbol) -> OperatorExpr:
    """JQgP, an involution on ker T(g)"""
    return compose(Flip(), ProjQ(), multiply(g), ProjP())


def involution_residuals(
    g: RationalSymbol, f: CoeffWindow, window: Optional[int] = None
) -> Dict[str, float]:
    """For f ∈ ker T(g): sizes of T(g)·JQgP f and (JQgP)² f − f"""
    involution = kernel_involution(g)
    image = apply(involution, f, window)
    twice = apply(involution, image, window)
    return {
        "membership": apply(toeplitz(g), image, window).sup_norm(),
        "involution": twice.combine(f, -1.0).sup_norm(),
    }


def transition_expr(analysis: MatchingPairAnalysis, sign: Sign) -> OperatorExpr:
    """
    φ± = (X ∓ JQcP·X ± JQã⁻¹)/2 with X = T_r⁻¹(c)·T(ã⁻¹), for κ₁ ≥ 0.

    φ₊ maps im P_d^+ into ker(T(a)+H(b)), φ₋ maps im P_d^- into ker(T(a)−H(b)).
    """
    if analysis.kappa1 < 0:
        raise CaseUnsupported(f"transition maps need κ₁ ≥ 0, got κ₁ = {analysis.kappa1}")
    s = sign_value(sign)
    a_tilde_inv = analysis.a.tilde().inverse()
    x = compose(toeplitz_inverse_expr(analysis.c, "right"), toeplitz(a_tilde_inv))
    reflected_x = compose(kernel_involution(analysis.c), x)
    reflected_a = compose(Flip(), ProjQ(), multiply(a_tilde_inv))
    return scale(0.5, add(x, scale(-s, reflected_x), scale(s, reflected_a)))


def transition_apply(
    analysis: MatchingPairAnalysis,
    s: Union[CoeffWindow, RationalSymbol, np.ndarray],
    sign: Sign,
    window: Optional[int] = None,
) -> CoeffWindow:
    """
    φ±(s) for s ∈ ker T(d).

    Raises:
        NotInKernel: T(d)s is not numerically zero
    """
    tol = get_tolerances()
    s = as_window(s)
    residual = apply(toeplitz(analysis.d), s, window).sup_norm()
    if residual > tol.residual * max(1.0, s.sup_norm()):
        raise NotInKernel(f"T(d)s has size {residual:.3e}")
    return apply(transition_expr(analysis, sign), s, window)


def _back_shift(element: CoeffWindow, n: int) -> CoeffWindow:
    """Coefficients of t^{−n}·element, kept on the original index range"""
    shifted = CoeffWindow(element.lo - n, element.hi - n, element.coeffs, element.decay_ratio)
    return shifted.restrict(element.lo, element.hi)


def kernel(
    analysis: MatchingPairAnalysis, sign: Sign = "+", window: Optional[int] = None
) -> KernelBasis:
    """Basis of ker(T(a) + H(b)) (sign '+') or ker(T(a) − H(b)) (sign '-')"""
    s = sign_value(sign)
    if analysis.kappa1 >= 0:
        basis = KernelBasis()
        d_basis = projection_basis(analysis.d, s, window)
        if d_basis.dim:
            transition = transition_expr(analysis, s)
            for element, origin in d_basis:
                basis.add(apply(transition, element, window), f"transition:{origin}")
        for element, origin in projection_basis(analysis.c, -s, window):
            basis.add(element, f"c:{origin}")
        logger.debug("Kernel (%s) of dimension %d", _sign_label(s), basis.dim)
        return basis

    n = (1 - analysis.kappa1) // 2
    lifted = kernel(analysis.shifted(n), s, window)
    if not lifted.dim:
        return KernelBasis()

    tol = get_tolerances()
    constraints = np.array(
        [[element.coefficient(j) for element in lifted.elements] for j in range(n)],
        dtype=complex,
    )
    null = scipy.linalg.null_space(constraints, rcond=tol.rank)
    basis = KernelBasis()
    lo = min(e.lo for e in lifted.elements)
    hi = max(e.hi for e in lifted.elements)
    for column in null.T:
        combined = CoeffWindow(lo, hi, lifted.matrix(lo, hi) @ column)
        basis.add(_back_shift(combined, n), f"shift-constrained[n={n}]")
    logger.debug("Kernel (%s) via lift by %d: dimension %d", _sign_label(s), n, basis.dim)
    return basis


def cokernel(
    analysis: MatchingPairAnalysis, sign: Sign = "+", window: Optional[int] = None
) -> KernelBasis:
    """Basis of the cokernel, as the kernel of the adjoint pair (ā, conj(b̃))"""
    adjoint = analysis.adjoint()
    if adjoint.signatures != (analysis.sigma_d, analysis.sigma_c):
        logger.warning(
            "Adjoint signatures %s do not mirror %s", adjoint.signatures, analysis.signatures
        )
    basis = kernel(adjoint, sign, window)
    basis.provenance = [f"adjoint:{origin}" for origin in basis.provenance]
    return basis
