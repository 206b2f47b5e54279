"""Kernels, defect numbers and invertibility decisions"""

from tph_invert.classify.decision import (
    ClassificationReport,
    InvertibilityStatus,
    coburn_simonenko_forms,
    decide,
    match_sufficient_clause,
    necessary_conditions,
)
from tph_invert.classify.defects import DefectEstimate, be_matrix, defect_numbers_be, rho_symbol
from tph_invert.classify.kernels import (
    KernelBasis,
    cokernel,
    involution_residuals,
    kernel,
    kernel_involution,
    projection_basis,
    transition_apply,
    transition_expr,
)
from tph_invert.classify.omega import WnResult, omega_zero, wn_matrix

__all__ = [
    "KernelBasis",
    "projection_basis",
    "transition_expr",
    "transition_apply",
    "kernel",
    "cokernel",
    "kernel_involution",
    "involution_residuals",
    "omega_zero",
    "wn_matrix",
    "WnResult",
    "DefectEstimate",
    "defect_numbers_be",
    "rho_symbol",
    "be_matrix",
    "InvertibilityStatus",
    "ClassificationReport",
    "decide",
    "match_sufficient_clause",
    "necessary_conditions",
    "coburn_simonenko_forms",
]
