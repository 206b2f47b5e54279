"""Operator expressions, their evaluation and the inverse formulas"""

from tph_invert.operators.dense import DenseOperator, truncate
from tph_invert.operators.expr import (
    Compose,
    Flip,
    Hankel,
    Identity,
    MulSymbol,
    OperatorExpr,
    Power,
    ProjP,
    ProjQ,
    Scale,
    Sum,
    Toeplitz,
    add,
    coefficient_extractor,
    compose,
    expr_from_dict,
    hankel,
    multiply,
    scale,
    toeplitz,
)
from tph_invert.operators.inverses import (
    Clause,
    build_inverse,
    generalized_inverse_expr,
    left_inverse_expr,
    right_inverse_expr,
    shift_correction_inverse_expr,
    signature_ix_inverse_expr,
    toeplitz_inverse_expr,
)
from tph_invert.operators.window import apply, required_window, symbol_window

__all__ = [
    "OperatorExpr",
    "Identity",
    "Scale",
    "Compose",
    "Sum",
    "Toeplitz",
    "Hankel",
    "MulSymbol",
    "ProjP",
    "ProjQ",
    "Flip",
    "Power",
    "compose",
    "add",
    "scale",
    "toeplitz",
    "hankel",
    "multiply",
    "coefficient_extractor",
    "expr_from_dict",
    "apply",
    "required_window",
    "symbol_window",
    "DenseOperator",
    "truncate",
    "Clause",
    "toeplitz_inverse_expr",
    "right_inverse_expr",
    "left_inverse_expr",
    "generalized_inverse_expr",
    "signature_ix_inverse_expr",
    "shift_correction_inverse_expr",
    "build_inverse",
]
