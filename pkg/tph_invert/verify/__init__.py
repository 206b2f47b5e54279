"""Dense-section oracles for the constructive results"""

from tph_invert.verify.oracle import (
    GAP_RATIO,
    OracleReport,
    SweepReport,
    convergence_sweep,
    count_small,
    hankel_identity_expr,
    random_windows,
    residual,
    svd_defects,
    widom_identity_expr,
)

__all__ = [
    "GAP_RATIO",
    "OracleReport",
    "SweepReport",
    "svd_defects",
    "count_small",
    "residual",
    "widom_identity_expr",
    "hankel_identity_expr",
    "random_windows",
    "convergence_sweep",
]
