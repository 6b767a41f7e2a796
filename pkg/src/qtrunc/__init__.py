"""Exact-arithmetic truncated q-series, partition statistics, and identity
verification suites."""

from .bijections import (
    IndexedPartition,
    phi,
    psi,
    theorem12_check,
    verify_phi,
    verify_psi,
)
from .partitions import (
    Partition,
    divisor_diff,
    enumerate_partitions,
    gpn,
    jacobi_cube,
    m_k,
    p_euler,
    product_counts,
    set_a,
    set_a_size,
    t_counts,
)
from .qseries import (
    IntSeries,
    bilateral_theta,
    lambert_diff,
    nonneg_from,
    pochhammer,
    triple_product,
)
from .report import CheckReport, Violation
from .trunclab import (
    TruncParams,
    am_check,
    am_lhs,
    am_rhs,
    conjecture_check,
    conjecture_series,
    corollary14_report,
    d_series,
    decomposition_check,
    f_series,
    gz_check,
    gz_series,
    i_series,
    i_series_closed,
    jacobi_cube_check,
    mao_check,
    mk_identity_check,
    pentagonal_check,
    q_binomial,
    recurrence_check,
    theorem13_check,
    theorem13_series,
    wang_yee_check,
)

__all__ = [
    "CheckReport",
    "IndexedPartition",
    "IntSeries",
    "Partition",
    "TruncParams",
    "Violation",
    "am_check",
    "am_lhs",
    "am_rhs",
    "bilateral_theta",
    "conjecture_check",
    "conjecture_series",
    "corollary14_report",
    "d_series",
    "decomposition_check",
    "divisor_diff",
    "enumerate_partitions",
    "f_series",
    "gpn",
    "gz_check",
    "gz_series",
    "i_series",
    "i_series_closed",
    "jacobi_cube",
    "jacobi_cube_check",
    "lambert_diff",
    "m_k",
    "mao_check",
    "mk_identity_check",
    "nonneg_from",
    "p_euler",
    "pentagonal_check",
    "phi",
    "pochhammer",
    "product_counts",
    "psi",
    "q_binomial",
    "recurrence_check",
    "set_a",
    "set_a_size",
    "t_counts",
    "theorem12_check",
    "theorem13_check",
    "theorem13_series",
    "triple_product",
    "verify_phi",
    "verify_psi",
    "wang_yee_check",
]

__version__ = "0.1.0"
