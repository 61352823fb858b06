"""Fractional revivals and generalized cat states."""

from .cat import (
    MAX_DENOMINATOR,
    CatDecomposition,
    cat_coefficients,
    cat_decomposition,
    cat_norm,
    cat_overlap,
    cat_state,
    cat_state_fidelity,
    component_count,
    parseval_defect,
    reconstruction_residual,
    revival_time,
)
from .mixture import (
    FALLBACK_COUPLING,
    MixtureReport,
    mixture_convergence,
    offdiagonal_bound,
    revival_rows,
)

__all__ = [
    "FALLBACK_COUPLING",
    "MAX_DENOMINATOR",
    "CatDecomposition",
    "MixtureReport",
    "cat_coefficients",
    "cat_decomposition",
    "cat_norm",
    "cat_overlap",
    "cat_state",
    "cat_state_fidelity",
    "component_count",
    "mixture_convergence",
    "offdiagonal_bound",
    "parseval_defect",
    "reconstruction_residual",
    "revival_rows",
    "revival_time",
]
