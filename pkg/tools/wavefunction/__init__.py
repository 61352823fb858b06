"""Position-space wavefunctions and their sampling."""

from .sampled import SampledWavefunction, reference_grid, sample, wavefunction_rows
from .states import (
    WavefunctionKind,
    WavefunctionSpec,
    cat_normalization,
    cat_xrep,
    coherent_xrep,
    component_overlap,
    evaluate,
    incoherent_xrep,
    number_xrep,
    peak_positions,
)

__all__ = [
    "SampledWavefunction",
    "WavefunctionKind",
    "WavefunctionSpec",
    "cat_normalization",
    "cat_xrep",
    "coherent_xrep",
    "component_overlap",
    "evaluate",
    "incoherent_xrep",
    "number_xrep",
    "peak_positions",
    "reference_grid",
    "sample",
    "wavefunction_rows",
]
