"""Truncated Fock-space oracle."""

from .basis import (
    DEFAULT_TAIL_EPS,
    coherent_coefficients,
    mode_cutoffs,
    poisson_weights,
    truncation_bound,
)
from .oracle import (
    Observables,
    density_operator_phase,
    dump_probabilities,
    evolve,
    initial_state,
    ladder_expectation,
    level_frequencies,
    observables,
    reduce,
)
from .states import DensityMatrix, JointFockState, linear_entropy, purity

__all__ = [
    "DEFAULT_TAIL_EPS",
    "DensityMatrix",
    "JointFockState",
    "Observables",
    "coherent_coefficients",
    "density_operator_phase",
    "dump_probabilities",
    "evolve",
    "initial_state",
    "ladder_expectation",
    "level_frequencies",
    "linear_entropy",
    "mode_cutoffs",
    "observables",
    "poisson_weights",
    "purity",
    "reduce",
    "truncation_bound",
]
