"""Resolution-aware measurement: detectors, discrete operators, Newton and Schmidt checks."""

from .detectors import (
    DEFAULT_RESOLUTION_EPS,
    CoarseDistribution,
    DetectorGrid,
    bin,
    bin_weights,
    classical_position,
    coarse_amplitudes,
    detectors_for,
    fig2_window,
    fringe_visibility,
    incoherent_reference,
    mass_in_adjacent,
    sample_at_centers,
)
from .newton import (
    COARSE_NEWTON_TOLERANCE_BINS,
    NewtonCheck,
    Potential,
    coarse_newton_deviation,
    coherent_trajectory,
    ehrenfest_residual,
    expectation_position,
    harmonic,
    mean_force_gradient,
    newton_trajectory,
)
from .operators import commutator_indicator, discrete_inner, discrete_momentum, forward_difference
from .schmidt import (
    SchmidtPair,
    SeparabilityReport,
    schmidt_pair_from_number_states,
    schmidt_separability,
)
from .sweeps import (
    FIG2_PANELS,
    EhrenfestRun,
    Fig2Panel,
    commutator_sweep,
    ehrenfest_run,
    fig2_panel,
    fig2_wavefunction,
    gaussian_indicator_estimate,
    gaussian_state,
    schmidt_sweep,
)

__all__ = [
    "COARSE_NEWTON_TOLERANCE_BINS",
    "DEFAULT_RESOLUTION_EPS",
    "FIG2_PANELS",
    "CoarseDistribution",
    "DetectorGrid",
    "EhrenfestRun",
    "Fig2Panel",
    "NewtonCheck",
    "Potential",
    "SchmidtPair",
    "SeparabilityReport",
    "bin",
    "bin_weights",
    "classical_position",
    "coarse_amplitudes",
    "coarse_newton_deviation",
    "coherent_trajectory",
    "commutator_indicator",
    "commutator_sweep",
    "detectors_for",
    "discrete_inner",
    "discrete_momentum",
    "ehrenfest_residual",
    "ehrenfest_run",
    "expectation_position",
    "fig2_panel",
    "fig2_wavefunction",
    "fig2_window",
    "forward_difference",
    "fringe_visibility",
    "gaussian_indicator_estimate",
    "gaussian_state",
    "harmonic",
    "incoherent_reference",
    "mass_in_adjacent",
    "mean_force_gradient",
    "newton_trajectory",
    "sample_at_centers",
    "schmidt_pair_from_number_states",
    "schmidt_separability",
    "schmidt_sweep",
]
