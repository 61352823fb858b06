"""Classical and closed-form quantum dynamics."""

from .classical import (
    TrajectoryPoint,
    classical_frequency,
    classical_phase,
    classical_trajectory,
    hamilton_rhs,
    integrate_classical,
    rotate,
)
from .quantum import (
    HbarScanRow,
    QuasiDeterminism,
    TranscriptionComparison,
    compare_transcriptions,
    hbar_scan,
    quantum_expectation,
    quantum_phase_and_amplitude,
    quasi_determinism_conditions,
    trajectory_rows,
)

__all__ = [
    "HbarScanRow",
    "QuasiDeterminism",
    "TrajectoryPoint",
    "TranscriptionComparison",
    "classical_frequency",
    "classical_phase",
    "classical_trajectory",
    "compare_transcriptions",
    "hamilton_rhs",
    "hbar_scan",
    "integrate_classical",
    "quantum_expectation",
    "quantum_phase_and_amplitude",
    "quasi_determinism_conditions",
    "rotate",
    "trajectory_rows",
]
