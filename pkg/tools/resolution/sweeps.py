"""Resolution sweeps: commutator indicator and Schmidt defect against detector width."""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..core.grid import PositionGrid, odd_refinement
from ..wavefunction import SampledWavefunction, WavefunctionKind, WavefunctionSpec, sample
from .detectors import (
    CoarseDistribution,
    bin,
    detectors_for,
    fig2_window,
    fringe_visibility,
    incoherent_reference,
)
from .newton import (
    coarse_newton_deviation,
    coherent_trajectory,
    ehrenfest_residual,
    expectation_position,
    harmonic,
)
from .operators import commutator_indicator
from .schmidt import schmidt_pair_from_number_states, schmidt_separability

logger = logging.getLogger(__name__)

FIG2_WAVELENGTH = 0.2
FIG2_PANELS: dict[str, tuple[float, float]] = {
    "a": (1.0, 0.01),
    "b": (1.0, 0.2),
    "c": (1.0, 0.5),
    "d": (3.0, 0.01),
    "e": (3.0, 0.5),
    "f": (3.0, 3.5),
}
FINE_SPACING = 1e-3
HALF_WIDTH = 12.0


@dataclass(frozen=True)
class Fig2Panel:
    """One panel: cat separation q and detector width dx, both in units of b."""

    label: str
    q: float
    dx: float
    distribution: CoarseDistribution
    reference: CoarseDistribution
    visibility: float


def fig2_panel(label: str, q: float, dx: float, b: float = 1.0) -> Fig2Panel:
    """Bin the cat state G(x) at resolution dx and measure its fringe visibility."""
    spec = WavefunctionSpec(WavefunctionKind.CAT, b=b, q=q * b, lam=FIG2_WAVELENGTH * b)
    detectors = detectors_for(dx * b, HALF_WIDTH * b)
    fine = detectors.refined(odd_refinement(dx * b, FINE_SPACING * b))
    distribution = bin(sample(spec, fine), detectors)
    reference = incoherent_reference(spec, fine, detectors)
    visibility = fringe_visibility(distribution, fig2_window(q * b, b, dx * b), reference)
    logger.debug("fig2 panel %s: %d detectors, V=%.4f", label, detectors.count, visibility)
    return Fig2Panel(label, q, dx, distribution, reference, visibility)


def fig2_wavefunction(q: float, b: float = 1.0, spacing: float = 1e-2) -> SampledWavefunction:
    """The cat state G(x) behind the panels with separation q, on a grid of +-HALF_WIDTH b."""
    spec = WavefunctionSpec(WavefunctionKind.CAT, b=b, q=q * b, lam=FIG2_WAVELENGTH * b)
    return sample(spec, PositionGrid.symmetric(spacing * b, HALF_WIDTH * b))


def gaussian_indicator_estimate(dx: float, sigma: float) -> float:
    """exp(-dx^2 / 8 sigma^2), the overlap of a Gaussian with itself shifted by dx."""
    return math.exp(-(dx * dx) / (8.0 * sigma * sigma))


def gaussian_state(sigma: float, dx: float, offset: float = 0.25) -> SampledWavefunction:
    """
    Gaussian with |psi|^2 of standard deviation sigma, point-sampled at x_k = (k + offset) dx.

    At offset 1/4 the normalization sum and the nearest-neighbour sum run over mirror-image
    point sets, so the indicator equals exp(-dx^2 / 8 sigma^2) for every dx.
    """
    b = math.sqrt(2.0) * sigma
    spec = WavefunctionSpec(WavefunctionKind.COHERENT, b=b)
    centered = detectors_for(dx, 8.0 * b + dx)
    grid = PositionGrid(centered.x0 + offset * dx, dx, centered.count)
    return sample(spec, grid)


def commutator_sweep(ratios: Sequence[float], sigma: float = 1.0) -> list[dict[str, float]]:
    """Rows dx, indicator for a Gaussian of width sigma sampled at each dx = ratio sigma."""
    rows = []
    for ratio in ratios:
        dx = ratio * sigma
        rows.append({"dx": dx, "indicator": commutator_indicator(gaussian_state(sigma, dx))})
    return rows


def schmidt_sweep(
    resolutions: Sequence[float],
    b: float = 1.0,
    weights: Sequence[float] = (0.5, 0.5),
    half_width: float = 15.0,
    fine_spacing: float = 1e-2,
) -> list[dict[str, float]]:
    """Rows dx, max_offdiag, defect for a number-state Schmidt pair at each resolution."""
    rows = []
    for dx in resolutions:
        detectors = detectors_for(dx * b, half_width * b)
        fine = detectors.refined(odd_refinement(dx * b, fine_spacing * b))
        pair = schmidt_pair_from_number_states(weights, b, fine)
        report = schmidt_separability(pair, detectors)
        rows.append(
            {
                "dx": dx * b,
                "max_offdiag": report.max_offdiag_gram,
                "defect": report.joint_distribution_defect,
            }
        )
    return rows


@dataclass(frozen=True)
class EhrenfestRun:
    times: np.ndarray
    mean_x: np.ndarray
    residual: float
    coarse_times: np.ndarray
    coarse_positions: list[Optional[float]]
    newton: np.ndarray
    max_deviation_bins: float
    resolved_fraction: float


def ehrenfest_run(
    mass: float,
    omega: float,
    hbar: float,
    amplitude: float = 2.0,
    points: int = 201,
    coarse_dx: float = 10.0,
    coarse_amplitude: float = 20.0,
    eps: float = 0.05,
) -> EhrenfestRun:
    """
    Fine-grid Ehrenfest residual and the coarse Newton check over one period.

    Amplitudes and the coarse detector width are in units of b = sqrt(hbar / m omega).
    """
    b = math.sqrt(hbar / (mass * omega))
    period = 2.0 * math.pi / omega
    times = np.linspace(0.0, period, points)
    potential = harmonic(mass, omega)

    fine = detectors_for(FINE_SPACING * b, (amplitude + HALF_WIDTH) * b)
    states = coherent_trajectory(mass, omega, hbar, amplitude * b, times, fine)
    residual = ehrenfest_residual(potential, states, times)
    mean_x = np.array([expectation_position(psi) for psi in states])

    detectors = detectors_for(coarse_dx * b, (coarse_amplitude + 2 * coarse_dx) * b)
    coarse_fine = detectors.refined(odd_refinement(coarse_dx * b, 1e-2 * b))
    coarse_times = np.linspace(0.0, period, 41)
    coarse_states = coherent_trajectory(
        mass, omega, hbar, coarse_amplitude * b, coarse_times, coarse_fine
    )
    check = coarse_newton_deviation(
        coarse_states, coarse_times, detectors, potential, coarse_amplitude * b, 0.0, eps
    )
    return EhrenfestRun(
        times=times,
        mean_x=mean_x,
        residual=residual,
        coarse_times=coarse_times,
        coarse_positions=check.positions,
        newton=check.newton,
        max_deviation_bins=check.max_deviation_bins,
        resolved_fraction=check.resolved_fraction,
    )
