"""Schmidt separability of a bipartite state seen through coarse detectors."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.errors import DomainError
from ..core.grid import PositionGrid
from ..wavefunction import SampledWavefunction, WavefunctionKind, WavefunctionSpec, sample
from .detectors import DetectorGrid, bin_weights


@dataclass(frozen=True)
class SchmidtPair:
    """Weights p_i with mode families Phi_i and Theta_i of sum_i sqrt(p_i) Phi_i Theta_i."""

    weights: np.ndarray
    phis: list[SampledWavefunction]
    thetas: list[SampledWavefunction]

    def __post_init__(self) -> None:
        if not (len(self.weights) == len(self.phis) == len(self.thetas)):
            raise DomainError("weights and mode families must have equal length")
        if np.any(self.weights < 0) or abs(float(np.sum(self.weights)) - 1.0) > 1e-12:
            raise DomainError("Schmidt weights must be non-negative and sum to 1")
        grids = [psi.grid for psi in (*self.phis, *self.thetas)]
        if any(not g.matches(grids[0]) for g in grids[1:]):
            raise DomainError("all Schmidt modes must share one fine grid")

    @property
    def grid(self) -> PositionGrid:
        return self.phis[0].grid


@dataclass(frozen=True)
class SeparabilityReport:
    max_offdiag_gram: float
    joint_distribution_defect: float


def schmidt_pair_from_number_states(
    weights: Sequence[float], b: float, grid: PositionGrid
) -> SchmidtPair:
    """Schmidt state whose i-th modes are the number states psi_i on both sides."""
    modes = [
        sample(WavefunctionSpec(WavefunctionKind.NUMBER, b=b, n=i), grid)
        for i in range(len(weights))
    ]
    return SchmidtPair(weights=np.asarray(weights, dtype=float), phis=modes, thetas=list(modes))


def _binned_products(modes: list[SampledWavefunction], detectors: DetectorGrid) -> np.ndarray:
    """B[i, j, k] = sum over detector k of dx conj(mode_i) mode_j."""
    count = len(modes)
    fine = modes[0].grid
    products = np.empty((count, count, detectors.count), dtype=complex)
    for i in range(count):
        for j in range(count):
            cell = fine.dx * np.conj(modes[i].amps) * modes[j].amps
            products[i, j] = bin_weights(cell.real, fine, detectors) + 1j * bin_weights(
                cell.imag, fine, detectors
            )
    return products


def schmidt_separability(pair: SchmidtPair, detectors: DetectorGrid) -> SeparabilityReport:
    """
    Off-diagonal binned products and the joint-distribution defect.

    The defect is the largest |P_pure(k, k') - P_mixture(k, k')|, which equals the
    interference sum over i != j of sqrt(p_i p_j) B^Phi_ij(k) B^Theta_ij(k').
    """
    for psi in (*pair.phis, *pair.thetas):
        if abs(psi.norm() - 1.0) > 1e-9:
            raise DomainError(f"Schmidt mode not normalized (norm {psi.norm():.12f})")
    count = len(pair.weights)
    if count < 2:
        return SeparabilityReport(0.0, 0.0)

    b_phi = _binned_products(pair.phis, detectors)
    b_theta = _binned_products(pair.thetas, detectors)
    off = ~np.eye(count, dtype=bool)
    max_offdiag = float(max(np.max(np.abs(b_phi[off])), np.max(np.abs(b_theta[off]))))

    root = np.sqrt(pair.weights)
    coupling = np.outer(root, root) * off
    interference = np.einsum("ij,ijk,ijl->kl", coupling, b_phi, b_theta)
    return SeparabilityReport(
        max_offdiag_gram=max_offdiag,
        joint_distribution_defect=float(np.max(np.abs(interference))),
    )
