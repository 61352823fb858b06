"""Rectangular detectors: binning, classical position and fringe visibility."""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.errors import DomainError, check_invariant
from ..core.grid import ALIGN_RTOL, PositionGrid
from ..core.numerics import real_sum
from ..wavefunction import SampledWavefunction, WavefunctionSpec, evaluate, incoherent_xrep

logger = logging.getLogger(__name__)

# Detectors are grid cells; the name follows the measurement picture.
DetectorGrid = PositionGrid

DEFAULT_RESOLUTION_EPS = 0.05


@dataclass(frozen=True)
class CoarseDistribution:
    """Probability P_k collected by each detector, attributed to its center."""

    grid: DetectorGrid
    probs: np.ndarray

    def __post_init__(self) -> None:
        check_invariant(
            self.probs.shape == (self.grid.count,),
            "resolution",
            "one probability per detector",
            f"{self.probs.shape} vs {self.grid.count}",
        )
        check_invariant(
            bool(np.all(self.probs >= 0)), "resolution", "non-negative P_k", "negative mass"
        )
        total = real_sum(self.probs)
        check_invariant(
            abs(total - 1.0) <= 1e-9, "resolution", "sum P_k = 1", f"sum = {total:.15f}"
        )

    @property
    def density(self) -> np.ndarray:
        return self.probs / self.grid.dx

    def rows(self) -> list[dict[str, float]]:
        """Rows x_k, P_k, density."""
        return [
            {"x_k": float(x), "P_k": float(p), "density": float(d)}
            for x, p, d in zip(self.grid.centers, self.probs, self.density)
        ]


def _detector_index(fine: PositionGrid, grid: DetectorGrid) -> np.ndarray:
    """Detector index of every fine cell; raises when the grids are not aligned."""
    ratio = grid.dx / fine.dx
    cells = round(ratio)
    if cells < 1 or abs(ratio - cells) > ALIGN_RTOL * ratio:
        raise DomainError(f"detector width {grid.dx} is not a multiple of fine spacing {fine.dx}")
    offset = (fine.lower_edge - grid.lower_edge) / fine.dx
    start = round(offset)
    if abs(offset - start) > ALIGN_RTOL * max(1.0, abs(offset)):
        raise DomainError("fine cells straddle detector edges")
    if start < 0 or start + fine.count > cells * grid.count:
        raise DomainError("fine grid extends beyond the detector grid")
    return (start + np.arange(fine.count)) // cells


def bin_weights(weights: np.ndarray, fine: PositionGrid, grid: DetectorGrid) -> np.ndarray:
    """Sum per-cell weights of an aligned fine grid into detectors."""
    index = _detector_index(fine, grid)
    return np.bincount(index, weights=weights, minlength=grid.count)


def bin(psi_fine: SampledWavefunction, grid: DetectorGrid) -> CoarseDistribution:
    """P_k = sum of dx_fine |psi|^2 over the fine cells inside detector k."""
    probs = bin_weights(psi_fine.probabilities(), psi_fine.grid, grid)
    return CoarseDistribution(grid=grid, probs=probs)


def incoherent_reference(
    spec: WavefunctionSpec, fine: PositionGrid, grid: DetectorGrid
) -> CoarseDistribution:
    """Binned equal-weight mixture of the two cat components (no interference)."""
    weights = fine.dx * incoherent_xrep(spec, fine.centers)
    weights = weights / real_sum(weights)
    return CoarseDistribution(grid=grid, probs=bin_weights(weights, fine, grid))


def sample_at_centers(spec: WavefunctionSpec, grid: DetectorGrid) -> CoarseDistribution:
    """Point-sampled detectors: P_k = dx |psi(x_k)|^2, renormalized over the detectors."""
    weights = grid.dx * np.abs(evaluate(spec, grid.centers)) ** 2
    total = real_sum(weights)
    if total == 0:
        raise DomainError("state has no weight at the detector centers")
    return CoarseDistribution(grid=grid, probs=weights / total)


def coarse_amplitudes(psi_fine: SampledWavefunction, grid: DetectorGrid) -> SampledWavefunction:
    """sqrt(P_k / dx) with the phase of the fine sample nearest each detector center."""
    probs = bin(psi_fine, grid).probs
    nearest = np.rint((grid.centers - psi_fine.grid.x0) / psi_fine.grid.dx).astype(int)
    nearest = np.clip(nearest, 0, psi_fine.grid.count - 1)
    phases = np.exp(1j * np.angle(psi_fine.amps[nearest]))
    return SampledWavefunction(grid, np.sqrt(probs / grid.dx) * phases)


def classical_position(
    dist: CoarseDistribution, eps: float = DEFAULT_RESOLUTION_EPS
) -> Optional[float]:
    """Center of the dominant detector if it holds at least 1 - eps of the mass, else None."""
    if not 0 < eps < 1:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    k = int(np.argmax(dist.probs))
    if dist.probs[k] >= (1.0 - eps) * real_sum(dist.probs):
        return float(dist.grid.centers[k])
    return None


def fringe_visibility(
    dist: CoarseDistribution,
    window: tuple[float, float],
    reference: Optional[CoarseDistribution] = None,
    reference_floor: float = 1e-6,
) -> float:
    """
    Michelson contrast (max - min) / (max + min) over detectors centered in window.

    With a reference distribution on the same detectors the contrast is taken of
    P_k / P_k^ref, which removes the envelope; detectors whose reference mass is
    below reference_floor times the largest in-window reference mass are skipped.
    """
    low, high = window
    if not low < high:
        raise DomainError(f"degenerate window {window}")
    centers = dist.grid.centers
    tol = 1e-9 * dist.grid.dx
    inside = (centers >= low - tol) & (centers <= high + tol)

    values = dist.probs
    if reference is not None:
        if not reference.grid.matches(dist.grid):
            raise DomainError("reference distribution must use the same detectors")
        ref = reference.probs
        ref_max = float(np.max(ref[inside])) if np.any(inside) else 0.0
        inside &= ref > reference_floor * ref_max
        values = np.divide(values, ref, out=np.zeros_like(values), where=ref > 0)

    if np.count_nonzero(inside) < 2:
        raise DomainError(f"window {window} holds fewer than two usable detectors")
    selected = values[inside]
    top, bottom = float(np.max(selected)), float(np.min(selected))
    if top + bottom == 0:
        return 0.0
    return (top - bottom) / (top + bottom)


def fig2_window(q: float, b: float, dx: float) -> tuple[float, float]:
    """[-(q/2 + b), q/2 + b], widened to one detector width so it always holds two detectors."""
    half = max(abs(q) / 2 + b, dx)
    return (-half, half)


def mass_in_adjacent(dist: CoarseDistribution, width: int) -> float:
    """Largest probability carried by `width` adjacent detectors."""
    if width < 1:
        raise DomainError("width must be positive")
    if width >= dist.grid.count:
        return real_sum(dist.probs)
    window = np.convolve(dist.probs, np.ones(width), mode="valid")
    return float(np.max(window))


def detectors_for(dx: float, half_width: float) -> DetectorGrid:
    """Symmetric detector grid with a detector centered on x = 0."""
    if not (math.isfinite(dx) and dx > 0):
        raise DomainError(f"detector width must be positive, got {dx}")
    return PositionGrid.symmetric(dx, half_width)
