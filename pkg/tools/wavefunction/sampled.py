"""Wavefunctions sampled on uniform grids."""

import logging
from dataclasses import dataclass

import numpy as np

from ..core.errors import DomainError
from ..core.grid import PositionGrid
from ..core.numerics import real_sum
from .states import WavefunctionSpec, evaluate, peak_positions

logger = logging.getLogger(__name__)

COVERAGE_WIDTHS = 8.0
REFERENCE_WIDTHS = 12.0
REFERENCE_SPACING = 1e-3


@dataclass(frozen=True)
class SampledWavefunction:
    """Complex amplitudes at the centers of a uniform grid."""

    grid: PositionGrid
    amps: np.ndarray

    def __post_init__(self) -> None:
        if self.amps.shape != (self.grid.count,):
            raise DomainError(
                f"amplitude count {self.amps.shape} does not match grid count {self.grid.count}"
            )

    @property
    def x(self) -> np.ndarray:
        return self.grid.centers

    def probabilities(self) -> np.ndarray:
        """dx |psi_k|^2 per cell."""
        return self.grid.dx * np.abs(self.amps) ** 2

    def norm(self) -> float:
        return real_sum(self.probabilities())

    def normalized(self) -> "SampledWavefunction":
        norm = self.norm()
        if norm == 0:
            raise DomainError("cannot normalize a zero wavefunction")
        return SampledWavefunction(self.grid, self.amps / np.sqrt(norm))

    def require_normalized(self, tol: float = 1e-9) -> None:
        norm = self.norm()
        if abs(norm - 1.0) > tol:
            raise DomainError(f"wavefunction is not normalized: sum dx |psi|^2 = {norm:.12f}")


def sample(
    spec: WavefunctionSpec, grid: PositionGrid, coverage: float = COVERAGE_WIDTHS
) -> SampledWavefunction:
    """
    Sample spec at the grid centers and renormalize so that sum dx |psi|^2 = 1.

    The grid must reach coverage widths b beyond the outermost peak on both sides.
    """
    peaks = peak_positions(spec)
    low, high = min(peaks) - coverage * spec.b, max(peaks) + coverage * spec.b
    slack = 1e-9 * max(1.0, abs(low), abs(high))
    if grid.x0 > low + slack or grid.last_center < high - slack:
        raise DomainError(
            f"grid [{grid.x0:g}, {grid.last_center:g}] does not cover [{low:g}, {high:g}]"
        )
    return SampledWavefunction(grid, evaluate(spec, grid.centers)).normalized()


def reference_grid(spec: WavefunctionSpec) -> PositionGrid:
    """Fine grid with spacing 1e-3 b reaching at least 12 b and 8 b past the peaks."""
    outer = max(abs(p) for p in peak_positions(spec))
    half_width = max(REFERENCE_WIDTHS * spec.b, outer + COVERAGE_WIDTHS * spec.b)
    return PositionGrid.symmetric(REFERENCE_SPACING * spec.b, half_width)


def wavefunction_rows(psi: SampledWavefunction) -> list[dict[str, float]]:
    """Rows x, re, im, prob with prob the density |psi|^2."""
    density = np.abs(psi.amps) ** 2
    return [
        {"x": float(x), "re": float(a.real), "im": float(a.imag), "prob": float(d)}
        for x, a, d in zip(psi.x, psi.amps, density)
    ]
