"""Uniform position grids shared by sampled wavefunctions and detectors."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Relative tolerance for deciding that two grids share spacing or offsets.
ALIGN_RTOL = 1e-6


@dataclass(frozen=True)
class PositionGrid:
    """Cells of width dx whose centers are x0, x0 + dx, ..., x0 + (count-1) dx."""

    x0: float
    dx: float
    count: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x0) and math.isfinite(self.dx)):
            raise DomainError("grid origin and spacing must be finite")
        if self.dx <= 0:
            raise DomainError(f"grid spacing must be positive, got {self.dx}")
        if self.count < 1:
            raise DomainError(f"grid needs at least one cell, got {self.count}")

    @classmethod
    def symmetric(cls, dx: float, half_width: float) -> "PositionGrid":
        """Odd-count grid centered on x = 0 whose centers reach at least half_width."""
        if dx <= 0 or half_width < 0:
            raise DomainError("symmetric grid needs dx > 0 and half_width >= 0")
        half = math.ceil(half_width / dx - 1e-9)
        return cls(x0=-half * dx, dx=dx, count=2 * half + 1)

    @property
    def centers(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.count)

    @property
    def lower_edge(self) -> float:
        return self.x0 - 0.5 * self.dx

    @property
    def upper_edge(self) -> float:
        return self.x0 + (self.count - 0.5) * self.dx

    @property
    def last_center(self) -> float:
        return self.x0 + (self.count - 1) * self.dx

    def refined(self, cells_per_bin: int) -> "PositionGrid":
        """Fine grid with an odd number of cells per cell of this grid.

        Every edge of this grid is a fine-cell edge and every center of this
        grid is a fine sample point.
        """
        if cells_per_bin < 1 or cells_per_bin % 2 == 0:
            raise DomainError(f"cells_per_bin must be odd and positive, got {cells_per_bin}")
        fine_dx = self.dx / cells_per_bin
        return PositionGrid(
            x0=self.x0 - (cells_per_bin - 1) // 2 * fine_dx,
            dx=fine_dx,
            count=self.count * cells_per_bin,
        )

    def matches(self, other: "PositionGrid") -> bool:
        """True when both grids have the same cells."""
        return (
            self.count == other.count
            and math.isclose(self.dx, other.dx, rel_tol=1e-12)
            and abs(self.x0 - other.x0) <= 1e-12 * max(1.0, abs(self.x0), self.dx)
        )

    def shifted(self, cells: int) -> "PositionGrid":
        return PositionGrid(self.x0 + cells * self.dx, self.dx, self.count)


def odd_refinement(coarse_dx: float, target_fine_dx: float) -> int:
    """Smallest odd cell count per bin whose fine spacing is at most target_fine_dx."""
    if coarse_dx <= 0 or target_fine_dx <= 0:
        raise DomainError("spacings must be positive")
    cells = max(1, math.ceil(coarse_dx / target_fine_dx - 1e-9))
    return cells if cells % 2 == 1 else cells + 1
