"""Joint two-mode states and reduced density matrices."""

from dataclasses import dataclass

import numpy as np

from ..core.errors import check_invariant
from ..core.numerics import real_sum

# Slack above 1 allowed for rounding in norms and traces.
ROUNDING_SLACK = 1e-12


@dataclass(frozen=True)
class JointFockState:
    """Truncated coefficients c[n, m] of a two-mode pure state at time t."""

    coeffs: np.ndarray
    t: float
    eps_tail: float

    def __post_init__(self) -> None:
        check_invariant(
            self.coeffs.ndim == 2,
            "fockspace",
            "shape",
            f"coeffs must be 2-D, got {self.coeffs.shape}",
        )
        norm = self.norm()
        check_invariant(
            1.0 - self.eps_tail - ROUNDING_SLACK <= norm <= 1.0 + ROUNDING_SLACK,
            "fockspace",
            "truncated norm",
            f"sum |c|^2 = {norm!r} outside [1 - {self.eps_tail}, 1]",
        )

    @property
    def N1(self) -> int:
        return int(self.coeffs.shape[0])

    @property
    def N2(self) -> int:
        return int(self.coeffs.shape[1])

    def probabilities(self) -> np.ndarray:
        return np.abs(self.coeffs) ** 2

    def norm(self) -> float:
        return real_sum(self.probabilities())


@dataclass(frozen=True)
class DensityMatrix:
    """Reduced density matrix rho[n, n'] of one mode."""

    entries: np.ndarray
    eps_tail: float = 1e-12

    def __post_init__(self) -> None:
        rho = self.entries
        check_invariant(
            rho.ndim == 2 and rho.shape[0] == rho.shape[1],
            "fockspace",
            "square density matrix",
            f"shape {rho.shape}",
        )
        asym = float(np.max(np.abs(rho - rho.conj().T))) if rho.size else 0.0
        check_invariant(
            asym <= 1e-12, "fockspace", "hermiticity", f"max |rho - rho^H| = {asym:.3e}"
        )
        trace = self.trace()
        check_invariant(
            1.0 - self.eps_tail - ROUNDING_SLACK <= trace <= 1.0 + ROUNDING_SLACK,
            "fockspace",
            "unit trace",
            f"trace = {trace!r}",
        )

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def trace(self) -> float:
        return real_sum(np.real(np.diag(self.entries)))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)

    def check_positive(self, tol: float = 1e-10) -> None:
        """Raise InvariantViolation when an eigenvalue is below -tol."""
        lowest = float(self.eigenvalues()[0]) if self.dim else 0.0
        check_invariant(lowest >= -tol, "fockspace", "positivity", f"min eigenvalue {lowest:.3e}")

    def max_offdiagonal(self) -> float:
        if self.dim < 2:
            return 0.0
        mask = ~np.eye(self.dim, dtype=bool)
        return float(np.max(np.abs(self.entries[mask])))


def purity(rho: DensityMatrix) -> float:
    """Tr rho^2, which for a Hermitian matrix is the sum of |rho_ij|^2."""
    return real_sum(np.abs(rho.entries) ** 2)


def linear_entropy(rho: DensityMatrix) -> float:
    """1 - Tr rho^2."""
    return 1.0 - purity(rho)
