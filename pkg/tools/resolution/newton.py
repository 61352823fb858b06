"""Discrete Ehrenfest relation and the resolution-based Newton law."""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from ..core.errors import DomainError
from ..core.grid import PositionGrid
from ..core.numerics import real_sum
from ..wavefunction import SampledWavefunction, WavefunctionKind, WavefunctionSpec, sample
from .detectors import DetectorGrid, bin, classical_position
from .operators import forward_difference

logger = logging.getLogger(__name__)

# Half a detector of position quantization plus up to one detector from the
# forward-difference force, whose harmonic equilibrium sits at -dx/2.
COARSE_NEWTON_TOLERANCE_BINS = 1.5


@dataclass(frozen=True)
class Potential:
    """A potential V(x) for a particle of the given mass."""

    mass: float
    fn: Callable[[np.ndarray], np.ndarray]
    name: str = "tabulated"

    def __post_init__(self) -> None:
        if not self.mass > 0:
            raise DomainError(f"mass must be positive, got {self.mass}")

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(x, dtype=float)), dtype=float)


def harmonic(mass: float, omega: float) -> Potential:
    """V(x) = m omega^2 x^2 / 2."""
    stiffness = mass * omega * omega
    return Potential(mass=mass, fn=lambda x: 0.5 * stiffness * x * x, name="harmonic")


def expectation_position(psi: SampledWavefunction) -> float:
    return real_sum(psi.probabilities() * psi.x)


def mean_force_gradient(psi: SampledWavefunction, potential: Potential) -> float:
    """sum_k dx |psi_k|^2 dV(x_k)/dx with the forward difference of V on the grid."""
    gradient = forward_difference(potential(psi.x), psi.grid.dx)
    return real_sum(psi.probabilities() * gradient)


def _uniform_step(times: Sequence[float]) -> float:
    times = np.asarray(times, dtype=float)
    if times.size < 3:
        raise DomainError("need at least three time points")
    steps = np.diff(times)
    if steps[0] <= 0 or not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
        raise DomainError("time grid must be uniform and increasing")
    return float(steps[0])


def ehrenfest_residual(
    potential: Potential, states: Sequence[SampledWavefunction], times: Sequence[float]
) -> float:
    """
    max over interior t of |m d^2<x>/dt^2 + <dV/dx>|.

    d^2/dt^2 is the centered second difference on the uniform time grid; dV/dx
    is the forward difference of V on each state's grid.
    """
    dt = _uniform_step(times)
    if len(states) != len(times):
        raise DomainError("one state per time point is required")
    means = np.array([expectation_position(psi) for psi in states])
    forces = np.array([mean_force_gradient(psi, potential) for psi in states])
    acceleration = (means[2:] - 2.0 * means[1:-1] + means[:-2]) / (dt * dt)
    return float(np.max(np.abs(potential.mass * acceleration + forces[1:-1])))


def coherent_trajectory(
    mass: float,
    omega: float,
    hbar: float,
    x0: float,
    times: Sequence[float],
    grid: PositionGrid,
) -> list[SampledWavefunction]:
    """Harmonic coherent state released at rest from x0, sampled at each time."""
    b = math.sqrt(hbar / (mass * omega))
    states = []
    for t in times:
        center = x0 * math.cos(omega * t)
        momentum = -mass * omega * x0 * math.sin(omega * t)
        lam = hbar / momentum if momentum != 0 else math.inf
        spec = WavefunctionSpec(WavefunctionKind.COHERENT, b=b, q=2.0 * center, lam=lam)
        states.append(sample(spec, grid))
    return states


def newton_trajectory(
    potential: Potential,
    x0: float,
    v0: float,
    times: Sequence[float],
    force_dx: float,
) -> np.ndarray:
    """Solve m x'' = -(V(x + force_dx) - V(x)) / force_dx on the given times."""
    times = np.asarray(times, dtype=float)
    if force_dx <= 0:
        raise DomainError("force_dx must be positive")

    def rhs(_t: float, y: np.ndarray) -> np.ndarray:
        x, v = y
        point = np.array([x, x + force_dx])
        values = potential(point)
        return np.array([v, -(values[1] - values[0]) / force_dx / potential.mass])

    if times.size == 0:
        return np.empty(0)
    solution = solve_ivp(
        rhs,
        (float(times[0]), float(times[-1])),
        np.array([x0, v0]),
        method="DOP853",
        t_eval=times,
        rtol=1e-10,
        atol=1e-12,
    )
    return solution.y[0]


@dataclass(frozen=True)
class NewtonCheck:
    """Binned classical positions against a Newtonian trajectory."""

    positions: list[Optional[float]]
    newton: np.ndarray
    max_deviation_bins: float
    resolved_fraction: float


def coarse_newton_deviation(
    states: Sequence[SampledWavefunction],
    times: Sequence[float],
    detectors: DetectorGrid,
    potential: Potential,
    x0: float,
    v0: float,
    eps: float = 0.05,
) -> NewtonCheck:
    """
    Compare x_c(t) from coarse detectors with the discrete Newton trajectory.

    The force is the forward difference of V over one detector width. Unresolved
    instants are skipped; the deviation is measured in detector widths and stays
    within COARSE_NEWTON_TOLERANCE_BINS for a resolved harmonic trajectory.
    """
    positions = [classical_position(bin(psi, detectors), eps) for psi in states]
    newton = newton_trajectory(potential, x0, v0, times, detectors.dx)
    deviations = [
        abs(xc - xn) / detectors.dx for xc, xn in zip(positions, newton) if xc is not None
    ]
    resolved = len(deviations) / len(positions) if positions else 0.0
    worst = max(deviations) if deviations else math.inf
    logger.info("coarse Newton check: %.0f%% resolved, worst %.3f bins", 100 * resolved, worst)
    return NewtonCheck(positions, newton, worst, resolved)
