"""Classical trajectories of the coupled Kerr oscillators."""

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import solve_ivp

from ..core.params import (
    InitialConditions,
    ModelParams,
    PhaseSpacePoint,
    check_mode,
    other_mode,
)


@dataclass(frozen=True)
class TrajectoryPoint:
    """Position and momentum of one mode at time t, with its amplitude and phase."""

    t: float
    mode: int
    q: float
    p: float
    amplitude: float
    phase: float

    @property
    def point(self) -> PhaseSpacePoint:
        return PhaseSpacePoint(self.q, self.p)


def rotate(point: PhaseSpacePoint, phi: float) -> PhaseSpacePoint:
    """Apply M[phi] = [[cos, sin], [-sin, cos]], the flow of q' = p, p' = -q."""
    c, s = math.cos(phi), math.sin(phi)
    return PhaseSpacePoint(c * point.q + s * point.p, -s * point.q + c * point.p)


def classical_frequency(params: ModelParams, ics: InitialConditions, mode: int) -> float:
    """dH/dh_k = omega_k + g_k S_k + g S_j / 2, constant along the flow."""
    partner = other_mode(mode)
    return (
        params.omega(mode)
        + params.nonlinearity(mode) * ics.action(mode)
        + params.g * ics.action(partner) / 2
    )


def classical_phase(params: ModelParams, ics: InitialConditions, t: float, mode: int) -> float:
    return classical_frequency(params, ics, mode) * t


def classical_trajectory(
    params: ModelParams, ics: InitialConditions, t: float, mode: int
) -> TrajectoryPoint:
    """Rigid rotation of the initial point at the amplitude-dependent frequency."""
    check_mode(mode)
    phi = classical_phase(params, ics, t, mode)
    moved = rotate(ics.point(mode), phi)
    return TrajectoryPoint(t=t, mode=mode, q=moved.q, p=moved.p, amplitude=1.0, phase=phi)


def hamilton_rhs(params: ModelParams) -> Callable[[float, np.ndarray], np.ndarray]:
    """Right-hand side of Hamilton's equations for y = (q1, p1, q2, p2).

    H = sum_k (omega_k h_k + g_k h_k^2) + g h1 h2 with h_k = (q_k^2 + p_k^2) / 2.
    """

    def rhs(_t: float, y: np.ndarray) -> np.ndarray:
        q1, p1, q2, p2 = y
        h1 = 0.5 * (q1 * q1 + p1 * p1)
        h2 = 0.5 * (q2 * q2 + p2 * p2)
        w1 = params.omega1 + 2.0 * params.g1 * h1 + params.g * h2
        w2 = params.omega2 + 2.0 * params.g2 * h2 + params.g * h1
        return np.array([w1 * p1, -w1 * q1, w2 * p2, -w2 * q2])

    return rhs


def integrate_classical(
    params: ModelParams,
    ics: InitialConditions,
    times: Sequence[float],
    rtol: float = 1e-12,
    atol: float = 1e-12,
) -> np.ndarray:
    """Numerically integrate Hamilton's equations; rows are (q1, p1, q2, p2) per time."""
    times = np.asarray(times, dtype=float)
    y0 = np.array([ics.q10, ics.p10, ics.q20, ics.p20])
    if times.size == 0:
        return np.empty((0, 4))
    span = (0.0, float(times.max())) if times.max() > 0 else (0.0, 0.0)
    if span[1] == 0.0:
        return np.tile(y0, (times.size, 1))
    solution = solve_ivp(
        hamilton_rhs(params), span, y0, method="DOP853", t_eval=times, rtol=rtol, atol=atol
    )
    return solution.y.T
