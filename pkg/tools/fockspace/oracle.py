"""Brute-force evolution in the truncated two-mode number basis.

Nothing here uses a closed form for the dynamics: the state is propagated
level by level and every observable is a direct contraction.
"""

import logging
import math
from typing import NamedTuple

import numpy as np

from ..core.errors import DomainError
from ..core.numerics import complex_sum
from ..core.params import InitialConditions, ModelParams, check_mode, derive_amplitudes
from .basis import DEFAULT_TAIL_EPS, coherent_coefficients, mode_cutoffs
from .states import DensityMatrix, JointFockState

logger = logging.getLogger(__name__)


class Observables(NamedTuple):
    q1: float
    p1: float
    q2: float
    p2: float


def level_frequencies(params: ModelParams, N1: int, N2: int) -> np.ndarray:
    """E[n, m] / hbar for the symmetrically ordered two-mode Hamiltonian."""
    h1 = np.arange(N1)[:, None] + 0.5
    h2 = np.arange(N2)[None, :] + 0.5
    hb = params.hbar
    return (
        params.omega1 * h1
        + params.g1 * hb * h1**2
        + params.omega2 * h2
        + params.g2 * hb * h2**2
        + params.g * hb * h1 * h2
    )


def density_operator_phase(
    params: ModelParams, t: float, n: int, m: int, n2: int, m2: int
) -> complex:
    """Phase carried by |n m><n2 m2| in the Fock-basis density operator.

    Combines the rotating amplitudes z_kt = z_k0 exp(-i Omega_k t), with
    Omega_k = omega_k + hbar g_k + hbar g / 2, and the three quadratic phases.
    """
    hb = params.hbar
    big_omega1 = params.omega1 + hb * params.g1 + hb * params.g / 2
    big_omega2 = params.omega2 + hb * params.g2 + hb * params.g / 2
    angle = (
        big_omega1 * t * (n - n2)
        + big_omega2 * t * (m - m2)
        + hb * params.g * t * (n * m - n2 * m2)
        + hb * params.g1 * t * (n * n - n2 * n2)
        + hb * params.g2 * t * (m * m - m2 * m2)
    )
    return complex(np.exp(-1j * angle))


def initial_state(
    params: ModelParams, ics: InitialConditions, eps_tail: float = DEFAULT_TAIL_EPS
) -> np.ndarray:
    """Product coherent-state coefficients c[n, m](0)."""
    amplitudes = derive_amplitudes(ics, params)
    N1, N2 = mode_cutoffs(amplitudes, eps_tail)
    logger.debug("Fock cutoffs N1=%d N2=%d (eps_tail=%g)", N1, N2, eps_tail)
    return np.outer(
        coherent_coefficients(amplitudes.z10, N1),
        coherent_coefficients(amplitudes.z20, N2),
    )


def evolve(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> JointFockState:
    """Propagate the initial product coherent state to time t."""
    if not math.isfinite(t):
        raise DomainError(f"time must be finite, got {t}")
    c0 = initial_state(params, ics, eps_tail)
    freqs = level_frequencies(params, *c0.shape)
    return JointFockState(coeffs=c0 * np.exp(-1j * freqs * t), t=t, eps_tail=eps_tail)


def ladder_expectation(state: JointFockState, mode: int) -> complex:
    """<a_k> from the c*[n, m] c[n+1, m] sqrt(n+1) contraction (or its mode-2 analogue)."""
    c = state.coeffs
    if check_mode(mode) == 1:
        root = np.sqrt(np.arange(1, state.N1))[:, None]
        terms = np.conj(c[:-1, :]) * c[1:, :] * root
    else:
        root = np.sqrt(np.arange(1, state.N2))[None, :]
        terms = np.conj(c[:, :-1]) * c[:, 1:] * root
    return complex_sum(terms)


def observables(state: JointFockState, params: ModelParams) -> Observables:
    """Position and momentum expectations of both modes."""
    scale = math.sqrt(2.0 * params.hbar)
    a1 = ladder_expectation(state, 1)
    a2 = ladder_expectation(state, 2)
    return Observables(scale * a1.real, scale * a1.imag, scale * a2.real, scale * a2.imag)


def reduce(state: JointFockState, mode: int) -> DensityMatrix:
    """Partial trace over the other mode."""
    c = state.coeffs
    if check_mode(mode) == 1:
        entries = c @ c.conj().T
    else:
        entries = c.T @ c.conj()
    # Symmetrize away matmul rounding so the Hermitian check is exact.
    entries = 0.5 * (entries + entries.conj().T)
    return DensityMatrix(entries=entries, eps_tail=state.eps_tail)


def dump_probabilities(state: JointFockState) -> list[dict[str, float]]:
    """Rows n, m, prob with prob = |c_nm|^2."""
    probs = state.probabilities()
    return [
        {"n": n, "m": m, "prob": float(probs[n, m])}
        for n in range(state.N1)
        for m in range(state.N2)
    ]
