"""Fractional revivals: revival times, DFT coefficients and generalized cat states."""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..core.errors import DomainError
from ..core.params import InitialConditions, ModelParams, derive_amplitudes
from ..entanglement import rotating_amplitude
from ..fockspace import DEFAULT_TAIL_EPS, coherent_coefficients, evolve, mode_cutoffs, reduce

logger = logging.getLogger(__name__)

MAX_DENOMINATOR = 64


def _check_fraction(r: int, s: int) -> None:
    if int(r) != r or int(s) != s or r < 1 or s < 1:
        raise DomainError(f"r and s must be positive integers, got {r}, {s}")
    if math.gcd(int(r), int(s)) != 1:
        raise DomainError(f"r and s must be coprime, got {r}, {s}")
    if s > MAX_DENOMINATOR:
        raise DomainError(f"s must not exceed {MAX_DENOMINATOR}, got {s}")


def revival_time(r: int, s: int, params: ModelParams) -> float:
    """t_{r,s} = (r/s) pi / (g1 hbar)."""
    _check_fraction(r, s)
    if params.g1 == 0:
        raise DomainError("revival times need a nonzero self-Kerr coefficient g1")
    return (r / s) * math.pi / (params.g1 * params.hbar)


def component_count(r: int, s: int) -> int:
    """l = s when exactly one of r, s is even; l = 2s when both are odd."""
    _check_fraction(r, s)
    return 2 * s if (r % 2 == 1 and s % 2 == 1) else s


def _kerr_phases(k: np.ndarray, r: int, s: int) -> np.ndarray:
    """exp(-i pi k^2 r / s), with k^2 r reduced modulo 2s in integer arithmetic."""
    reduced = (k * k * r) % (2 * s)
    return np.exp(-1j * np.pi * reduced / s)


def cat_coefficients(r: int, s: int) -> np.ndarray:
    """a_q = (1/l) sum_k exp[-i pi k (k r/s - 2q/l)] for q = 0..l-1."""
    l = component_count(r, s)
    k = np.arange(l)
    kerr = _kerr_phases(k, r, s)
    # exp(2 pi i k q / l) with k q reduced modulo l.
    fourier = np.exp(2j * np.pi * (np.outer(np.arange(l), k) % l) / l)
    return fourier @ kerr / l


def reconstruction_residual(r: int, s: int, n_max: int = 100) -> float:
    """max_n |exp(-i pi n^2 r/s) - sum_q a_q exp(-2 pi i n q / l)| for n = 0..n_max."""
    coeffs = cat_coefficients(r, s)
    l = coeffs.size
    n = np.arange(n_max + 1)
    basis = np.exp(-2j * np.pi * (np.outer(n, np.arange(l)) % l) / l)
    return float(np.max(np.abs(_kerr_phases(n, r, s) - basis @ coeffs)))


def parseval_defect(r: int, s: int) -> float:
    return abs(float(np.sum(np.abs(cat_coefficients(r, s)) ** 2)) - 1.0)


@dataclass(frozen=True)
class CatDecomposition:
    """Generalized cat state sum_q a_q |center exp(-2 pi i q / l)>."""

    r: int
    s: int
    l: int
    coeffs: np.ndarray
    center: complex

    def components(self) -> np.ndarray:
        return self.center * np.exp(-2j * np.pi * np.arange(self.l) / self.l)


def cat_decomposition(
    params: ModelParams, ics: InitialConditions, r: int, s: int
) -> CatDecomposition:
    """Decomposition of mode 1 at t_{r,s}, centered on the rotated amplitude z_1t."""
    t = revival_time(r, s, params)
    return CatDecomposition(
        r=r,
        s=s,
        l=component_count(r, s),
        coeffs=cat_coefficients(r, s),
        center=rotating_amplitude(params, ics, t),
    )


def cat_state(decomposition: CatDecomposition, count: int) -> np.ndarray:
    """Number-basis vector of the cat state in a basis of count states."""
    vector = np.zeros(count, dtype=complex)
    for a_q, z in zip(decomposition.coeffs, decomposition.components()):
        vector += a_q * coherent_coefficients(complex(z), count)
    return vector


def cat_norm(r: int, s: int, z: complex, count: int) -> float:
    """Squared norm of sum_q a_q |z e^{-2 pi i q / l}> truncated to count states.

    Each number coefficient of the superposition equals the coherent one times
    the unimodular factor exp(-i pi n^2 r/s), so this is the truncated coherent
    norm: unity up to the neglected tail.
    """
    decomposition = CatDecomposition(
        r=r, s=s, l=component_count(r, s), coeffs=cat_coefficients(r, s), center=z
    )
    return float(np.sum(np.abs(cat_state(decomposition, count)) ** 2))


def cat_overlap(
    params: ModelParams,
    ics: InitialConditions,
    r: int,
    s: int,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> float:
    """<Psi_rs| rho_1(t_rs) |Psi_rs> / Tr rho_1 against the oracle, for any coupling."""
    t = revival_time(r, s, params)
    rho = reduce(evolve(params, ics, t, eps_tail), 1)
    N1, _ = mode_cutoffs(derive_amplitudes(ics, params), eps_tail)
    psi = cat_state(cat_decomposition(params, ics, r, s), N1)
    value = np.vdot(psi, rho.entries @ psi).real / rho.trace()
    logger.debug("cat overlap r=%d s=%d g=%g -> %.15f", r, s, params.g, value)
    return float(value)


def cat_state_fidelity(
    params: ModelParams,
    ics: InitialConditions,
    r: int,
    s: int,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> float:
    """Fidelity of the generalized cat state with the decoupled oracle state at t_{r,s}."""
    if params.g != 0:
        raise DomainError("the cat-state construction holds only for g = 0")
    return cat_overlap(params, ics, r, s, eps_tail)
