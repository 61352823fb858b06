"""Closed-form reduced density matrix of mode 1 and its decoherence factor."""

import math

import numpy as np

from ..core.errors import DomainError
from ..core.params import InitialConditions, ModelParams, Transcription, derive_amplitudes
from ..fockspace import DEFAULT_TAIL_EPS, DensityMatrix, coherent_coefficients, mode_cutoffs


def _phase_coefficient(S2: float, hbar: float, transcription: Transcription) -> float:
    # Printed: S2/hbar. Resummed from the density operator: S2/(2 hbar).
    return S2 / hbar if transcription is Transcription.PRINTED else S2 / (2.0 * hbar)


def decoherence_factor(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    n: int,
    n2: int,
    transcription: Transcription = Transcription.PRINTED,
) -> complex:
    """D[n, n'] = exp[-(S2/hbar) sin^2(hbar g t (n-n')/2)] exp[-i c sin(hbar g t (n-n'))].

    The modulus is the same in both transcriptions; c is S2/hbar as printed and
    S2/(2 hbar) when corrected.
    """
    if n < 0 or n2 < 0 or int(n) != n or int(n2) != n2:
        raise DomainError(f"number indices must be non-negative integers, got {n}, {n2}")
    S2 = ics.action(2)
    theta = params.hbar * params.g * t * (n - n2)
    modulus = math.exp(-(S2 / params.hbar) * math.sin(theta / 2) ** 2)
    phase = _phase_coefficient(S2, params.hbar, transcription) * math.sin(theta)
    return modulus * complex(math.cos(phase), -math.sin(phase))


def decoherence_matrix(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    count: int,
    transcription: Transcription = Transcription.CORRECTED,
) -> np.ndarray:
    """D[n, n'] for 0 <= n, n' < count."""
    S2 = ics.action(2)
    lags = np.arange(count)[:, None] - np.arange(count)[None, :]
    theta = params.hbar * params.g * t * lags
    modulus = np.exp(-(S2 / params.hbar) * np.sin(theta / 2) ** 2)
    phase = _phase_coefficient(S2, params.hbar, transcription) * np.sin(theta)
    return modulus * np.exp(-1j * phase)


def rotating_amplitude(params: ModelParams, ics: InitialConditions, t: float) -> complex:
    """z_1t = z_10 exp(-i Omega_1 t) with Omega_1 = omega_1 + hbar g_1 + hbar g / 2."""
    z10 = derive_amplitudes(ics, params).z10
    big_omega = params.omega1 + params.hbar * params.g1 + params.hbar * params.g / 2
    return z10 * complex(math.cos(big_omega * t), -math.sin(big_omega * t))


def reduced_density_closed_form(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    eps_tail: float = DEFAULT_TAIL_EPS,
    transcription: Transcription = Transcription.CORRECTED,
) -> DensityMatrix:
    """
    Reduced density matrix of mode 1 built from z_1t, D[n, n'] and the Kerr phase.

    The basis size is the oracle's mode-1 cutoff so both can be compared entry by entry.
    """
    N1, _ = mode_cutoffs(derive_amplitudes(ics, params), eps_tail)
    amps = coherent_coefficients(rotating_amplitude(params, ics, t), N1)
    n = np.arange(N1)
    kerr = np.exp(-1j * params.hbar * params.g1 * t * n * n)
    column = amps * kerr
    decoherence = decoherence_matrix(params, ics, t, N1, transcription)
    entries = np.outer(column, column.conj()) * decoherence
    entries = 0.5 * (entries + entries.conj().T)
    return DensityMatrix(entries=entries, eps_tail=eps_tail)
