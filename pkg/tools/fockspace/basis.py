"""Truncated number-basis building blocks: Poisson tails and coherent coefficients."""

import logging
import math

import numpy as np
from scipy import special

from ..core.errors import DomainError
from ..core.params import Amplitudes

logger = logging.getLogger(__name__)

DEFAULT_TAIL_EPS = 1e-12


def truncation_bound(mean_photon: float, eps_tail: float = DEFAULT_TAIL_EPS) -> int:
    """
    Smallest cutoff N whose neglected Poisson mass P(n >= N) is below eps_tail.

    Args:
        mean_photon: Poisson mean |z|^2
        eps_tail: Tolerated tail mass, 0 < eps_tail < 1

    Returns:
        Number of basis states to keep (at least 1)
    """
    if not math.isfinite(mean_photon) or mean_photon < 0:
        raise DomainError(f"mean photon number must be finite and >= 0, got {mean_photon}")
    if not 0 < eps_tail < 1:
        raise DomainError(f"eps_tail must lie in (0, 1), got {eps_tail}")
    if mean_photon == 0:
        return 1

    upper = int(mean_photon + 12.0 * math.sqrt(mean_photon) + 64)
    while True:
        k = np.arange(upper)
        # pdtrc(k, mu) = P(n > k), so the cutoff N = k + 1 is the first k below eps.
        tails = special.pdtrc(k, mean_photon)
        hits = np.flatnonzero(tails < eps_tail)
        if hits.size:
            return int(hits[0]) + 1
        upper *= 2


def mode_cutoffs(amplitudes: Amplitudes, eps_tail: float = DEFAULT_TAIL_EPS) -> tuple[int, int]:
    """Per-mode cutoffs, each at eps_tail/2, so the joint neglected mass stays <= eps_tail."""
    return (
        truncation_bound(amplitudes.mean_photons(1), eps_tail / 2),
        truncation_bound(amplitudes.mean_photons(2), eps_tail / 2),
    )


def poisson_weights(mean_photon: float, count: int) -> np.ndarray:
    """Poisson probabilities for n = 0..count-1, evaluated in log space."""
    n = np.arange(count)
    log_w = special.xlogy(n, mean_photon) - mean_photon - special.gammaln(n + 1)
    return np.exp(log_w)


def coherent_coefficients(z: complex, count: int) -> np.ndarray:
    """Number-basis coefficients of the coherent state |z>, truncated to count terms."""
    n = np.arange(count)
    radius = abs(z)
    log_mod = -0.5 * radius * radius + special.xlogy(n, radius) - 0.5 * special.gammaln(n + 1)
    return np.exp(log_mod + 1j * n * np.angle(z))
