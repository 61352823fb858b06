"""Coupling-induced suppression of the cat state into a Poisson mixture."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ..core.errors import DomainError
from ..core.numerics import real_sum
from ..core.params import InitialConditions, ModelParams, derive_amplitudes
from ..entanglement import reduced_density_closed_form
from ..fockspace import DEFAULT_TAIL_EPS, poisson_weights, purity
from .cat import cat_overlap, component_count, revival_time

logger = logging.getLogger(__name__)

# Coupling used for the g != 0 column when the configuration is decoupled.
FALLBACK_COUPLING = 0.1


@dataclass(frozen=True)
class MixtureReport:
    purity: float
    mixture_purity: float
    max_offdiag: float


def mixture_convergence(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> MixtureReport:
    """Compare the closed-form rho_1 with the diagonal Poisson mixture of mode 1."""
    if params.g == 0:
        raise DomainError("mixture convergence needs a nonzero coupling g")
    rho = reduced_density_closed_form(params, ics, t, eps_tail)
    mean1 = derive_amplitudes(ics, params).mean_photons(1)
    weights = poisson_weights(mean1, rho.dim)
    return MixtureReport(
        purity=purity(rho),
        mixture_purity=real_sum(weights**2),
        max_offdiag=rho.max_offdiagonal(),
    )


def revival_rows(
    params: ModelParams,
    ics: InitialConditions,
    pairs: Iterable[tuple[int, int]],
    eps_tail: float = DEFAULT_TAIL_EPS,
    coupling: Optional[float] = None,
) -> list[dict[str, float]]:
    """
    Rows r, s, l, fidelity_g0, fidelity_gon, purity, mixture_purity.

    Args:
        params: Model parameters; g is replaced by 0 and by the coupling value
        ics: Initial conditions
        pairs: Coprime (r, s) pairs
        eps_tail: Truncation tolerance
        coupling: Coupling for the g != 0 columns; defaults to params.g, or
            FALLBACK_COUPLING when params.g is zero
    """
    if coupling is None:
        coupling = params.g if params.g != 0 else FALLBACK_COUPLING
    decoupled = params.with_values(g=0.0)
    coupled = params.with_values(g=coupling)

    rows = []
    for r, s in pairs:
        t = revival_time(r, s, coupled)
        report = mixture_convergence(coupled, ics, t, eps_tail)
        rows.append(
            {
                "r": r,
                "s": s,
                "l": component_count(r, s),
                "fidelity_g0": cat_overlap(decoupled, ics, r, s, eps_tail),
                "fidelity_gon": cat_overlap(coupled, ics, r, s, eps_tail),
                "purity": report.purity,
                "mixture_purity": report.mixture_purity,
            }
        )
        logger.info("revival r=%d s=%d done", r, s)
    return rows


def offdiagonal_bound(params: ModelParams, ics: InitialConditions, t: float, count: int) -> float:
    """Nearest-diagonal bound: exp[-(S2/hbar) sin^2(hbar g t / 2)] max sqrt(P_n P_n+1)."""
    mean1 = derive_amplitudes(ics, params).mean_photons(1)
    weights = poisson_weights(mean1, count)
    phase = np.sin(params.hbar * params.g * t / 2)
    suppression = np.exp(-(ics.action(2) / params.hbar) * phase**2)
    if count < 2:
        return 0.0
    return float(suppression * np.max(np.sqrt(weights[:-1] * weights[1:])))
