"""Linear-entropy dynamics: exact series and the two short-time forms."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..core.numerics import real_sum
from ..core.params import InitialConditions, ModelParams, derive_amplitudes
from ..fockspace import (
    DEFAULT_TAIL_EPS,
    evolve,
    linear_entropy,
    poisson_weights,
    reduce,
    truncation_bound,
)

logger = logging.getLogger(__name__)


def _overlap_kernel(mean2: float, phase_step: float, lags: np.ndarray) -> np.ndarray:
    """|<z2 e^{-i phase_step n}|z2 e^{-i phase_step n'}>|^2 as a function of n - n'."""
    return np.exp(-4.0 * mean2 * np.sin(0.5 * phase_step * lags) ** 2)


def linear_entropy_series(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> float:
    """
    Exact linear entropy of mode 1 from the double Poisson sum.

    Both indices carry the Poisson weights of mode 1; the kernel depends only
    on the lag n - n', so the sum is a correlation of the weights with itself.
    """
    amplitudes = derive_amplitudes(ics, params)
    mean1 = amplitudes.mean_photons(1)
    mean2 = amplitudes.mean_photons(2)
    count = truncation_bound(mean1, eps_tail)
    weights = poisson_weights(mean1, count)
    weights = weights / real_sum(weights)

    lag_weights = np.correlate(weights, weights, mode="full")
    lags = np.arange(-(count - 1), count)
    kernel = _overlap_kernel(mean2, params.hbar * params.g * t, lags)
    value = 1.0 - real_sum(lag_weights * kernel)
    return min(max(value, 0.0), math.nextafter(1.0, 0.0))


def linear_entropy_series_printed(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> float:
    """The double sum with the published weights e^{-2|z1|^2} |z1|^{2n}/n! |z2|^{2n'}/n'!.

    These weights only sum to one when |z1| = |z2|; kept for documenting the
    discrepancy, never used for acceptance checks.
    """
    amplitudes = derive_amplitudes(ics, params)
    mean1 = amplitudes.mean_photons(1)
    mean2 = amplitudes.mean_photons(2)
    w1 = poisson_weights(mean1, truncation_bound(mean1, eps_tail))
    w2 = poisson_weights(mean2, truncation_bound(mean2, eps_tail)) * math.exp(mean2 - mean1)
    lags = np.arange(w1.size)[:, None] - np.arange(w2.size)[None, :]
    kernel = _overlap_kernel(mean2, params.hbar * params.g * t, lags)
    return 1.0 - real_sum(w1[:, None] * w2[None, :] * kernel)


def linear_entropy_short_time(params: ModelParams, ics: InitialConditions, t: float) -> float:
    """Leading-order entropy 2 (|z1| |z2| hbar g t)^2."""
    amplitudes = derive_amplitudes(ics, params)
    root = abs(amplitudes.z10) * abs(amplitudes.z20) * params.hbar * params.g * t
    return 2.0 * root * root


def short_time_s_form(params: ModelParams, ics: InitialConditions, t: float) -> float:
    """The action form (S1 g t)(S2 g t), printed as equal to the |z| form."""
    return (ics.action(1) * params.g * t) * (ics.action(2) * params.g * t)


@dataclass(frozen=True)
class ShortTimeVerdict:
    """Which short-time form tracks the exact series."""

    verdict: str  # "z-form", "s-form", "both", "neither" or "undetermined"
    z_form_error: float
    s_form_error: float
    samples: int


def short_time_verdict(
    params: ModelParams,
    ics: InitialConditions,
    eps_tail: float = DEFAULT_TAIL_EPS,
    rtol: float = 0.01,
    entropy_ceiling: float = 1e-3,
    samples: int = 8,
) -> ShortTimeVerdict:
    """
    Compare both short-time forms with the series where the series is below entropy_ceiling.

    Sample times are chosen so the |z| form sweeps entropies from 1e-6 up to half the ceiling.

    Returns:
        Verdict with the worst relative error of each form over the samples
    """
    amplitudes = derive_amplitudes(ics, params)
    rate = (
        2.0
        * amplitudes.mean_photons(1)
        * amplitudes.mean_photons(2)
        * (params.hbar * params.g) ** 2
    )
    if rate == 0:
        return ShortTimeVerdict("undetermined", math.nan, math.nan, 0)

    targets = np.geomspace(1e-6, 0.5 * entropy_ceiling, samples)
    z_err = s_err = 0.0
    used = 0
    for target in targets:
        t = math.sqrt(target / rate)
        exact = linear_entropy_series(params, ics, t, eps_tail)
        if not 0 < exact < entropy_ceiling:
            continue
        used += 1
        z_err = max(z_err, abs(linear_entropy_short_time(params, ics, t) / exact - 1.0))
        s_err = max(s_err, abs(short_time_s_form(params, ics, t) / exact - 1.0))

    if used == 0:
        return ShortTimeVerdict("undetermined", math.nan, math.nan, 0)
    z_ok, s_ok = z_err < rtol, s_err < rtol
    verdict = {(True, True): "both", (True, False): "z-form", (False, True): "s-form"}.get(
        (z_ok, s_ok), "neither"
    )
    logger.info("Short-time entropy: %s (z-form %.2e, s-form %.2e)", verdict, z_err, s_err)
    return ShortTimeVerdict(verdict, z_err, s_err, used)


@dataclass(frozen=True)
class EntropyRecord:
    t: float
    E_exact: float
    E_short: float
    hbar: float


def entropy_record(params: ModelParams, ics: InitialConditions, t: float) -> EntropyRecord:
    return EntropyRecord(
        t=t,
        E_exact=linear_entropy_series(params, ics, t),
        E_short=linear_entropy_short_time(params, ics, t),
        hbar=params.hbar,
    )


def entropy_rows(
    params: ModelParams,
    ics: InitialConditions,
    times: Sequence[float],
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> list[dict[str, float]]:
    """Rows t, E_exact, E_short_zform, E_short_sform, E_oracle."""
    rows = []
    for t in times:
        t = float(t)
        oracle = linear_entropy(reduce(evolve(params, ics, t, eps_tail), 1))
        rows.append(
            {
                "t": t,
                "E_exact": linear_entropy_series(params, ics, t, eps_tail),
                "E_short_zform": linear_entropy_short_time(params, ics, t),
                "E_short_sform": short_time_s_form(params, ics, t),
                "E_oracle": oracle,
            }
        )
    return rows
