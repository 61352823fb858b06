"""Closed-form quantum expectation values and the hbar -> 0 residual scan."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from ..core.errors import DomainError
from ..core.params import (
    InitialConditions,
    ModelParams,
    PhaseSpacePoint,
    Transcription,
    check_mode,
    other_mode,
)
from ..fockspace import DEFAULT_TAIL_EPS, evolve, observables
from .classical import TrajectoryPoint, classical_phase, classical_trajectory, rotate

logger = logging.getLogger(__name__)


def quantum_phase_and_amplitude(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    mode: int,
    transcription: Transcription = Transcription.PRINTED,
) -> tuple[float, float]:
    """
    Phase phi_k(t) and contraction A_k(t) of <R_k>(t) = A_k M[phi_k] R_k0.

    PRINTED uses sin(hbar g_k t), (2 S_k / hbar) sin^2(hbar g_k t / 2) and
    (2 S_j / hbar) sin^2(hbar g t / 2). CORRECTED uses sin(2 hbar g_k t),
    (S_k / hbar) sin^2(hbar g_k t) and (S_j / hbar) sin^2(hbar g t / 2), which is
    what the number-basis density operator resums to. The phase terms of the
    partner mode are the same in both.

    Returns:
        (phi, A)
    """
    check_mode(mode)
    hb = params.hbar
    gk = params.nonlinearity(mode)
    Sk = ics.action(mode)
    Sj = ics.action(other_mode(mode))
    kerr = hb * gk * t
    cross = hb * params.g * t

    phi = params.omega(mode) * t + 2.0 * kerr + cross / 2 + (Sj / (2 * hb)) * math.sin(cross)
    if transcription is Transcription.PRINTED:
        phi += (Sk / (2 * hb)) * math.sin(kerr)
        exponent = -(2.0 * Sk / hb) * math.sin(kerr / 2) ** 2
        exponent -= (2.0 * Sj / hb) * math.sin(cross / 2) ** 2
    else:
        phi += (Sk / (2 * hb)) * math.sin(2 * kerr)
        exponent = -(Sk / hb) * math.sin(kerr) ** 2
        exponent -= (Sj / hb) * math.sin(cross / 2) ** 2
    return phi, math.exp(exponent)


def quantum_expectation(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    mode: int,
    transcription: Transcription = Transcription.PRINTED,
) -> TrajectoryPoint:
    """<q_k>, <p_k> at time t from the closed form."""
    phi, amplitude = quantum_phase_and_amplitude(params, ics, t, mode, transcription)
    moved = rotate(ics.point(mode), phi)
    return TrajectoryPoint(
        t=t,
        mode=mode,
        q=amplitude * moved.q,
        p=amplitude * moved.p,
        amplitude=amplitude,
        phase=phi,
    )


@dataclass(frozen=True)
class TranscriptionComparison:
    """Both closed forms against the Fock-space oracle at one (t, mode)."""

    t: float
    mode: int
    printed: PhaseSpacePoint
    corrected: PhaseSpacePoint
    oracle: PhaseSpacePoint

    @property
    def printed_error(self) -> float:
        return math.hypot(self.printed.q - self.oracle.q, self.printed.p - self.oracle.p)

    @property
    def corrected_error(self) -> float:
        return math.hypot(self.corrected.q - self.oracle.q, self.corrected.p - self.oracle.p)


def compare_transcriptions(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    mode: int,
    eps_tail: float = DEFAULT_TAIL_EPS,
) -> TranscriptionComparison:
    """Evaluate both closed forms and the oracle so the discrepancy can be reported."""
    state = evolve(params, ics, t, eps_tail)
    obs = observables(state, params)
    oracle = PhaseSpacePoint(obs.q1, obs.p1) if mode == 1 else PhaseSpacePoint(obs.q2, obs.p2)
    printed = quantum_expectation(params, ics, t, mode, Transcription.PRINTED).point
    corrected = quantum_expectation(params, ics, t, mode, Transcription.CORRECTED).point
    return TranscriptionComparison(t, mode, printed, corrected, oracle)


@dataclass(frozen=True)
class HbarScanRow:
    hbar: float
    residual_angle: float
    residual_norm: float


def hbar_scan(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    hbar_list: Sequence[float],
    mode: int = 1,
    transcription: Transcription = Transcription.PRINTED,
) -> list[HbarScanRow]:
    """
    Residual between quantum and classical motion as hbar shrinks at fixed S_k.

    The initial points (hence S_k) are held fixed while hbar varies, so the
    coherent amplitudes grow as hbar -> 0. With the printed closed form the
    residual angle tends to g_k S_k t / 2 instead of zero.

    Args:
        params: Model parameters; hbar is replaced by each scanned value
        ics: Initial conditions held fixed
        t: Evaluation time
        hbar_list: Values of hbar, all positive
        mode: Mode to report
        transcription: Closed form to use

    Returns:
        One row per hbar, in input order
    """
    if not hbar_list:
        raise DomainError("hbar_scan needs at least one hbar value")
    if any(not h > 0 for h in hbar_list):
        raise DomainError("all hbar values must be positive")

    rows = []
    for hb in hbar_list:
        scaled = params.with_values(hbar=float(hb))
        quantum = quantum_expectation(scaled, ics, t, mode, transcription)
        classical = classical_trajectory(scaled, ics, t, mode)
        angle = classical_phase(scaled, ics, t, mode) - quantum.phase
        norm = math.hypot(quantum.q - classical.q, quantum.p - classical.p)
        rows.append(HbarScanRow(hbar=float(hb), residual_angle=angle, residual_norm=norm))
        logger.debug("hbar=%g residual_angle=%.6e residual_norm=%.6e", hb, angle, norm)
    return rows


@dataclass(frozen=True)
class QuasiDeterminism:
    """Dimensionless ratios behind the short-time, large-action regime."""

    mode: int
    kerr_ratio: float  # hbar g_k t / (hbar / S_k)
    coupling_ratio: float  # hbar g t / (hbar / S_k)
    semiclassical_ratio: float  # hbar / S_k
    satisfied: bool


def quasi_determinism_conditions(
    params: ModelParams,
    ics: InitialConditions,
    t: float,
    mode: int,
    time_margin: float = 1e-3,
    action_margin: float = 1e-2,
) -> QuasiDeterminism:
    """Check hbar g_k t << hbar / S_k << 1 at the given margins."""
    Sk = ics.action(mode)
    if Sk == 0:
        return QuasiDeterminism(mode, math.inf, math.inf, math.inf, False)
    hb = params.hbar
    kerr_ratio = abs(hb * params.nonlinearity(mode) * t) / (hb / Sk)
    coupling_ratio = abs(hb * params.g * t) / (hb / Sk)
    semiclassical_ratio = hb / Sk
    satisfied = (
        kerr_ratio < time_margin
        and coupling_ratio < time_margin
        and semiclassical_ratio < action_margin
    )
    return QuasiDeterminism(mode, kerr_ratio, coupling_ratio, semiclassical_ratio, satisfied)


def trajectory_rows(
    params: ModelParams,
    ics: InitialConditions,
    times: Sequence[float],
    transcription: Transcription = Transcription.PRINTED,
) -> list[dict[str, float]]:
    """Rows t, mode, q_cl, p_cl, q_qm, p_qm, A, phi, residual_norm."""
    rows = []
    for t in times:
        for mode in (1, 2):
            cl = classical_trajectory(params, ics, float(t), mode)
            qm = quantum_expectation(params, ics, float(t), mode, transcription)
            rows.append(
                {
                    "t": float(t),
                    "mode": mode,
                    "q_cl": cl.q,
                    "p_cl": cl.p,
                    "q_qm": qm.q,
                    "p_qm": qm.p,
                    "A": qm.amplitude,
                    "phi": qm.phase,
                    "residual_norm": math.hypot(qm.q - cl.q, qm.p - cl.p),
                }
            )
    return rows
