"""Invariant suite run by the `selftest` command."""

import logging
import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..core import (
    InitialConditions,
    InvariantViolation,
    PositionGrid,
    RunConfig,
    Transcription,
    canonical_transform,
    check_invariant,
    derive_amplitudes,
    inverse_canonical_transform,
    reconstruct_phase_space,
)
from ..dynamics import (
    classical_trajectory,
    compare_transcriptions,
    integrate_classical,
    quantum_phase_and_amplitude,
)
from ..entanglement import (
    linear_entropy_series,
    linear_entropy_short_time,
    reduced_density_closed_form,
    short_time_s_form,
)
from ..fockspace import (
    density_operator_phase,
    evolve,
    level_frequencies,
    linear_entropy,
    purity,
    reduce,
)
from ..resolution import (
    bin,
    commutator_indicator,
    coherent_trajectory,
    detectors_for,
    discrete_inner,
    ehrenfest_residual,
    harmonic,
    schmidt_pair_from_number_states,
    schmidt_separability,
)
from ..revivals import (
    cat_overlap,
    cat_state_fidelity,
    parseval_defect,
    reconstruction_residual,
)
from ..wavefunction import (
    SampledWavefunction,
    WavefunctionKind,
    WavefunctionSpec,
    cat_xrep,
    number_xrep,
    reference_grid,
    sample,
)

logger = logging.getLogger(__name__)

SEED = 20090417


@dataclass(frozen=True)
class CheckResult:
    module: str
    invariant: str
    passed: bool
    detail: str
    seconds: float


CheckFn = Callable[[RunConfig], str]


def _coprime_pairs(max_s: int) -> list[tuple[int, int]]:
    return [(r, s) for s in range(1, max_s + 1) for r in range(1, 2 * s) if math.gcd(r, s) == 1]


# -- core --------------------------------------------------------------------


def check_amplitude_round_trip(config: RunConfig) -> str:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for q, p, hb in zip(rng.normal(0, 5, 1000), rng.normal(0, 5, 1000), rng.uniform(0.01, 5, 1000)):
        ics = InitialConditions(q, p, 0.0, 0.0)
        params = config.params.with_values(hbar=float(hb))
        point = reconstruct_phase_space(derive_amplitudes(ics, params).z10, params.hbar)
        scale = max(1.0, math.hypot(q, p))
        worst = max(worst, abs(point.q - q) / scale, abs(point.p - p) / scale)
    check_invariant(worst <= 1e-12, "core", "amplitude round trip", f"worst {worst:.2e}")
    return f"worst relative error {worst:.2e}"


def check_canonical_round_trip(config: RunConfig) -> str:
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    draws = zip(rng.normal(0, 10, 1000), rng.normal(0, 10, 1000), rng.uniform(0.01, 100, 1000))
    for Q, P, k in draws:
        back = inverse_canonical_transform(canonical_transform(Q, P, float(k), 1.0), float(k), 1.0)
        scale = max(1.0, abs(Q), abs(P))
        worst = max(worst, abs(back[0] - Q) / scale, abs(back[1] - P) / scale)
    check_invariant(worst <= 1e-12, "core", "canonical round trip", f"worst {worst:.2e}")
    return f"worst relative error {worst:.2e}"


# -- dynamics ----------------------------------------------------------------


def check_energy_shell(config: RunConfig) -> str:
    worst = 0.0
    for mode in (1, 2):
        S = config.ics.action(mode)
        for t in config.times():
            point = classical_trajectory(config.params, config.ics, float(t), mode)
            worst = max(worst, abs(point.q**2 + point.p**2 - S) / max(S, 1.0))
    check_invariant(worst <= 1e-12, "dynamics", "energy shell", f"worst {worst:.2e}")
    return f"worst relative drift {worst:.2e}"


def check_amplitude_bounds(config: RunConfig) -> str:
    for transcription in Transcription:
        for mode in (1, 2):
            _, start = quantum_phase_and_amplitude(
                config.params, config.ics, 0.0, mode, transcription
            )
            check_invariant(start == 1.0, "dynamics", "A(0) = 1", f"A(0) = {start}")
            for t in config.times():
                _, a = quantum_phase_and_amplitude(
                    config.params, config.ics, float(t), mode, transcription
                )
                check_invariant(0 < a <= 1, "dynamics", "0 < A <= 1", f"A({t}) = {a}")
    return "A(0) = 1 and 0 < A <= 1 on the time grid"


def check_oracle_consistency(config: RunConfig) -> str:
    worst_corrected = worst_printed = 0.0
    for t in config.times():
        for mode in (1, 2):
            cmp = compare_transcriptions(config.params, config.ics, float(t), mode, config.tail_eps)
            worst_corrected = max(worst_corrected, cmp.corrected_error)
            worst_printed = max(worst_printed, cmp.printed_error)
    check_invariant(
        worst_corrected <= 1e-6,
        "dynamics",
        "oracle consistency",
        f"corrected closed form off by {worst_corrected:.2e}",
    )
    return f"corrected {worst_corrected:.2e}, printed {worst_printed:.2e}"


def check_hamilton_integration(config: RunConfig) -> str:
    times = config.times()
    numeric = integrate_classical(config.params, config.ics, times)
    worst = 0.0
    for row, t in zip(numeric, times):
        for mode, offset in ((1, 0), (2, 2)):
            point = classical_trajectory(config.params, config.ics, float(t), mode)
            worst = max(worst, abs(row[offset] - point.q), abs(row[offset + 1] - point.p))
    check_invariant(worst <= 1e-7, "dynamics", "Hamilton integration", f"worst {worst:.2e}")
    return f"closed form vs integrator {worst:.2e}"


# -- fockspace ---------------------------------------------------------------


def check_norm_conservation(config: RunConfig) -> str:
    start = evolve(config.params, config.ics, 0.0, config.tail_eps).norm()
    rng = np.random.default_rng(SEED + 2)
    worst = 0.0
    for t in rng.uniform(0, max(config.t_max, 1.0), 10):
        state = evolve(config.params, config.ics, float(t), config.tail_eps)
        worst = max(worst, abs(state.norm() - start))
    check_invariant(worst < 1e-12, "fockspace", "norm conservation", f"drift {worst:.2e}")
    return f"norm drift {worst:.2e}"


def check_reduced_densities(config: RunConfig) -> str:
    state = evolve(config.params, config.ics, config.t_max / 2, config.tail_eps)
    rho1, rho2 = reduce(state, 1), reduce(state, 2)
    rho1.check_positive()
    rho2.check_positive()
    gap = abs(purity(rho1) - purity(rho2))
    check_invariant(gap <= 1e-10, "fockspace", "purity symmetry", f"gap {gap:.2e}")
    return f"purity gap {gap:.2e}"


def check_phase_equivalence(config: RunConfig) -> str:
    params = config.params
    t = 0.37
    freqs = level_frequencies(params, 40, 40)
    rng = np.random.default_rng(SEED + 3)
    reference = None
    worst = 0.0
    for n, m, n2, m2 in rng.integers(0, 40, size=(200, 4)):
        from_levels = np.exp(-1j * (freqs[n, m] - freqs[n2, m2]) * t)
        ratio = from_levels / density_operator_phase(params, t, int(n), int(m), int(n2), int(m2))
        reference = ratio if reference is None else reference
        worst = max(worst, abs(ratio - reference))
    check_invariant(worst <= 1e-12, "fockspace", "phase equivalence", f"worst {worst:.2e}")
    return f"worst phase mismatch {worst:.2e}"


# -- entanglement ------------------------------------------------------------


def check_series_against_oracle(config: RunConfig) -> str:
    worst = 0.0
    for t in config.times()[:: max(1, config.t_points // 10)]:
        series = linear_entropy_series(config.params, config.ics, float(t), config.tail_eps)
        state = evolve(config.params, config.ics, float(t), config.tail_eps)
        oracle = linear_entropy(reduce(state, 1))
        worst = max(worst, abs(series - oracle))
    check_invariant(worst <= 1e-8, "entanglement", "series = oracle", f"worst {worst:.2e}")
    return f"worst entropy gap {worst:.2e}"


def check_closed_form_density(config: RunConfig) -> str:
    worst = 0.0
    for t in (0.0, config.t_max / 3, config.t_max):
        closed = reduced_density_closed_form(config.params, config.ics, t, config.tail_eps)
        oracle = reduce(evolve(config.params, config.ics, t, config.tail_eps), 1)
        closed.check_positive()
        worst = max(worst, float(np.max(np.abs(closed.entries - oracle.entries))))
    check_invariant(worst <= 1e-8, "entanglement", "closed-form rho_1", f"worst {worst:.2e}")
    return f"worst entry gap {worst:.2e}"


def check_short_time_forms(config: RunConfig) -> str:
    t = 0.1
    z_form = linear_entropy_short_time(config.params, config.ics, t)
    s_form = short_time_s_form(config.params, config.ics, t)
    if s_form == 0:
        return "decoupled or empty mode; forms both vanish"
    ratio = z_form / s_form
    check_invariant(abs(ratio - 0.5) <= 1e-12, "entanglement", "z/S form ratio", f"{ratio}")
    floors = [
        linear_entropy_short_time(config.params.with_values(hbar=hb), config.ics, t)
        for hb in (1.0, 0.1, 0.01, 0.001)
    ]
    spread = (max(floors) - min(floors)) / max(floors)
    check_invariant(spread <= 1e-6, "entanglement", "hbar-independent floor", f"{spread:.2e}")
    return f"ratio {ratio:.15f}, floor spread {spread:.1e}"


# -- revivals ----------------------------------------------------------------


def check_parseval_and_reconstruction(config: RunConfig) -> str:
    worst_parseval = worst_reconstruction = 0.0
    for r, s in _coprime_pairs(32):
        worst_parseval = max(worst_parseval, parseval_defect(r, s))
        worst_reconstruction = max(worst_reconstruction, reconstruction_residual(r, s, 100))
    check_invariant(worst_parseval <= 1e-12, "revivals", "Parseval", f"{worst_parseval:.2e}")
    check_invariant(
        worst_reconstruction <= 1e-10, "revivals", "reconstruction", f"{worst_reconstruction:.2e}"
    )
    return f"Parseval {worst_parseval:.1e}, reconstruction {worst_reconstruction:.1e}"


def check_cat_fidelity(config: RunConfig) -> str:
    params = config.params.with_values(g=0.0, g1=1.0, hbar=1.0)
    worst = 1.0
    for mean in (1.0, 4.0, 9.0):
        ics = InitialConditions(math.sqrt(2 * mean), 0.0, math.sqrt(2.0), 0.0)
        for r, s in _coprime_pairs(8):
            worst = min(worst, cat_state_fidelity(params, ics, r, s, config.tail_eps))
    check_invariant(worst > 1 - 1e-6, "revivals", "cat fidelity at g = 0", f"lowest {worst:.12f}")
    return f"lowest fidelity {worst:.12f}"


def check_cat_prevented(config: RunConfig) -> str:
    ics = InitialConditions(math.sqrt(8.0), 0.0, math.sqrt(8.0), 0.0)
    decoupled = config.params.with_values(g=0.0, g1=1.0, hbar=1.0)
    coupled = decoupled.with_values(g=0.1)
    for r, s in ((1, 2), (1, 3), (3, 2), (1, 4)):
        free = cat_overlap(decoupled, ics, r, s, config.tail_eps)
        bound = cat_overlap(coupled, ics, r, s, config.tail_eps)
        check_invariant(bound < free, "revivals", "coupling prevents cats", f"({r},{s})")
    return "fidelity drops with g = 0.1 for all sampled (r, s)"


# -- wavefunction ------------------------------------------------------------


def check_cat_normalization(config: RunConfig) -> str:
    worst = 0.0
    for q in (0.0, 1.0, 3.0):
        spec = WavefunctionSpec(WavefunctionKind.CAT, b=1.0, q=q, lam=0.2)
        grid = reference_grid(spec)
        values = cat_xrep(spec, grid.centers)
        worst = max(worst, abs(grid.dx * float(np.sum(np.abs(values) ** 2)) - 1.0))
        mirrored = np.max(np.abs(np.abs(cat_xrep(spec, -grid.centers)) - np.abs(values)))
        check_invariant(mirrored <= 1e-12, "wavefunction", "mirror symmetry", f"{mirrored:.2e}")
    check_invariant(worst <= 1e-9, "wavefunction", "cat normalization", f"{worst:.2e}")
    return f"worst norm error {worst:.2e}"


def check_number_orthonormality(config: RunConfig) -> str:
    grid = PositionGrid.symmetric(1e-3, 20.0)
    table = np.array([number_xrep(n, 1.0, grid.centers) for n in range(41)])
    gram = grid.dx * table @ table.T
    worst = float(np.max(np.abs(gram - np.eye(41))))
    check_invariant(worst <= 1e-8, "wavefunction", "number orthonormality", f"{worst:.2e}")
    return f"worst Gram error {worst:.2e}"


# -- resolution --------------------------------------------------------------


def check_binning_conservation(config: RunConfig) -> str:
    spec = WavefunctionSpec(WavefunctionKind.CAT, b=1.0, q=3.0, lam=0.2)
    worst = 0.0
    for dx in (0.01, 0.5, 3.5):
        detectors = detectors_for(dx, 12.0)
        fine = detectors.refined(2 * math.ceil(dx / 2e-3) + 1)
        psi = sample(spec, fine)
        worst = max(worst, abs(float(np.sum(bin(psi, detectors).probs)) - psi.norm()))
    check_invariant(worst <= 1e-12, "resolution", "binning conserves mass", f"{worst:.2e}")
    return f"worst mass change {worst:.2e}"


def check_schwartz_and_indicator(config: RunConfig) -> str:
    rng = np.random.default_rng(SEED + 4)
    grid = PositionGrid(-1.0, 0.05, 41)
    for _ in range(200):
        a = SampledWavefunction(grid, rng.normal(size=41) + 1j * rng.normal(size=41)).normalized()
        b = SampledWavefunction(grid, rng.normal(size=41) + 1j * rng.normal(size=41)).normalized()
        overlap = abs(discrete_inner(a, b))
        check_invariant(overlap <= 1 + 1e-12, "resolution", "Schwartz bound", f"{overlap}")
        indicator = commutator_indicator(a)
        check_invariant(0 <= indicator <= 1, "resolution", "indicator in [0, 1]", f"{indicator}")
    return "200 random pairs"


def check_ehrenfest_order(config: RunConfig) -> str:
    potential = harmonic(1.0, 1.0)
    grid = detectors_for(1e-3, 14.0)
    residuals = []
    for points in (17, 33):
        times = np.linspace(0.0, 2 * math.pi, points)
        states = coherent_trajectory(1.0, 1.0, 1.0, 2.0, times, grid)
        residuals.append(ehrenfest_residual(potential, states, times))
    ratio = residuals[0] / residuals[1]
    check_invariant(ratio > 3.5, "resolution", "second order in dt", f"ratio {ratio:.2f}")
    return f"refinement ratio {ratio:.2f}"


def check_schmidt_low_resolution(config: RunConfig) -> str:
    detectors = detectors_for(10.0, 10.0)
    fine = detectors.refined(1001)
    pair = schmidt_pair_from_number_states((0.5, 0.5), 1.0, fine)
    report = schmidt_separability(pair, detectors)
    check_invariant(
        report.joint_distribution_defect < 1e-9,
        "resolution",
        "separability at dx = 10 b",
        f"defect {report.joint_distribution_defect:.2e}",
    )
    return f"defect {report.joint_distribution_defect:.2e}"


CHECKS: list[tuple[str, str, CheckFn]] = [
    ("core", "amplitude round trip", check_amplitude_round_trip),
    ("core", "canonical round trip", check_canonical_round_trip),
    ("dynamics", "energy shell", check_energy_shell),
    ("dynamics", "amplitude bounds", check_amplitude_bounds),
    ("dynamics", "oracle consistency", check_oracle_consistency),
    ("dynamics", "Hamilton integration", check_hamilton_integration),
    ("fockspace", "norm conservation", check_norm_conservation),
    ("fockspace", "reduced densities", check_reduced_densities),
    ("fockspace", "phase equivalence", check_phase_equivalence),
    ("entanglement", "series = oracle", check_series_against_oracle),
    ("entanglement", "closed-form rho_1", check_closed_form_density),
    ("entanglement", "short-time forms", check_short_time_forms),
    ("revivals", "Parseval and reconstruction", check_parseval_and_reconstruction),
    ("revivals", "cat fidelity at g = 0", check_cat_fidelity),
    ("revivals", "coupling prevents cats", check_cat_prevented),
    ("wavefunction", "cat normalization", check_cat_normalization),
    ("wavefunction", "number orthonormality", check_number_orthonormality),
    ("resolution", "binning conserves mass", check_binning_conservation),
    ("resolution", "Schwartz bound and indicator range", check_schwartz_and_indicator),
    ("resolution", "Ehrenfest second order in dt", check_ehrenfest_order),
    ("resolution", "separability at dx = 10 b", check_schmidt_low_resolution),
]


def run_selftest(config: RunConfig) -> list[CheckResult]:
    """Run every check; failures are collected, not raised."""
    results = []
    for module, invariant, fn in CHECKS:
        start = time.perf_counter()
        try:
            detail = fn(config)
            passed = True
        except InvariantViolation as e:
            detail = e.detail
            passed = False
        elapsed = time.perf_counter() - start
        logger.info("%s / %s: %s (%.2fs)", module, invariant, "ok" if passed else "FAILED", elapsed)
        results.append(CheckResult(module, invariant, passed, detail, elapsed))
    return results
