"""Named experiments: each turns a run configuration into CSV artifacts."""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

from ..core import InvariantViolation, RunConfig, Transcription, derive_amplitudes
from ..dynamics import hbar_scan, trajectory_rows
from ..entanglement import (
    decoherence_matrix,
    entropy_rows,
    linear_entropy_short_time,
    reduced_density_closed_form,
    short_time_verdict,
)
from ..fockspace import dump_probabilities, evolve, mode_cutoffs, reduce
from ..resolution import (
    FIG2_PANELS,
    commutator_sweep,
    ehrenfest_run,
    fig2_panel,
    fig2_wavefunction,
    schmidt_sweep,
)
from ..revivals import (
    cat_norm,
    cat_state_fidelity,
    component_count,
    mixture_convergence,
    parseval_defect,
    reconstruction_residual,
    revival_rows,
)
from ..wavefunction import wavefunction_rows
from .artifacts import write_csv
from .parallel import parallel_map
from .selftest import run_selftest

logger = logging.getLogger(__name__)

HBAR_LIST = (1.0, 0.1, 0.01, 0.001)
REVIVAL_PAIRS = ((2, 1), (1, 2), (3, 2), (1, 3), (2, 3), (1, 4), (1, 5))
CAT_PAIRS = ((2, 1), (1, 2), (3, 2), (1, 3))
COMMUTATOR_RATIOS = (0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
SCHMIDT_RESOLUTIONS = (0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0)


@dataclass(frozen=True)
class ExperimentContext:
    config: RunConfig
    out_dir: Path
    threads: int = 1
    transcription: Transcription = Transcription.PRINTED

    def parameters(self, **extra: object) -> dict[str, object]:
        data: dict[str, object] = dict(self.config.as_dict())
        data["transcription"] = self.transcription.value
        data.update(extra)
        return data


Experiment = Callable[[ExperimentContext], list[Path]]


def _flatten(chunks: list[list[dict]]) -> list[dict]:
    return [row for chunk in chunks for row in chunk]


def run_trajectory(ctx: ExperimentContext) -> list[Path]:
    cfg = ctx.config
    rows = _flatten(
        parallel_map(
            lambda t: trajectory_rows(cfg.params, cfg.ics, [t], ctx.transcription),
            cfg.times(),
            ctx.threads,
        )
    )
    columns = ["t", "mode", "q_cl", "p_cl", "q_qm", "p_qm", "A", "phi", "residual_norm"]
    path = ctx.out_dir / "trajectory.csv"
    return [write_csv(path, "trajectory", columns, rows, ctx.parameters())]


def run_hbar_scan(ctx: ExperimentContext) -> list[Path]:
    cfg = ctx.config
    t = cfg.t_max
    rows = []
    for mode in (1, 2):
        limit = cfg.params.nonlinearity(mode) * cfg.ics.action(mode) * t / 2
        for row in hbar_scan(cfg.params, cfg.ics, t, HBAR_LIST, mode, ctx.transcription):
            floor = linear_entropy_short_time(cfg.params.with_values(hbar=row.hbar), cfg.ics, t)
            rows.append(
                {
                    "hbar": row.hbar,
                    "mode": mode,
                    "residual_angle": row.residual_angle,
                    "residual_norm": row.residual_norm,
                    "residual_angle_limit": limit,
                    "entropy_floor": floor,
                }
            )
    columns = [
        "hbar",
        "mode",
        "residual_angle",
        "residual_norm",
        "residual_angle_limit",
        "entropy_floor",
    ]
    path = ctx.out_dir / "hbar_scan.csv"
    return [write_csv(path, "hbar-scan", columns, rows, ctx.parameters(t=t))]


def run_entropy(ctx: ExperimentContext) -> list[Path]:
    cfg = ctx.config
    rows = _flatten(
        parallel_map(
            lambda t: entropy_rows(cfg.params, cfg.ics, [t], cfg.tail_eps),
            cfg.times(),
            ctx.threads,
        )
    )
    verdict = short_time_verdict(cfg.params, cfg.ics, cfg.tail_eps)
    notes = {
        "short_time_match": verdict.verdict,
        "z_form_max_relative_error": verdict.z_form_error,
        "s_form_max_relative_error": verdict.s_form_error,
    }
    columns = ["t", "E_exact", "E_short_zform", "E_short_sform", "E_oracle"]
    path = ctx.out_dir / "entropy.csv"
    return [write_csv(path, "entropy", columns, rows, ctx.parameters(), notes)]


def run_reduced_density(ctx: ExperimentContext) -> list[Path]:
    cfg = ctx.config
    t = cfg.t_max
    closed = reduced_density_closed_form(cfg.params, cfg.ics, t, cfg.tail_eps)
    state = evolve(cfg.params, cfg.ics, t, cfg.tail_eps)
    oracle = reduce(state, 1)
    decoherence = decoherence_matrix(cfg.params, cfg.ics, t, closed.dim)
    rows = [
        {
            "n": n,
            "n_prime": k,
            "rho_closed_re": float(closed.entries[n, k].real),
            "rho_closed_im": float(closed.entries[n, k].imag),
            "rho_oracle_re": float(oracle.entries[n, k].real),
            "rho_oracle_im": float(oracle.entries[n, k].imag),
            "D_abs": float(abs(decoherence[n, k])),
        }
        for n in range(closed.dim)
        for k in range(closed.dim)
    ]
    notes: dict[str, object] = {
        "max_entry_gap": float(np.max(np.abs(closed.entries - oracle.entries)))
    }
    if cfg.params.g != 0:
        report = mixture_convergence(cfg.params, cfg.ics, t, cfg.tail_eps)
        notes.update(
            purity=report.purity,
            mixture_purity=report.mixture_purity,
            max_offdiag=report.max_offdiag,
        )
    columns = [
        "n",
        "n_prime",
        "rho_closed_re",
        "rho_closed_im",
        "rho_oracle_re",
        "rho_oracle_im",
        "D_abs",
    ]
    path = ctx.out_dir / "reduced_density.csv"
    return [
        write_csv(path, "reduced-density", columns, rows, ctx.parameters(t=t), notes),
        write_csv(
            ctx.out_dir / "fock_probabilities.csv",
            "fock probabilities",
            ["n", "m", "prob"],
            dump_probabilities(state),
            ctx.parameters(t=t),
        ),
    ]


def run_revivals(ctx: ExperimentContext) -> list[Path]:
    cfg = ctx.config
    rows = _flatten(
        parallel_map(
            lambda pair: revival_rows(cfg.params, cfg.ics, [pair], cfg.tail_eps),
            REVIVAL_PAIRS,
            ctx.threads,
        )
    )
    columns = ["r", "s", "l", "fidelity_g0", "fidelity_gon", "purity", "mixture_purity"]
    return [write_csv(ctx.out_dir / "revivals.csv", "revivals", columns, rows, ctx.parameters())]


def run_cat_fidelity(ctx: ExperimentContext) -> list[Path]:
    cfg = ctx.config
    decoupled = cfg.params.with_values(g=0.0)
    amplitudes = derive_amplitudes(cfg.ics, decoupled)
    count, _ = mode_cutoffs(amplitudes, cfg.tail_eps)

    def row(pair: tuple[int, int]) -> dict[str, float]:
        r, s = pair
        return {
            "r": r,
            "s": s,
            "l": component_count(r, s),
            "fidelity": cat_state_fidelity(decoupled, cfg.ics, r, s, cfg.tail_eps),
            "cat_norm": cat_norm(r, s, amplitudes.z10, count),
            "parseval_defect": parseval_defect(r, s),
            "reconstruction_residual": reconstruction_residual(r, s),
        }

    rows = parallel_map(row, CAT_PAIRS, ctx.threads)
    columns = ["r", "s", "l", "fidelity", "cat_norm", "parseval_defect", "reconstruction_residual"]
    path = ctx.out_dir / "cat_fidelity.csv"
    return [write_csv(path, "cat-fidelity", columns, rows, ctx.parameters(g_used=0.0))]


def run_fig2(ctx: ExperimentContext) -> list[Path]:
    panels = parallel_map(
        lambda item: fig2_panel(item[0], *item[1]), list(FIG2_PANELS.items()), ctx.threads
    )
    paths = []
    for panel in panels:
        params = ctx.parameters(
            panel=panel.label, q_over_b=panel.q, dx_over_b=panel.dx, lam_over_b=0.2
        )
        notes = {"visibility": panel.visibility}
        paths.append(
            write_csv(
                ctx.out_dir / f"fig2_{panel.label}.csv",
                f"fig2 panel {panel.label}",
                ["x_k", "P_k", "density"],
                panel.distribution.rows(),
                params,
                notes,
            )
        )
    for name, q in (("near", 1.0), ("far", 3.0)):
        rows = [{"dx": p.dx, "visibility": p.visibility} for p in panels if p.q == q]
        paths.append(
            write_csv(
                ctx.out_dir / f"fig2_visibility_{name}.csv",
                f"fig2 visibility ({name} peaks)",
                ["dx", "visibility"],
                rows,
                ctx.parameters(q_over_b=q, lam_over_b=0.2),
            )
        )
        paths.append(
            write_csv(
                ctx.out_dir / f"fig2_wavefunction_{name}.csv",
                f"fig2 wavefunction ({name} peaks)",
                ["x", "re", "im", "prob"],
                wavefunction_rows(fig2_wavefunction(q)),
                ctx.parameters(q_over_b=q, lam_over_b=0.2),
            )
        )
    return paths


def run_commutator_sweep(ctx: ExperimentContext) -> list[Path]:
    rows = commutator_sweep(COMMUTATOR_RATIOS)
    path = ctx.out_dir / "commutator_sweep.csv"
    params = ctx.parameters(sigma=1.0)
    return [write_csv(path, "commutator-sweep", ["dx", "indicator"], rows, params)]


def run_ehrenfest(ctx: ExperimentContext) -> list[Path]:
    p = ctx.config.params
    result = ehrenfest_run(p.mass, p.omega1, p.hbar)
    b = math.sqrt(p.hbar / (p.mass * p.omega1))
    amplitude = 2.0 * b
    fine_rows = [
        {"t": float(t), "mean_x": float(x), "analytic_x": amplitude * math.cos(p.omega1 * t)}
        for t, x in zip(result.times, result.mean_x)
    ]
    coarse_rows = [
        {"t": float(t), "x_c": xc, "x_newton": float(xn)}
        for t, xc, xn in zip(result.coarse_times, result.coarse_positions, result.newton)
    ]
    notes = {
        "residual": result.residual,
        "residual_bound": 1e-3 * p.mass * p.omega1**2 * amplitude,
        "max_deviation_bins": result.max_deviation_bins,
        "resolved_fraction": result.resolved_fraction,
    }
    params = ctx.parameters(amplitude_over_b=2.0, coarse_dx_over_b=10.0)
    return [
        write_csv(
            ctx.out_dir / "ehrenfest.csv",
            "ehrenfest",
            ["t", "mean_x", "analytic_x"],
            fine_rows,
            params,
            notes,
        ),
        write_csv(
            ctx.out_dir / "newton_coarse.csv",
            "coarse newton",
            ["t", "x_c", "x_newton"],
            coarse_rows,
            params,
            notes,
        ),
    ]


def run_schmidt_sweep(ctx: ExperimentContext) -> list[Path]:
    rows = _flatten(
        parallel_map(lambda dx: schmidt_sweep([dx]), SCHMIDT_RESOLUTIONS, ctx.threads)
    )
    path = ctx.out_dir / "schmidt_sweep.csv"
    params = ctx.parameters(weights=[0.5, 0.5], modes="number states n = 0, 1")
    return [write_csv(path, "schmidt-sweep", ["dx", "max_offdiag", "defect"], rows, params)]


def run_selftest_experiment(ctx: ExperimentContext) -> list[Path]:
    results = run_selftest(ctx.config)
    rows = [
        {"module": r.module, "invariant": r.invariant, "passed": r.passed, "detail": r.detail}
        for r in results
    ]
    path = write_csv(
        ctx.out_dir / "selftest.csv",
        "selftest",
        ["module", "invariant", "passed", "detail"],
        rows,
        ctx.parameters(),
    )
    failed = [r for r in results if not r.passed]
    if failed:
        first = failed[0]
        raise InvariantViolation(first.module, first.invariant, first.detail)
    return [path]


EXPERIMENTS: dict[str, Experiment] = {
    "trajectory": run_trajectory,
    "hbar-scan": run_hbar_scan,
    "entropy": run_entropy,
    "reduced-density": run_reduced_density,
    "revivals": run_revivals,
    "cat-fidelity": run_cat_fidelity,
    "fig2": run_fig2,
    "commutator-sweep": run_commutator_sweep,
    "ehrenfest": run_ehrenfest,
    "schmidt-sweep": run_schmidt_sweep,
    "selftest": run_selftest_experiment,
}
