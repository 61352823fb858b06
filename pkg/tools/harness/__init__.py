"""Experiment registry, CSV artifacts and the run entry point."""

from .artifacts import format_value, read_body, write_csv
from .experiments import EXPERIMENTS, ExperimentContext
from .parallel import parallel_map
from .runner import EXIT_CONFIG, EXIT_INVARIANT, EXIT_OK, RunResult, RunSpec, run
from .selftest import CHECKS, CheckResult, run_selftest

__all__ = [
    "CHECKS",
    "EXIT_CONFIG",
    "EXIT_INVARIANT",
    "EXIT_OK",
    "EXPERIMENTS",
    "CheckResult",
    "ExperimentContext",
    "RunResult",
    "RunSpec",
    "format_value",
    "parallel_map",
    "read_body",
    "run",
    "run_selftest",
    "write_csv",
]
