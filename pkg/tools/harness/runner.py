"""Run a named experiment and map failures onto exit codes."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..core import ConfigError, DomainError, InvariantViolation, Transcription, load_run_config
from .experiments import EXPERIMENTS, ExperimentContext

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INVARIANT = 3


@dataclass(frozen=True)
class RunSpec:
    command: str
    config_path: Optional[Path] = None
    out_dir: Path = Path("out")
    overrides: tuple[str, ...] = ()
    threads: int = 1
    tail_eps: Optional[float] = None
    transcription: Transcription = Transcription.PRINTED


@dataclass
class RunResult:
    exit_code: int
    artifacts: list[Path] = field(default_factory=list)
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK


def _snapshot(out_dir: Path) -> dict[Path, int]:
    return {path: path.stat().st_mtime_ns for path in out_dir.glob("*.csv")}


def run(spec: RunSpec) -> RunResult:
    """
    Execute one experiment.

    Config problems and out-of-domain parameters exit with 2; a violated
    numerical invariant exits with 3 and names the module and invariant.
    Artifacts written before an invariant failure are still reported.

    Args:
        spec: What to run and where to write

    Returns:
        RunResult with exit code, written files and a one-line message
    """
    if spec.command not in EXPERIMENTS:
        known = ", ".join(EXPERIMENTS)
        return RunResult(EXIT_CONFIG, message=f"unknown command '{spec.command}' (known: {known})")
    if spec.threads < 1:
        return RunResult(EXIT_CONFIG, message=f"threads must be >= 1, got {spec.threads}")

    try:
        config = load_run_config(spec.config_path, spec.overrides, spec.tail_eps)
    except ConfigError as e:
        logger.error("Config error: %s", e)
        return RunResult(EXIT_CONFIG, message=str(e))

    try:
        spec.out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        return RunResult(EXIT_CONFIG, message=f"cannot create {spec.out_dir}: {e.strerror or e}")

    ctx = ExperimentContext(
        config=config,
        out_dir=spec.out_dir,
        threads=spec.threads,
        transcription=spec.transcription,
    )
    logger.info("Running %s (threads=%d, tail_eps=%g)", spec.command, spec.threads, config.tail_eps)
    before = _snapshot(spec.out_dir)
    try:
        artifacts = EXPERIMENTS[spec.command](ctx)
    except DomainError as e:
        logger.error("Domain error in %s: %s", spec.command, e)
        return RunResult(EXIT_CONFIG, message=f"domain error: {e}")
    except InvariantViolation as e:
        logger.error("%s", e)
        after = _snapshot(spec.out_dir)
        written = sorted(path for path, stamp in after.items() if before.get(path) != stamp)
        return RunResult(EXIT_INVARIANT, artifacts=written, message=str(e))

    return RunResult(EXIT_OK, artifacts=artifacts, message=f"wrote {len(artifacts)} file(s)")
