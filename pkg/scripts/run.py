#!/usr/bin/env python3
"""Run a named low-resolution classicality experiment and write CSV artifacts."""

import csv
import logging
import sys
from pathlib import Path
from typing import Optional

import click
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

# Add parent to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from tools.core import Transcription
from tools.harness import EXIT_INVARIANT, EXPERIMENTS, RunSpec, run

# LOWRES_THREADS / LOWRES_TAIL_EPS may come from a project .env
_env_path = Path(__file__).parent.parent / ".env"
load_dotenv(_env_path)

console = Console()


def setup_logging(verbose: bool, log_file: Optional[Path]) -> None:
    """Rich console handler, plus a plain file handler when requested."""
    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(logging.DEBUG if verbose else logging.INFO)

    handler = RichHandler(console=console, show_path=False)
    handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    root.addHandler(handler)

    if log_file is not None:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s | %(levelname)s | %(message)s")
        )
        root.addHandler(file_handler)


def _print_selftest(path: Path) -> None:
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(line for line in f if not line.startswith("#"))
        rows = list(reader)

    table = Table(title="Selftest")
    table.add_column("Module", style="cyan")
    table.add_column("Invariant")
    table.add_column("Result")
    table.add_column("Detail", style="dim")
    for row in rows:
        mark = "[green]✓[/green]" if row["passed"] == "true" else "[red]✗[/red]"
        table.add_row(row["module"], row["invariant"], mark, row["detail"])
    console.print(table)


@click.command()
@click.argument("command", type=click.Choice(sorted(EXPERIMENTS)))
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Run-config file (key = value lines, or .yaml)",
)
@click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=Path("out"),
    show_default=True,
    help="Directory for CSV artifacts",
)
@click.option(
    "--set",
    "overrides",
    multiple=True,
    metavar="KEY=VALUE",
    help="Override one config key (repeatable)",
)
@click.option(
    "--threads",
    type=int,
    default=1,
    show_default=True,
    envvar="LOWRES_THREADS",
    help="Worker threads for parameter sweeps",
)
@click.option(
    "--tail-eps",
    type=float,
    default=None,
    envvar="LOWRES_TAIL_EPS",
    help="Fock-space truncation tolerance (overrides config)",
)
@click.option(
    "--transcription",
    type=click.Choice([t.value for t in Transcription]),
    default=Transcription.PRINTED.value,
    show_default=True,
    help="Closed-form dynamics: as printed, or with the factor-2 corrections",
)
@click.option(
    "--log-file",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write a plain-text log here",
)
@click.option("--verbose", "-v", is_flag=True, help="Show debug logging")
def main(
    command: str,
    config_path: Optional[Path],
    out_dir: Path,
    overrides: tuple[str, ...],
    threads: int,
    tail_eps: Optional[float],
    transcription: str,
    log_file: Optional[Path],
    verbose: bool,
) -> None:
    """Run experiment COMMAND and write its CSV artifacts to --out."""
    setup_logging(verbose, log_file)

    spec = RunSpec(
        command=command,
        config_path=config_path,
        out_dir=out_dir,
        overrides=tuple(overrides),
        threads=threads,
        tail_eps=tail_eps,
        transcription=Transcription(transcription),
    )
    result = run(spec)

    if command == "selftest" and result.artifacts:
        _print_selftest(result.artifacts[0])

    if result.artifacts:
        table = Table(title=f"{command}: {len(result.artifacts)} artifact(s)")
        table.add_column("File", style="cyan")
        for path in result.artifacts:
            table.add_row(str(path))
        console.print(table)

    if result.ok:
        console.print(f"[green]✓[/green] {result.message}")
    elif result.exit_code == EXIT_INVARIANT:
        console.print(f"[red]✗ Invariant failure:[/red] {result.message}")
    else:
        console.print(f"[red]✗ Error:[/red] {result.message}")

    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
