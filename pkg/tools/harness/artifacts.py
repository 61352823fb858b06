"""CSV artifacts with a commented parameter header."""

import csv
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Sequence

import yaml

from .. import __version__

logger = logging.getLogger(__name__)

GENERATED_PREFIX = "# generated: "


def format_value(value: Any) -> str:
    """Render a cell; floats use a round-trip exact representation."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _header_lines(
    name: str, parameters: Mapping[str, Any], notes: Optional[Mapping[str, Any]]
) -> list[str]:
    lines = [
        f"# {name}",
        f"# artifact version: {__version__}",
        f"{GENERATED_PREFIX}{datetime.now().isoformat(timespec='seconds')}",
        "# parameters:",
    ]
    dumped = yaml.safe_dump(dict(parameters), default_flow_style=False, sort_keys=True)
    lines.extend(f"#   {line}" for line in dumped.splitlines())
    if notes:
        lines.append("# notes:")
        dumped_notes = yaml.safe_dump(dict(notes), default_flow_style=False, sort_keys=True)
        lines.extend(f"#   {line}" for line in dumped_notes.splitlines())
    return lines


def write_csv(
    path: Path,
    name: str,
    columns: Sequence[str],
    rows: Iterable[Mapping[str, Any]],
    parameters: Mapping[str, Any],
    notes: Optional[Mapping[str, Any]] = None,
) -> Path:
    """
    Write rows to path with a commented header.

    Args:
        path: Output file
        name: Artifact name recorded in the header
        columns: Column order
        rows: Row mappings keyed by column
        parameters: Full parameter set, dumped as YAML into the header
        notes: Extra findings recorded in the header (verdicts, summaries)

    Returns:
        The written path
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        for line in _header_lines(name, parameters, notes):
            f.write(line + "\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        count = 0
        for row in rows:
            writer.writerow([format_value(row.get(column)) for column in columns])
            count += 1
    logger.info("Wrote %s (%d rows)", path, count)
    return path


def read_body(path: Path) -> str:
    """CSV content without the generated-timestamp line, for determinism checks."""
    text = path.read_text(encoding="utf-8")
    return "".join(
        line for line in text.splitlines(keepends=True) if not line.startswith(GENERATED_PREFIX)
    )
