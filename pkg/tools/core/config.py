"""Run-configuration files: `key = value` lines (or a flat YAML mapping)."""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

import numpy as np
import yaml

from .errors import ConfigError, DomainError
from .params import InitialConditions, ModelParams

logger = logging.getLogger(__name__)

MODEL_KEYS = ("omega1", "omega2", "g1", "g2", "g", "hbar", "mass")
INITIAL_KEYS = ("q10", "p10", "q20", "p20")

# Oracle-equivalence sweep: |z1|^2 = |z2|^2 = 4 at hbar = 1.
DEFAULTS: dict[str, float] = {
    "omega1": 1.0,
    "omega2": 1.0,
    "g1": 0.05,
    "g2": 0.05,
    "g": 0.02,
    "hbar": 1.0,
    "mass": 1.0,
    "q10": math.sqrt(8.0),
    "p10": 0.0,
    "q20": math.sqrt(8.0),
    "p20": 0.0,
    "tail_eps": 1e-12,
    "resolution_eps": 0.05,
    "t_max": 20.0,
    "t_points": 50,
}

ALLOWED_KEYS = frozenset(DEFAULTS)


@dataclass(frozen=True)
class RunConfig:
    """Everything a command needs from the configuration layer."""

    params: ModelParams
    ics: InitialConditions
    tail_eps: float = 1e-12
    resolution_eps: float = 0.05
    t_max: float = 20.0
    t_points: int = 50
    source: Optional[str] = None

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.t_points)

    def as_dict(self) -> dict[str, float]:
        """Flat parameter set recorded in artifact headers."""
        data: dict[str, float] = {}
        data.update(self.params.as_dict())
        data.update(self.ics.as_dict())
        data["tail_eps"] = self.tail_eps
        data["resolution_eps"] = self.resolution_eps
        data["t_max"] = self.t_max
        data["t_points"] = self.t_points
        return data


def _check_value(key: str, value: float) -> Optional[str]:
    """Return a reason string when value is unusable for key."""
    if not math.isfinite(value):
        return f"{key} must be finite"
    if key in ("hbar", "mass") and value <= 0:
        return f"{key} must be positive"
    if key in ("tail_eps", "resolution_eps") and not 0 < value < 1:
        return f"{key} must lie in (0, 1)"
    if key == "t_max" and value < 0:
        return "t_max must be non-negative"
    if key == "t_points" and (value < 1 or value != int(value)):
        return "t_points must be a positive integer"
    return None


def _parse_value(key: str, raw: object, path: Optional[Path], line: int) -> float:
    try:
        value = float(raw)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise ConfigError(path, line, f"value for '{key}' is not a number: {raw!r}") from None
    reason = _check_value(key, value)
    if reason:
        raise ConfigError(path, line, reason)
    return value


def parse_config_text(text: str, path: Optional[Path] = None) -> dict[str, float]:
    """Parse `key = value` lines; `#` starts a comment."""
    values: dict[str, float] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(path, number, f"expected 'key = value', got {raw_line.strip()!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in ALLOWED_KEYS:
            raise ConfigError(path, number, f"unknown key '{key}'")
        if key in values:
            raise ConfigError(path, number, f"duplicate key '{key}'")
        values[key] = _parse_value(key, raw, path, number)
    return values


def _parse_yaml(text: str, path: Path) -> dict[str, float]:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        line = mark.line + 1 if mark is not None else 0
        raise ConfigError(path, line, f"invalid YAML: {e}") from None
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(path, 0, "YAML config must be a flat mapping")
    values: dict[str, float] = {}
    for key, raw in data.items():
        if key not in ALLOWED_KEYS:
            raise ConfigError(path, 0, f"unknown key '{key}'")
        values[key] = _parse_value(key, raw, path, 0)
    return values


def parse_overrides(overrides: Iterable[str]) -> dict[str, float]:
    """Parse repeated `key=value` command-line overrides."""
    values: dict[str, float] = {}
    for item in overrides:
        if "=" not in item:
            raise ConfigError(None, 0, f"override must be key=value, got {item!r}")
        key, raw = (part.strip() for part in item.split("=", 1))
        if key not in ALLOWED_KEYS:
            raise ConfigError(None, 0, f"unknown key '{key}'")
        values[key] = _parse_value(key, raw, None, 0)
    return values


def build_run_config(values: dict[str, float], source: Optional[str] = None) -> RunConfig:
    """Assemble a RunConfig from parsed values layered over DEFAULTS."""
    merged = {**DEFAULTS, **values}
    try:
        params = ModelParams(**{key: float(merged[key]) for key in MODEL_KEYS})
        ics = InitialConditions(**{key: float(merged[key]) for key in INITIAL_KEYS})
    except DomainError as e:
        raise ConfigError(source, 0, str(e)) from None
    return RunConfig(
        params=params,
        ics=ics,
        tail_eps=float(merged["tail_eps"]),
        resolution_eps=float(merged["resolution_eps"]),
        t_max=float(merged["t_max"]),
        t_points=int(merged["t_points"]),
        source=source,
    )


def load_run_config(
    path: Optional[Path] = None,
    overrides: Iterable[str] = (),
    tail_eps: Optional[float] = None,
) -> RunConfig:
    """
    Load a run configuration.

    Args:
        path: Config file (`key = value` text, or `.yaml`/`.yml`); None uses defaults
        overrides: `key=value` strings applied after the file
        tail_eps: Truncation tolerance taking precedence over file and overrides

    Returns:
        Validated RunConfig
    """
    values: dict[str, float] = {}
    if path is not None:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(path, 0, f"cannot read config: {e.strerror or e}") from None
        if path.suffix.lower() in (".yaml", ".yml"):
            values.update(_parse_yaml(text, path))
        else:
            values.update(parse_config_text(text, path))
        logger.debug("Loaded %d keys from %s", len(values), path)

    values.update(parse_overrides(overrides))
    if tail_eps is not None:
        values["tail_eps"] = _parse_value("tail_eps", tail_eps, path, 0)

    return build_run_config(values, source=str(path) if path is not None else None)
