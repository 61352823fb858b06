"""Model types, configuration and shared numerics."""

from .config import (
    ALLOWED_KEYS,
    DEFAULTS,
    RunConfig,
    build_run_config,
    load_run_config,
    parse_config_text,
    parse_overrides,
)
from .errors import (
    ClassicalityError,
    ConfigError,
    DomainError,
    InvariantViolation,
    check_invariant,
)
from .grid import PositionGrid, odd_refinement
from .numerics import complex_sum, real_sum
from .params import (
    Amplitudes,
    InitialConditions,
    ModelParams,
    PhaseSpacePoint,
    Transcription,
    canonical_transform,
    check_mode,
    derive_amplitudes,
    inverse_canonical_transform,
    other_mode,
    reconstruct_phase_space,
)

__all__ = [
    "ALLOWED_KEYS",
    "DEFAULTS",
    "Amplitudes",
    "ClassicalityError",
    "ConfigError",
    "DomainError",
    "InitialConditions",
    "InvariantViolation",
    "ModelParams",
    "PhaseSpacePoint",
    "PositionGrid",
    "RunConfig",
    "Transcription",
    "build_run_config",
    "canonical_transform",
    "check_invariant",
    "check_mode",
    "complex_sum",
    "derive_amplitudes",
    "inverse_canonical_transform",
    "load_run_config",
    "odd_refinement",
    "other_mode",
    "parse_config_text",
    "parse_overrides",
    "real_sum",
    "reconstruct_phase_space",
]
