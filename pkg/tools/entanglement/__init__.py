"""Entanglement dynamics between the two oscillators."""

from .density import (
    decoherence_factor,
    decoherence_matrix,
    reduced_density_closed_form,
    rotating_amplitude,
)
from .entropy import (
    EntropyRecord,
    ShortTimeVerdict,
    entropy_record,
    entropy_rows,
    linear_entropy_series,
    linear_entropy_series_printed,
    linear_entropy_short_time,
    short_time_s_form,
    short_time_verdict,
)

__all__ = [
    "EntropyRecord",
    "ShortTimeVerdict",
    "decoherence_factor",
    "decoherence_matrix",
    "entropy_record",
    "entropy_rows",
    "linear_entropy_series",
    "linear_entropy_series_printed",
    "linear_entropy_short_time",
    "reduced_density_closed_form",
    "rotating_amplitude",
    "short_time_s_form",
    "short_time_verdict",
]
