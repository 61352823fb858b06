"""Compensated reductions used wherever a sum must not depend on evaluation order."""

import math

import numpy as np


def real_sum(values: np.ndarray) -> float:
    """Exactly rounded sum of real values."""
    return math.fsum(np.ravel(values).tolist())


def complex_sum(values: np.ndarray) -> complex:
    """Exactly rounded sum of complex values, component by component."""
    flat = np.ravel(values)
    return complex(math.fsum(flat.real.tolist()), math.fsum(flat.imag.tolist()))
