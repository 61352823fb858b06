"""Discrete inner product, momentum and the commutator classicality indicator."""

import numpy as np

from ..core.errors import DomainError
from ..core.numerics import complex_sum
from ..wavefunction import SampledWavefunction


def forward_difference(values: np.ndarray, dx: float) -> np.ndarray:
    """(f_{k+1} - f_k) / dx, with the last entry copied from the one before it."""
    if values.size < 2:
        raise DomainError("a forward difference needs at least two samples")
    diff = np.empty_like(values)
    diff[:-1] = (values[1:] - values[:-1]) / dx
    diff[-1] = diff[-2]
    return diff


def discrete_inner(psi: SampledWavefunction, phi: SampledWavefunction) -> complex:
    """<psi|phi> = sum_k dx conj(psi_k) phi_k on a shared grid."""
    if not psi.grid.matches(phi.grid):
        raise DomainError("inner product needs both states on the same grid")
    return psi.grid.dx * complex_sum(np.conj(psi.amps) * phi.amps)


def discrete_momentum(psi: SampledWavefunction, hbar: float = 1.0) -> SampledWavefunction:
    """(hbar / i) (psi_{k+1} - psi_k) / dx; the result is not normalized."""
    if psi.grid.count < 2:
        raise DomainError("discrete momentum needs at least two samples")
    return SampledWavefunction(psi.grid, -1j * hbar * forward_difference(psi.amps, psi.grid.dx))


def commutator_indicator(psi: SampledWavefunction) -> float:
    """|sum_k dx conj(psi_k) psi_{k+1}|: 1 at fine resolution, 0 when one detector holds psi."""
    psi.require_normalized()
    if psi.grid.count < 2:
        return 0.0
    value = abs(psi.grid.dx * complex_sum(np.conj(psi.amps[:-1]) * psi.amps[1:]))
    return min(value, 1.0)
