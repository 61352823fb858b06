"""Position-representation states: coherent, two-component cat and number states."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from ..core.errors import DomainError

ArrayLike = Union[float, np.ndarray]


class WavefunctionKind(Enum):
    COHERENT = "coherent"
    CAT = "cat"
    NUMBER = "number"


@dataclass(frozen=True)
class WavefunctionSpec:
    """Shape of a position-space state.

    q is the peak-separation parameter (the coherent peak sits at q/2), b the
    width sqrt(hbar / (m omega)), lam the reduced wavelength hbar / p (inf for
    zero momentum) and n the excitation of a number state.
    """

    kind: WavefunctionKind
    b: float
    q: float = 0.0
    lam: float = math.inf
    n: int = 0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.b) and self.b > 0):
            raise DomainError(f"width b must be positive and finite, got {self.b}")
        if not math.isfinite(self.q):
            raise DomainError(f"q must be finite, got {self.q}")
        if self.kind is not WavefunctionKind.NUMBER and (self.lam == 0 or math.isnan(self.lam)):
            raise DomainError("lambda must be nonzero for oscillatory kinds")
        if self.kind is WavefunctionKind.NUMBER and (self.n < 0 or int(self.n) != self.n):
            raise DomainError(f"number state index must be a non-negative integer, got {self.n}")


def _gaussian_prefactor(b: float) -> float:
    return (b * math.sqrt(math.pi)) ** -0.5


def _displaced(x: ArrayLike, center: float, slope: float, b: float) -> np.ndarray:
    shifted = np.asarray(x, dtype=float) - center
    return _gaussian_prefactor(b) * np.exp(-(shifted**2) / (2 * b * b) + 1j * shifted * slope)


def coherent_xrep(spec: WavefunctionSpec, x: ArrayLike) -> np.ndarray:
    """<x|z> = (b sqrt(pi))^{-1/2} exp[-(x - q/2)^2 / 2b^2] exp[i (x - q/2) / lam]."""
    return _displaced(x, spec.q / 2, 1.0 / spec.lam, spec.b)


def _minus_component(spec: WavefunctionSpec, x: ArrayLike) -> np.ndarray:
    """<x|-z>: centered at -q/2 with phase slope -1/lam."""
    return _displaced(x, -spec.q / 2, -1.0 / spec.lam, spec.b)


def component_overlap(spec: WavefunctionSpec) -> float:
    """<phi_+|phi_-> = exp(-q^2 / 4b^2 - b^2 / lam^2), real for this pair."""
    return math.exp(-(spec.q**2) / (4 * spec.b**2) - (spec.b / spec.lam) ** 2)


def cat_normalization(spec: WavefunctionSpec) -> float:
    """N = [2 (1 + <phi_+|phi_->)]^{1/2}, i.e. exp(-2|z|^2) with z = (q/2b + i b/lam)/sqrt(2)."""
    return math.sqrt(2.0 * (1.0 + component_overlap(spec)))


def cat_xrep(spec: WavefunctionSpec, x: ArrayLike) -> np.ndarray:
    """G(x) = [phi_+(x) + phi_-(x)] / N."""
    return (coherent_xrep(spec, x) + _minus_component(spec, x)) / cat_normalization(spec)


def incoherent_xrep(spec: WavefunctionSpec, x: ArrayLike) -> np.ndarray:
    """Density of the equal-weight mixture (|phi_+|^2 + |phi_-|^2) / 2."""
    return 0.5 * (np.abs(coherent_xrep(spec, x)) ** 2 + np.abs(_minus_component(spec, x)) ** 2)


def number_xrep(n: int, b: float, x: ArrayLike) -> np.ndarray:
    """Normalized harmonic eigenfunction psi_n(x) by the Hermite-function recurrence."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    if b <= 0:
        raise DomainError(f"width b must be positive, got {b}")
    xi = np.asarray(x, dtype=float) / b
    previous = np.zeros_like(xi)
    current = _gaussian_prefactor(b) * np.exp(-0.5 * xi * xi)
    for k in range(int(n)):
        previous, current = current, (
            math.sqrt(2.0 / (k + 1)) * xi * current - math.sqrt(k / (k + 1)) * previous
        )
    return current


def evaluate(spec: WavefunctionSpec, x: ArrayLike) -> np.ndarray:
    """Complex amplitude of spec at x."""
    if spec.kind is WavefunctionKind.COHERENT:
        return coherent_xrep(spec, x)
    if spec.kind is WavefunctionKind.CAT:
        return cat_xrep(spec, x)
    return number_xrep(spec.n, spec.b, x).astype(complex)


def peak_positions(spec: WavefunctionSpec) -> tuple[float, ...]:
    """Outermost probability peaks, used for grid-coverage checks."""
    if spec.kind is WavefunctionKind.COHERENT:
        return (spec.q / 2,)
    if spec.kind is WavefunctionKind.CAT:
        return (-abs(spec.q) / 2, abs(spec.q) / 2)
    turning = math.sqrt(2 * spec.n + 1) * spec.b if spec.n > 0 else 0.0
    return (-turning, turning)
