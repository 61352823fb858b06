"""Model parameters, initial conditions and the phase-space algebra around them.

All quantities are dimensionless program reals. Actions (S_k, hbar) are
measured in the same reference action unit, so z = (q + ip)/sqrt(2 hbar)
is dimensionless and |z|^2 = S / (2 hbar) is a mean photon number.
"""

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DomainError

MODES = (1, 2)


class Transcription(Enum):
    """Which version of a closed form to evaluate.

    PRINTED is the literal published expression. CORRECTED is the form
    resummed from the Fock-basis density operator, which is what the
    brute-force oracle reproduces.
    """

    PRINTED = "printed"
    CORRECTED = "corrected"


def check_mode(mode: int) -> int:
    """Validate a mode index and return it."""
    if mode not in MODES:
        raise DomainError(f"mode must be 1 or 2, got {mode!r}")
    return mode


def other_mode(mode: int) -> int:
    """Return the index of the partner mode."""
    return 2 if check_mode(mode) == 1 else 1


def _require_finite(owner: str, values: dict[str, float]) -> None:
    for name, value in values.items():
        if not math.isfinite(value):
            raise DomainError(f"{owner}.{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class ModelParams:
    """Frequencies, nonlinearities, coupling, Planck parameter and mass."""

    omega1: float
    omega2: float
    g1: float
    g2: float
    g: float
    hbar: float
    mass: float = 1.0

    def __post_init__(self) -> None:
        _require_finite("ModelParams", dataclasses.asdict(self))
        if self.hbar <= 0:
            raise DomainError(f"hbar must be positive, got {self.hbar}")
        if self.mass <= 0:
            raise DomainError(f"mass must be positive, got {self.mass}")

    def omega(self, mode: int) -> float:
        return self.omega1 if check_mode(mode) == 1 else self.omega2

    def nonlinearity(self, mode: int) -> float:
        return self.g1 if check_mode(mode) == 1 else self.g2

    def with_values(self, **changes: float) -> "ModelParams":
        """Return a copy with some fields replaced (validated again)."""
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict[str, float]:
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class PhaseSpacePoint:
    """A real (q, p) pair."""

    q: float
    p: float

    def __post_init__(self) -> None:
        _require_finite("PhaseSpacePoint", {"q": self.q, "p": self.p})

    @property
    def action(self) -> float:
        return self.q * self.q + self.p * self.p


@dataclass(frozen=True)
class InitialConditions:
    """Initial phase-space points of both modes, in action^(1/2) units."""

    q10: float
    p10: float
    q20: float
    p20: float

    def __post_init__(self) -> None:
        _require_finite("InitialConditions", dataclasses.asdict(self))

    def point(self, mode: int) -> PhaseSpacePoint:
        if check_mode(mode) == 1:
            return PhaseSpacePoint(self.q10, self.p10)
        return PhaseSpacePoint(self.q20, self.p20)

    def action(self, mode: int) -> float:
        """S_k = q_k0^2 + p_k0^2, always derived from the stored point."""
        return self.point(mode).action

    def as_dict(self) -> dict[str, float]:
        return dataclasses.asdict(self)


class Amplitudes(NamedTuple):
    """Coherent amplitudes and actions derived from initial conditions."""

    z10: complex
    z20: complex
    S1: float
    S2: float

    def z(self, mode: int) -> complex:
        return self.z10 if check_mode(mode) == 1 else self.z20

    def S(self, mode: int) -> float:
        return self.S1 if check_mode(mode) == 1 else self.S2

    def mean_photons(self, mode: int) -> float:
        return abs(self.z(mode)) ** 2


def derive_amplitudes(ics: InitialConditions, params: ModelParams) -> Amplitudes:
    """Map initial phase-space points to coherent amplitudes z_k0 and actions S_k."""
    scale = math.sqrt(2.0 * params.hbar)
    return Amplitudes(
        z10=complex(ics.q10, ics.p10) / scale,
        z20=complex(ics.q20, ics.p20) / scale,
        S1=ics.action(1),
        S2=ics.action(2),
    )


def reconstruct_phase_space(z: complex, hbar: float) -> PhaseSpacePoint:
    """Inverse of the amplitude map: (q, p) = sqrt(2 hbar) (Re z, Im z)."""
    if hbar <= 0:
        raise DomainError(f"hbar must be positive, got {hbar}")
    scale = math.sqrt(2.0 * hbar)
    return PhaseSpacePoint(scale * z.real, scale * z.imag)


def _stiffness(mass: float, omega: float) -> float:
    product = mass * omega
    if not product > 0:
        raise DomainError(f"mass*omega must be positive, got {product}")
    return math.sqrt(product)


def canonical_transform(Q: float, P: float, mass: float, omega: float) -> PhaseSpacePoint:
    """Map position-momentum (Q, P) to action-dimension coordinates (q, p)."""
    root = _stiffness(mass, omega)
    return PhaseSpacePoint(Q * root, P / root)


def inverse_canonical_transform(
    point: PhaseSpacePoint, mass: float, omega: float
) -> tuple[float, float]:
    """Map (q, p) back to position-momentum (Q, P)."""
    root = _stiffness(mass, omega)
    return point.q / root, point.p * root
