"""Exception types shared by every module of the harness."""

from pathlib import Path
from typing import Optional, Union


class ClassicalityError(Exception):
    """Base class for all harness errors."""


class DomainError(ClassicalityError, ValueError):
    """Raised when an operation is called outside its precondition."""


class ConfigError(ClassicalityError):
    """Raised when a run-configuration file or override cannot be used."""

    def __init__(self, path: Optional[Union[str, Path]], line: int, reason: str):
        self.path = str(path) if path is not None else "<overrides>"
        self.line = line
        self.reason = reason
        super().__init__(f"{self.path}:{line}: {reason}")


class InvariantViolation(ClassicalityError):
    """Raised when a numerical invariant of a module does not hold."""

    def __init__(self, module: str, invariant: str, detail: str):
        self.module = module
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"[{module}] invariant '{invariant}' violated: {detail}")


def check_invariant(condition: bool, module: str, invariant: str, detail: str) -> None:
    """Raise InvariantViolation unless condition holds."""
    if not condition:
        raise InvariantViolation(module, invariant, detail)
