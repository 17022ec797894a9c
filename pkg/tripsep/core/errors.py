"""
Exceptions raised by the criterion services.

Each error carries the process exit code the CLI returns for it: 1 for invalid
input, 2 for a violated density-matrix invariant, 3 for a refused size guard.
"""
from typing import Any


class CriterionError(Exception):
    """Base error with an exit code and a human-readable detail."""
    exit_code: int = 1

    def __init__(self, detail: str, value: Any = None):
        self.detail = detail
        self.value = value
        message = detail if value is None else f"{detail} (got {value!r})"
        super().__init__(message)


class InvalidInputError(CriterionError):
    """Malformed arguments or files."""
    exit_code = 1


class InvalidDimensionError(InvalidInputError):
    """Local dimensions or array shapes that do not fit together."""


class InvalidSpecError(InvalidInputError):
    """State specification that cannot be generated."""


class InvalidStateError(CriterionError):
    """Density matrix violating a numerical invariant."""
    exit_code = 2


class SizeError(CriterionError):
    """Problem too large for the requested route, or wrongly sized oracle input."""
    exit_code = 3
