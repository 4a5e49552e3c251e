"""Exceptions raised across rectpack.

Every error carries an ``exit_code`` so the command line driver can map it to
a process status without inspecting messages.
"""

from typing import Any, Optional, Tuple


class RectpackError(Exception):
    exit_code = 1

    def __init__(self, message: str, pair: Optional[Tuple[Any, Any]] = None):
        super().__init__(message)
        self.message = message
        self.pair = pair


class ValidationError(RectpackError, ValueError):
    """An instance, file or parameter set failed validation."""

    def __init__(self, message: str, rect_id: Optional[str] = None):
        super().__init__(message)
        self.rect_id = rect_id


class ParseError(RectpackError, ValueError):
    """A file could not be parsed; ``location`` names the line or field."""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class PreconditionViolated(RectpackError, ValueError):
    """An algorithm was called on a family outside its input class."""


class MissingAssignment(RectpackError, KeyError):
    """A coloring leaves some rectangle without a color."""

    def __str__(self):
        return self.message


class UnknownId(RectpackError, KeyError):
    """A referenced id is not part of the instance."""

    def __str__(self):
        return self.message


class BudgetExceeded(RectpackError, RuntimeError):
    exit_code = 3


class SolverFailure(RectpackError, RuntimeError):
    exit_code = 3


class CertificateInvalid(RectpackError, AssertionError):
    """A 3-sparse certificate failed its pairwise check (implementation bug)."""

    exit_code = 4


class InternalBoundExceeded(RectpackError, AssertionError):
    """A sub-coloring used more colors than its palette cap (implementation bug)."""

    exit_code = 4
