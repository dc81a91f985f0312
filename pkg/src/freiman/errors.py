"""Exception types shared across the package."""

from __future__ import annotations


class FreimanError(Exception):
    """Base class for all library errors."""


class InvalidArgument(FreimanError, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedInput(FreimanError, ValueError):
    """Input is well formed but outside what the operation is defined for.

    Raised for example when a rank-based invariant is requested for an ideal
    that is not equigenerated.
    """


class ResourceLimit(FreimanError, RuntimeError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, message: str, required: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class ParseError(FreimanError, ValueError):
    """Malformed monomial or poset text."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InternalInvariantError(FreimanError, AssertionError):
    """A proved identity failed; this indicates an implementation bug."""
