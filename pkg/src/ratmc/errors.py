"""Exception types shared across the package."""

from __future__ import annotations


class RatmcError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RatmcError):
    """Malformed or inconsistent input values (bad labels, alphabet mismatch, ...)."""


class FormatError(InputError):
    """Error in one of the line-oriented text formats."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class FormulaSyntaxError(InputError):
    """Syntax error in the concrete formula or regex grammar."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"at position {position}: {message}"
        super().__init__(message)


class UndecidableConstructError(RatmcError):
    """A construct whose model checking problem is undecidable on these models."""


class CountingScopeError(RatmcError):
    """A counting modality used outside the fragment that supports it."""
