"""Exception hierarchy and source positions for error reporting."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Position of a construct in program text (1-based line and column)."""

    line: int
    column: int
    length: int = 0

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ArglogError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ArglogError):
    """Malformed program or query text."""

    def __init__(self, message: str, span: SourceSpan | None = None):
        self.span = span
        if span is not None:
            message = f"{span}: {message}"
        super().__init__(message)


class ValidationError(ArglogError):
    """A parsed program breaks a well-formedness constraint."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(v.message for v in self.violations))


class GroundingError(ArglogError):
    """The program cannot be finitely grounded as written."""


class CapExceeded(ArglogError):
    """A configured resource cap would be exceeded; the operation refuses to run."""
