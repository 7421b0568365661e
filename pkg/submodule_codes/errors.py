"""Errors raised by the submodule code kernel."""
from typing import Optional


class SubmoduleCodesError(Exception):
    """Base class for domain errors (command line exit status 1)."""


class RingMismatchError(SubmoduleCodesError):
    """Operands belong to different rings."""


class NotDivisibleError(SubmoduleCodesError):
    """Requested quotient does not exist in the ring."""


class ShapeError(SubmoduleCodesError):
    """Matrix or vector dimensions do not agree."""


class AmbientError(SubmoduleCodesError):
    """Vector outside of the ambient module, or ambient modules differ."""


class CapExceededError(SubmoduleCodesError):
    """Enumeration would exceed a configured limit."""


class UnsupportedRingError(SubmoduleCodesError):
    """Ring is invalid or lacks the structure an operation needs."""


class CodeError(SubmoduleCodesError):
    """Invalid code or construction parameters."""


class ConfigError(SubmoduleCodesError):
    """Inconsistent simulation or trapping parameters."""


class FormatError(SubmoduleCodesError, ValueError):
    """Malformed text input (command line exit status 2)."""

    def __init__(
        self,
        message: str,
        line: int = 1,
        column: int = 1,
        source: Optional[str] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.source = source

    def __str__(self) -> str:
        return f"{self.source or '<input>'}:{self.line}:{self.column}: {self.message}"
