"""
Exception types raised by the emulator.

Every error the package raises on purpose derives from `EmulatorError`, so the
CLI and the Streamlit pages can catch one type and show a short message.
"Unencodable" encodings are not errors: they come back as NaN values.
"""

from __future__ import annotations


class EmulatorError(Exception):
    """Base class for all emulator errors."""


class DomainError(EmulatorError, ValueError):
    """An argument is outside the domain of the operation."""


class CapacityError(DomainError):
    """A layout or instruction word cannot hold what was asked of it."""


class UndecodableError(DomainError):
    """No candidate state index produces a finite angle on the curve."""


class ModuleReuseError(DomainError):
    """An operation appears twice in one convolution."""


class EntangledQubitError(EmulatorError):
    """Components were requested for a qubit that is not in a pure state."""


class UnknownDeviceError(EmulatorError, LookupError):
    """No device profile matches the requested name."""


class CircuitSyntaxError(EmulatorError, ValueError):
    """A circuit description line could not be parsed."""

    def __init__(self, line_no: int, line: str, reason: str):
        super().__init__(f"line {line_no}: {reason}: {line.strip()!r}")
        self.line_no = line_no
        self.line = line
        self.reason = reason
