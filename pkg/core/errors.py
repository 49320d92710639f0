"""
Error Types Module

This module defines the exception hierarchy shared by every package.
"""

from typing import List, TYPE_CHECKING

if TYPE_CHECKING:
    from formats.diagnostics import ParseDiagnostic


class ArgumentationError(Exception):
    """Base class for all errors raised by the solver and the harness."""


class MalformedSetError(ArgumentationError, ValueError):
    """An argument set names arguments outside its framework."""


class CapacityError(ArgumentationError):
    """An input exceeds a fixed capacity limit."""


class UnknownSemanticsError(ArgumentationError, KeyError):
    """A semantics token could not be resolved."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class InvalidCorpusError(ArgumentationError, ValueError):
    """A corpus description is malformed or out of range."""


class InvariantViolation(ArgumentationError, AssertionError):
    """A theorem-backed internal invariant did not hold."""


class ParseError(ArgumentationError):
    """Input text could not be parsed; carries one or more diagnostics."""

    def __init__(self, diagnostics: List["ParseDiagnostic"]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))

