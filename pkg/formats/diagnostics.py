"""
Parse Diagnostics Module

Positioned messages produced by the text parsers.
"""

from dataclasses import dataclass
from typing import Tuple

ERROR = "error"


@dataclass(frozen=True)
class ParseDiagnostic:
    """One parser message; line and column are 1-based."""

    line: int
    column: int
    message: str
    severity: str = ERROR
    span: str = ""

    def __str__(self) -> str:
        text = f"line {self.line}, column {self.column}: {self.severity}: {self.message}"
        if self.span:
            text += f" (at '{self.span}')"
        return text


def position(text: str, offset: int) -> Tuple[int, int]:
    """1-based line and column of a character offset."""
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def at_offset(text: str, offset: int, message: str, span: str = "") -> ParseDiagnostic:
    line, column = position(text, offset)
    return ParseDiagnostic(line, column, message, span=span[:40])
