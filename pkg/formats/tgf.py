"""
TGF Format Module

Trivial graph format: one argument name per line, a ``#`` line, then one
``source target`` attack per line.
"""

import re
from typing import Dict, List, Union

from core.errors import ParseError
from core.framework import ArgumentationFramework, MAX_ARGUMENTS
from formats.apx import NAME, decode
from formats.diagnostics import ParseDiagnostic

_NAME = re.compile(rf"^{NAME}$")


def parse_tgf(data: Union[str, bytes]) -> ArgumentationFramework:
    """Parse a TGF framework; node order fixes indices."""
    text = decode(data)
    diagnostics: List[ParseDiagnostic] = []
    names: List[str] = []
    index: Dict[str, int] = {}
    pairs = []
    separated = False

    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        column = raw.find(line) + 1
        if line == "#":
            if separated:
                diagnostics.append(ParseDiagnostic(number, column, "second '#' separator", span=line))
            separated = True
            continue

        fields = line.split()
        if not separated:
            if len(fields) != 1:
                diagnostics.append(
                    ParseDiagnostic(number, column, "edge line before the '#' separator", span=line[:40])
                )
            elif not _NAME.match(fields[0]):
                diagnostics.append(ParseDiagnostic(number, column, "invalid argument name", span=line[:40]))
            elif fields[0] in index:
                diagnostics.append(
                    ParseDiagnostic(number, column, f"duplicate declaration of argument '{fields[0]}'", span=line[:40])
                )
            else:
                index[fields[0]] = len(names)
                names.append(fields[0])
            continue

        if len(fields) != 2:
            diagnostics.append(ParseDiagnostic(number, column, "expected 'source target'", span=line[:40]))
            continue
        missing = [name for name in fields if name not in index]
        if missing:
            diagnostics.append(
                ParseDiagnostic(number, column, f"undeclared argument '{missing[0]}' in attack", span=line[:40])
            )
            continue
        pairs.append((index[fields[0]], index[fields[1]]))

    if not separated:
        diagnostics.append(ParseDiagnostic(text.count("\n") + 1, 1, "missing '#' separator"))
    if len(names) > MAX_ARGUMENTS:
        diagnostics.append(ParseDiagnostic(1, 1, f"{len(names)} arguments exceed the capacity of {MAX_ARGUMENTS}"))
    if diagnostics:
        raise ParseError(diagnostics)
    return ArgumentationFramework.from_attacks(len(names), pairs, names)


def write_tgf(af: ArgumentationFramework) -> str:
    names = af.names
    lines = list(names) + ["#"]
    lines.extend(f"{names[i]} {names[j]}" for i, j in sorted(af.attacks))
    return "\n".join(lines) + "\n"
