"""
APX Format Module

Reads and writes the ASPARTIX fact format:

    % comment
    arg(a).
    att(a,b).

Several statements may share a line. Corpus files concatenate APX blocks
separated by ``%---`` comment lines.
"""

import re
from typing import Dict, List, Tuple, Union

from core.errors import CapacityError, ParseError
from core.framework import ArgumentationFramework, MAX_ARGUMENTS
from formats.diagnostics import ParseDiagnostic, at_offset

NAME = r"[A-Za-z0-9_]+"
BLOCK_SEPARATOR = "%---"

_STATEMENT = re.compile(
    rf"(?P<predicate>arg|att)\s*\(\s*(?P<first>{NAME})\s*(?:,\s*(?P<second>{NAME})\s*)?\)\s*\."
)
_SKIP = re.compile(r"(?:\s+|%[^\n]*)+")


def decode(data: Union[str, bytes]) -> str:
    """Decode input bytes as UTF-8, reporting undecodable input as a parse error."""
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError([ParseDiagnostic(1, exc.start + 1, "input is not valid UTF-8")]) from None


def parse_apx(data: Union[str, bytes]) -> ArgumentationFramework:
    """Parse one APX framework; argument order of declaration fixes indices.

    Attack endpoints must be declared somewhere in the text.
    """
    text = decode(data)
    diagnostics: List[ParseDiagnostic] = []
    names: List[str] = []
    index: Dict[str, int] = {}
    attacks: List[Tuple[str, str, int]] = []

    offset = 0
    while offset < len(text):
        skip = _SKIP.match(text, offset)
        if skip:
            offset = skip.end()
            continue
        match = _STATEMENT.match(text, offset)
        if not match:
            end = text.find(".", offset)
            end = len(text) if end < 0 else end + 1
            diagnostics.append(at_offset(text, offset, "syntax error", text[offset:end]))
            offset = end
            continue

        predicate, first, second = match.group("predicate", "first", "second")
        if predicate == "arg":
            if second is not None:
                diagnostics.append(at_offset(text, offset, "arg/1 takes one argument", match.group(0)))
            elif first in index:
                diagnostics.append(at_offset(text, offset, f"duplicate declaration of argument '{first}'", match.group(0)))
            else:
                index[first] = len(names)
                names.append(first)
        elif second is None:
            diagnostics.append(at_offset(text, offset, "att/2 takes two arguments", match.group(0)))
        else:
            attacks.append((first, second, offset))
        offset = match.end()

    pairs = []
    for source, target, where in attacks:
        missing = [name for name in (source, target) if name not in index]
        if missing:
            diagnostics.append(
                at_offset(text, where, f"undeclared argument '{missing[0]}' in attack", f"att({source},{target}).")
            )
        else:
            pairs.append((index[source], index[target]))

    if len(names) > MAX_ARGUMENTS:
        diagnostics.append(ParseDiagnostic(1, 1, f"{len(names)} arguments exceed the capacity of {MAX_ARGUMENTS}"))
    if diagnostics:
        raise ParseError(diagnostics)
    try:
        return ArgumentationFramework.from_attacks(len(names), pairs, names)
    except CapacityError as exc:
        raise ParseError([ParseDiagnostic(1, 1, str(exc))]) from None


def write_apx(af: ArgumentationFramework) -> str:
    names = af.names
    lines = [f"arg({name})." for name in names]
    lines.extend(f"att({names[i]},{names[j]})." for i, j in sorted(af.attacks))
    return "\n".join(lines) + ("\n" if lines else "")


def split_blocks(data: Union[str, bytes]) -> List[str]:
    """Split a corpus file into APX blocks at ``%---`` separator lines.

    A blank block after a trailing separator is dropped; any other blank
    block is the empty framework.
    """
    text = decode(data)
    blocks: List[List[str]] = [[]]
    for line in text.splitlines(keepends=True):
        if line.strip() == BLOCK_SEPARATOR:
            blocks.append([])
        else:
            blocks[-1].append(line)
    joined = ["".join(block) for block in blocks]
    if len(joined) > 1 and not joined[-1].strip():
        joined.pop()
    return joined


def parse_apx_corpus(data: Union[str, bytes]) -> List[ArgumentationFramework]:
    return [parse_apx(block) for block in split_blocks(data)]


def write_apx_corpus(frameworks) -> str:
    return f"{BLOCK_SEPARATOR}\n".join(write_apx(af) for af in frameworks)
