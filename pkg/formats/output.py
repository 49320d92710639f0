"""
Result Output Module

Serializes extension sets and reports for stdout. Machine output is
deterministic: JSON keys are sorted and nothing time-dependent is included
unless a caller adds it.
"""

import hashlib
import json
from typing import Any, Dict, List, Optional

from core.argument_sets import ExtensionSet
from core.framework import ArgumentationFramework
from formats.apx import write_apx

ICCMA = "iccma"
JSON = "json"
STYLES = (ICCMA, JSON)


def af_hash(af: ArgumentationFramework) -> str:
    """SHA-256 of the framework's APX rendering."""
    return hashlib.sha256(write_apx(af).encode("utf-8")).hexdigest()


def extension_names(af: ArgumentationFramework, extensions: ExtensionSet) -> List[List[str]]:
    return [af.names_of(e) for e in extensions]


def write_extensions(
    extensions: ExtensionSet,
    af: ArgumentationFramework,
    style: str = ICCMA,
    semantics: Optional[str] = None,
) -> str:
    """Render an extension set.

    ``iccma`` prints ``[[a,d],[b]]`` and ``NO`` for the empty collection;
    ``json`` prints an object with the name arrays, the semantics token and
    the framework hash.
    """
    named = extension_names(af, extensions)
    if style == ICCMA:
        if not named:
            return "NO"
        return "[" + ",".join("[" + ",".join(names) + "]" for names in named) + "]"
    if style == JSON:
        payload: Dict[str, Any] = {
            "af_hash": af_hash(af),
            "arguments": list(af.names),
            "extensions": named,
            "semantics": semantics,
        }
        return dumps(payload, indent=None)
    raise ValueError(f"unknown output style '{style}', expected one of {', '.join(STYLES)}")


def dumps(payload: Any, indent: Optional[int] = 2) -> str:
    """Deterministic JSON text."""
    separators = (",", ":") if indent is None else (",", ": ")
    return json.dumps(payload, indent=indent, sort_keys=True, separators=separators)
