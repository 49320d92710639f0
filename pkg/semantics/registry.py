"""
Named Semantics Registry Module

This module holds the registered vacuous-reduct instantiations (the starred
semantics of the correspondence grid plus undisputed, cogent stable and
ub-complete), the token parser shared with the command line, and
normalization of specifications to registry-free trees.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

from core.errors import UnknownSemanticsError
from semantics.classical import Semantics
from semantics.spec import Classical, Named, SemanticsSpec, Vac, depth, vac

MAX_NESTING = 8


@dataclass(frozen=True)
class NamedRegistryEntry:
    """A registered semantics token and what it stands for."""

    token: str
    definition: SemanticsSpec
    title: str
    provenance: str
    known_equalities: Tuple[SemanticsSpec, ...] = field(default_factory=tuple)


def _entry(token, base, vacuity, title, provenance, *equalities) -> NamedRegistryEntry:
    return NamedRegistryEntry(
        token=token,
        definition=vac(base, vacuity),
        title=title,
        provenance=provenance,
        known_equalities=tuple(vac(b, v) for b, v in equalities),
    )


_ENTRIES: List[NamedRegistryEntry] = [
    _entry("ud", "cf", "adm", "undisputed", "grid row cf, columns adm and sst",
           ("cf", "co"), ("cf", "pr"), ("cf", "sst")),
    _entry("stb-cog", "cf", "cf", "cogent stable", "grid rows cf and na, column cf",
           ("cf", "na"), ("na", "cf"), ("na", "na")),
    _entry("co-ub", "cf", "gr", "ub-complete", "grid row cf, column gr"),
    _entry("adm-s1", "adm", "id", "adm*1", "grid rows adm and co, column id",
           ("co", "id")),
    _entry("adm-s2", "adm", "stb", "adm*2", "grid row adm, column stb"),
    _entry("adm-s3", "adm", "cf", "adm*3", "grid rows adm, co and pr, column cf",
           ("co", "cf"), ("pr", "cf"), ("adm", "na"), ("co", "na"), ("pr", "na")),
    _entry("co-s1", "co", "stb", "co*1", "grid row co, column stb"),
    _entry("gr-s1", "gr", "adm", "gr*1", "grid row gr, columns adm and sst",
           ("gr", "co"), ("gr", "pr"), ("gr", "sst")),
    _entry("gr-s2", "gr", "id", "gr*2", "grid row gr, column id"),
    _entry("gr-s3", "gr", "stb", "gr*3", "grid row gr, column stb"),
    _entry("gr-s4", "gr", "cf", "gr*4", "grid row gr, column cf", ("gr", "na")),
    _entry("id-s1", "id", "adm", "id*1", "grid row id, columns adm and sst",
           ("id", "co"), ("id", "pr"), ("id", "sst")),
    _entry("id-s2", "id", "stb", "id*2", "grid row id, column stb"),
    _entry("id-s3", "id", "cf", "id*3", "grid row id, column cf", ("id", "na")),
    _entry("sst-s1", "sst", "cf", "sst*1", "grid row sst, column cf", ("sst", "na")),
    _entry("cf-s1", "cf", "id", "cf*1", "grid row cf, column id"),
    _entry("cf-s2", "cf", "stb", "cf*2", "grid row cf, column stb"),
    _entry("na-s1", "na", "adm", "na*1", "grid row na, columns adm and sst",
           ("na", "co"), ("na", "pr"), ("na", "sst")),
    _entry("na-s2", "na", "gr", "na*2", "grid row na, column gr"),
    _entry("na-s3", "na", "id", "na*3", "grid row na, column id"),
    _entry("na-s4", "na", "stb", "na*4", "grid row na, column stb"),
]

REGISTRY: Dict[str, NamedRegistryEntry] = {entry.token: entry for entry in _ENTRIES}

CLASSICAL_TOKENS: Tuple[str, ...] = tuple(s.value for s in Semantics)
NAMED_TOKENS: Tuple[str, ...] = tuple(REGISTRY)


def resolve(token: str) -> SemanticsSpec:
    """Return the registry definition of a named token."""
    try:
        return REGISTRY[token].definition
    except KeyError:
        raise UnknownSemanticsError(f"unknown semantics token '{token}'") from None


def parse_semantics(text: str) -> SemanticsSpec:
    """Parse a command-line semantics token.

    Grammar: a classical token, a registered name, or ``vac:<spec>:<spec>``
    in prefix form, so ``vac:vac:cf:adm:stb`` nests the combinator.
    """
    parts = text.strip().split(":")
    if not parts or any(not p for p in parts):
        raise UnknownSemanticsError(f"malformed semantics token '{text}'")
    if any("(" in p or ")" in p for p in parts):
        raise UnknownSemanticsError(f"parentheses are not allowed in semantics tokens: '{text}'")
    if len(parts) >= 2 ** (MAX_NESTING + 1):
        raise UnknownSemanticsError(f"semantics nests deeper than {MAX_NESTING} levels: '{text}'")

    position = 0

    def parse_one() -> SemanticsSpec:
        nonlocal position
        if position >= len(parts):
            raise UnknownSemanticsError(f"incomplete semantics token '{text}'")
        part = parts[position]
        position += 1
        if part == "vac":
            base = parse_one()
            vacuity = parse_one()
            return Vac(base, vacuity)
        if part in CLASSICAL_TOKENS:
            return Classical(Semantics(part))
        if part in REGISTRY:
            return Named(part)
        raise UnknownSemanticsError(f"unknown semantics token '{part}' in '{text}'")

    spec = parse_one()
    if position != len(parts):
        raise UnknownSemanticsError(f"trailing input after semantics token in '{text}'")
    if depth(spec) > MAX_NESTING:
        raise UnknownSemanticsError(f"semantics nests deeper than {MAX_NESTING} levels: '{text}'")
    return spec


def normalize(spec: SemanticsSpec) -> SemanticsSpec:
    """Replace every named token by its definition, recursively."""

    def expand(node: SemanticsSpec, seen: Set[str]) -> SemanticsSpec:
        if isinstance(node, Classical):
            return node
        if isinstance(node, Vac):
            return Vac(expand(node.base, seen), expand(node.vacuity, seen))
        if node.name in seen:
            raise UnknownSemanticsError(f"cyclic alias through '{node.name}'")
        return expand(resolve(node.name), seen | {node.name})

    return expand(spec, set())


def display_name(spec: SemanticsSpec) -> str:
    """Token for a normalized spec with every registered subtree shown by name.

    ``vac(vac(cf,adm),stb)`` displays as ``vac:ud:stb``.
    """
    for entry in _ENTRIES:
        if entry.definition == spec:
            return entry.token
    if isinstance(spec, Vac):
        return f"vac:{display_name(spec.base)}:{display_name(spec.vacuity)}"
    return spec.token


def describe_tokens() -> str:
    """One-paragraph listing of every accepted token, for ``--help`` texts."""
    named = ", ".join(f"{e.token}={e.definition.token}" for e in _ENTRIES)
    return (
        f"classical: {' '.join(CLASSICAL_TOKENS)}; named: {named}; "
        "generic: vac:<base>:<vacuity> (nest with repeated vac:)"
    )
