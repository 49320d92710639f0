"""
Classical Semantics Module

This module enumerates extensions of the nine classical semantics by
depth-first search over the conflict-free part of the subset lattice, and
provides the direct characterizations used as cross-check oracles.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterator, List

from core.argument_sets import ArgumentSet, ExtensionSet, canonical, is_strict_subset, is_subset, members
from core.errors import InvariantViolation, UnknownSemanticsError
from core.framework import ArgumentationFramework, lift

logger = logging.getLogger(__name__)

DEFAULT_CACHE_SIZE = 65536


class Semantics(str, Enum):
    """The classical semantics, valued by their command-line token."""

    CF = "cf"
    NA = "na"
    ADM = "adm"
    CO = "co"
    PR = "pr"
    GR = "gr"
    ID = "id"
    STB = "stb"
    SST = "sst"

    @classmethod
    def parse(cls, token: str) -> "Semantics":
        try:
            return cls(token)
        except ValueError:
            raise UnknownSemanticsError(f"unknown classical semantics '{token}'") from None

    def __str__(self) -> str:
        return self.value


# Semantics whose search can stop at the first witness
LAZY_SEMANTICS = frozenset({Semantics.CF, Semantics.NA, Semantics.ADM, Semantics.CO, Semantics.STB})


def iter_conflict_free(af: ArgumentationFramework) -> Iterator[ArgumentSet]:
    """Yield every conflict-free set; the empty set comes first.

    Conflict-free sets are downward closed, so only conflict-free sets are
    ever extended.
    """
    n = af.arg_count
    loops = af.self_attackers()
    conflict = [af.out_mask(i) | af.in_mask(i) for i in range(n)]

    def extend(start: int, current: ArgumentSet, blocked: ArgumentSet) -> Iterator[ArgumentSet]:
        yield current
        for j in range(start, n):
            bit = 1 << j
            if (blocked | loops) & bit:
                continue
            yield from extend(j + 1, current | bit, blocked | conflict[j])

    return extend(0, 0, 0)


def _is_naive(af: ArgumentationFramework, candidate: ArgumentSet, loops: ArgumentSet) -> bool:
    free = af.all_arguments & ~candidate & ~loops
    for j in members(free):
        if (af.out_mask(j) | af.in_mask(j)) & candidate == 0:
            return False
    return True


def _maximal(sets: List[ArgumentSet]) -> List[ArgumentSet]:
    return [e for e in sets if not any(is_strict_subset(e, other) for other in sets)]


def grounded_extension(af: ArgumentationFramework) -> ArgumentSet:
    """Least fixed point of the defense operator, iterated from the empty set."""
    current = 0
    while True:
        following = af.defended_set(current)
        if following == current:
            return current
        current = following


def grounded_by_filter(af: ArgumentationFramework) -> ArgumentSet:
    """The complete extension contained in all others (debug oracle)."""
    complete = extensions(af, Semantics.CO)
    least = [e for e in complete if all(is_subset(e, other) for other in complete)]
    if len(least) != 1:
        raise InvariantViolation(f"expected one least complete extension, found {len(least)}")
    return least[0]


def ideal_extension(af: ArgumentationFramework) -> ArgumentSet:
    """The maximal complete extension contained in every preferred extension."""
    preferred = extensions(af, Semantics.PR)
    candidates = [
        e for e in extensions(af, Semantics.CO)
        if all(is_subset(e, p) for p in preferred)
    ]
    maximal = _maximal(candidates)
    if len(maximal) != 1:
        raise InvariantViolation(
            f"ideal extension is not unique on {af}: {len(maximal)} maximal candidates"
        )
    return maximal[0]


def iter_extensions(af: ArgumentationFramework, semantics: Semantics) -> Iterator[ArgumentSet]:
    """Yield the extensions of ``semantics``, lazily where the semantics allows it.

    Order is search order, not canonical order.
    """
    if semantics not in LAZY_SEMANTICS:
        return iter(extensions(af, semantics))

    everything = af.all_arguments
    if semantics is Semantics.CF:
        return iter_conflict_free(af)
    if semantics is Semantics.NA:
        loops = af.self_attackers()
        return (e for e in iter_conflict_free(af) if _is_naive(af, e, loops))
    if semantics is Semantics.ADM:
        return (e for e in iter_conflict_free(af) if is_subset(e, af.defended_set(e)))
    if semantics is Semantics.CO:
        return (e for e in iter_conflict_free(af) if af.defended_set(e) == e)
    # stable
    return (e for e in iter_conflict_free(af) if af.attacked_by(e) == everything & ~e)


def _compute(arg_count: int, relation: int, semantics: Semantics) -> ExtensionSet:
    af = ArgumentationFramework(arg_count, relation)
    if semantics in LAZY_SEMANTICS:
        return canonical(iter_extensions(af, semantics))
    if semantics is Semantics.PR:
        return canonical(_maximal(list(extensions(af, Semantics.CO))))
    if semantics is Semantics.GR:
        return (grounded_extension(af),)
    if semantics is Semantics.ID:
        return (ideal_extension(af),)
    if semantics is Semantics.SST:
        preferred = extensions(af, Semantics.PR)
        ranges = {e: e | af.attacked_by(e) for e in preferred}
        return canonical(
            e for e in preferred
            if not any(is_strict_subset(ranges[e], ranges[p]) for p in preferred)
        )
    raise UnknownSemanticsError(f"no enumeration for semantics '{semantics}'")


_cached_compute: Callable[[int, int, Semantics], ExtensionSet] = lru_cache(
    maxsize=DEFAULT_CACHE_SIZE
)(_compute)


def configure_cache(maxsize: int) -> None:
    """Replace the per-process memo with one of the given size."""
    global _cached_compute
    logger.debug("extension cache resized to %d entries", maxsize)
    _cached_compute = lru_cache(maxsize=maxsize)(_compute)


def extensions(af: ArgumentationFramework, semantics: Semantics) -> ExtensionSet:
    """All extensions of ``semantics`` on ``af`` in canonical order.

    Results are memoized on the label-free structure of the framework.
    """
    return _cached_compute(af.arg_count, af.relation, Semantics(semantics))


def credulous_union(af: ArgumentationFramework, semantics: Semantics) -> ArgumentSet:
    """Union of all extensions."""
    union = 0
    for e in extensions(af, semantics):
        union |= e
    return union


def stb_cog_direct(af: ArgumentationFramework) -> ExtensionSet:
    """Stable extensions once self-attackers are deleted, in ``af``'s indices."""
    reduced, index_map = af.without_self_attackers()
    return canonical(lift(e, index_map) for e in extensions(reduced, Semantics.STB))


def co_ub_direct(af: ArgumentationFramework) -> ExtensionSet:
    """Conflict-free sets containing every argument they defend."""
    return canonical(e for e in iter_conflict_free(af) if is_subset(af.defended_set(e), e))
