"""
Argument Set Module

Argument sets are plain integers used as fixed-width bit vectors: bit i is
set iff argument i is a member. An extension set is a tuple of such masks in
canonical order.
"""

from typing import Iterable, Iterator, Tuple

ArgumentSet = int
ExtensionSet = Tuple[int, ...]


def members(mask: ArgumentSet) -> Iterator[int]:
    """Iterate over member indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_indices(indices: Iterable[int]) -> ArgumentSet:
    """Build a mask from argument indices."""
    mask = 0
    for index in indices:
        if index < 0:
            raise ValueError(f"argument index must be nonnegative, got {index}")
        mask |= 1 << index
    return mask


def size(mask: ArgumentSet) -> int:
    return mask.bit_count()


def is_subset(small: ArgumentSet, large: ArgumentSet) -> bool:
    return small & ~large == 0


def is_strict_subset(small: ArgumentSet, large: ArgumentSet) -> bool:
    return small != large and small & ~large == 0


def sort_key(mask: ArgumentSet) -> Tuple[int, Tuple[int, ...]]:
    """Canonical order: ascending cardinality, then lexicographic by sorted members."""
    return mask.bit_count(), tuple(members(mask))


def canonical(masks: Iterable[ArgumentSet]) -> ExtensionSet:
    """Deduplicate and order a collection of argument sets."""
    return tuple(sorted(set(masks), key=sort_key))


def subsets_of(mask: ArgumentSet) -> Iterator[ArgumentSet]:
    """All subsets of ``mask`` in canonical order."""
    found = []
    sub = mask
    while True:
        found.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return iter(sorted(found, key=sort_key))


def supersets_within(mask: ArgumentSet, universe: ArgumentSet) -> Iterator[ArgumentSet]:
    """All sets S with mask ⊆ S ⊆ universe, ordered canonically by the added members."""
    free = universe & ~mask
    for extra in subsets_of(free):
        yield mask | extra
