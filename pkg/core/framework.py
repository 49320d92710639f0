"""
Argumentation Framework Module

This module provides the immutable framework value and the graph-level
operations (restriction, reduct, attack ranges, defense) every semantics is
built from.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from core.argument_sets import ArgumentSet, members
from core.errors import CapacityError, MalformedSetError

MAX_ARGUMENTS = 64

# new index -> original index, returned alongside every restriction
IndexMap = Tuple[int, ...]


def default_name(index: int) -> str:
    """Name used for unlabeled arguments: a..z, then a26, a27, ..."""
    if index < 26:
        return chr(ord("a") + index)
    return f"a{index}"


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite set of arguments 0..n-1 with an attack relation.

    The attack relation is stored as one integer: bit ``i * n + j`` is set
    iff argument i attacks argument j.
    """

    arg_count: int
    relation: int = 0
    labels: Optional[Tuple[str, ...]] = None
    _out: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _in: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.arg_count
        if n < 0:
            raise ValueError(f"argument count must be nonnegative, got {n}")
        if n > MAX_ARGUMENTS:
            raise CapacityError(
                f"framework has {n} arguments, capacity is {MAX_ARGUMENTS}"
            )
        if self.relation < 0 or self.relation >> (n * n):
            raise MalformedSetError("attack relation refers to arguments beyond the framework")
        if self.labels is not None:
            if len(self.labels) != n:
                raise ValueError(f"expected {n} labels, got {len(self.labels)}")
            if len(set(self.labels)) != n:
                raise ValueError("argument labels must be unique")

        row = (1 << n) - 1
        out = tuple((self.relation >> (i * n)) & row for i in range(n))
        incoming = [0] * n
        for i, targets in enumerate(out):
            for j in members(targets):
                incoming[j] |= 1 << i
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", tuple(incoming))

    # -- construction -------------------------------------------------------

    @classmethod
    def from_attacks(
        cls,
        arg_count: int,
        attacks: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "ArgumentationFramework":
        """Build a framework from index pairs."""
        relation = 0
        for source, target in attacks:
            if not (0 <= source < arg_count and 0 <= target < arg_count):
                raise MalformedSetError(
                    f"attack ({source}, {target}) has an endpoint outside 0..{arg_count - 1}"
                )
            relation |= 1 << (source * arg_count + target)
        return cls(arg_count, relation, tuple(labels) if labels is not None else None)

    @classmethod
    def from_names(
        cls, names: Sequence[str], attacks: Iterable[Tuple[str, str]]
    ) -> "ArgumentationFramework":
        """Build a framework from argument names; name order fixes indices."""
        index = {name: i for i, name in enumerate(names)}
        pairs = []
        for source, target in attacks:
            if source not in index or target not in index:
                raise MalformedSetError(f"attack ({source}, {target}) uses an undeclared argument")
            pairs.append((index[source], index[target]))
        return cls.from_attacks(len(names), pairs, names)

    # -- views ----------------------------------------------------------------

    @property
    def all_arguments(self) -> ArgumentSet:
        return (1 << self.arg_count) - 1

    @property
    def names(self) -> Tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple(default_name(i) for i in range(self.arg_count))

    @property
    def attacks(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(
            (i, j) for i, targets in enumerate(self._out) for j in members(targets)
        )

    def attack_names(self) -> FrozenSet[Tuple[str, str]]:
        names = self.names
        return frozenset((names[i], names[j]) for i, j in self.attacks)

    def out_mask(self, argument: int) -> ArgumentSet:
        """Arguments attacked by ``argument``."""
        return self._out[argument]

    def in_mask(self, argument: int) -> ArgumentSet:
        """Arguments attacking ``argument``."""
        return self._in[argument]

    def structure(self) -> Tuple[int, int]:
        """Label-free identity: two frameworks with equal structure have equal semantics."""
        return self.arg_count, self.relation

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise MalformedSetError(f"unknown argument '{name}'") from None

    def mask_of(self, names: Iterable[str]) -> ArgumentSet:
        """Translate argument names into a mask."""
        lookup: Dict[str, int] = {name: i for i, name in enumerate(self.names)}
        mask = 0
        for name in names:
            if name not in lookup:
                raise MalformedSetError(f"unknown argument '{name}'")
            mask |= 1 << lookup[name]
        return mask

    def names_of(self, mask: ArgumentSet) -> List[str]:
        self.check_set(mask)
        names = self.names
        return [names[i] for i in members(mask)]

    def check_set(self, mask: ArgumentSet) -> None:
        if mask < 0 or mask >> self.arg_count:
            raise MalformedSetError(
                f"set {mask:#x} is not a subset of the {self.arg_count} arguments"
            )

    # -- operations -------------------------------------------------------------

    def attacked_by(self, subset: ArgumentSet) -> ArgumentSet:
        """Arguments receiving an attack from ``subset`` (its range E+)."""
        self.check_set(subset)
        result = 0
        for i in members(subset):
            result |= self._out[i]
        return result

    def attackers_of(self, subset: ArgumentSet) -> ArgumentSet:
        """Arguments attacking some member of ``subset`` (E-)."""
        self.check_set(subset)
        result = 0
        for i in members(subset):
            result |= self._in[i]
        return result

    def defended_set(self, subset: ArgumentSet) -> ArgumentSet:
        """The defense operator: arguments all of whose attackers ``subset`` attacks."""
        counter = self.attacked_by(subset)
        result = 0
        for a, attackers in enumerate(self._in):
            if attackers & ~counter == 0:
                result |= 1 << a
        return result

    def is_conflict_free(self, subset: ArgumentSet) -> bool:
        return self.attacked_by(subset) & subset == 0

    def is_unattacked_set(self, subset: ArgumentSet) -> bool:
        return self.attackers_of(subset) & ~subset == 0

    def self_attackers(self) -> ArgumentSet:
        result = 0
        for i, targets in enumerate(self._out):
            if targets >> i & 1:
                result |= 1 << i
        return result

    def restrict(self, subset: ArgumentSet) -> Tuple["ArgumentationFramework", IndexMap]:
        """The sub-framework induced by ``subset``, plus the new-to-old index map.

        Retained arguments keep their relative order and their names.
        """
        self.check_set(subset)
        kept = tuple(members(subset))
        position = {old: new for new, old in enumerate(kept)}
        size = len(kept)
        relation = 0
        for new_source, old_source in enumerate(kept):
            for old_target in members(self._out[old_source] & subset):
                relation |= 1 << (new_source * size + position[old_target])
        names = self.names
        restricted = ArgumentationFramework(size, relation, tuple(names[i] for i in kept))
        return restricted, kept

    def reduct(self, subset: ArgumentSet) -> Tuple["ArgumentationFramework", IndexMap]:
        """Restriction to the arguments neither in ``subset`` nor attacked by it."""
        removed = subset | self.attacked_by(subset)
        return self.restrict(self.all_arguments & ~removed)

    def without_self_attackers(self) -> Tuple["ArgumentationFramework", IndexMap]:
        return self.restrict(self.all_arguments & ~self.self_attackers())

    def relabeled(self, labels: Sequence[str]) -> "ArgumentationFramework":
        return ArgumentationFramework(self.arg_count, self.relation, tuple(labels))

    def __str__(self) -> str:
        names = self.names
        pairs = ",".join(f"({names[i]},{names[j]})" for i, j in sorted(self.attacks))
        return f"<{{{','.join(names)}}}, {{{pairs}}}>"


EMPTY_FRAMEWORK = ArgumentationFramework(0)


def lift(subset: ArgumentSet, index_map: IndexMap) -> ArgumentSet:
    """Translate a set of a restricted framework back to original indices."""
    result = 0
    for i in members(subset):
        result |= 1 << index_map[i]
    return result


def project(subset: ArgumentSet, index_map: IndexMap) -> ArgumentSet:
    """Translate a set of original indices into a restricted framework.

    Members outside the restriction are dropped.
    """
    result = 0
    for new, old in enumerate(index_map):
        if subset >> old & 1:
            result |= 1 << new
    return result
