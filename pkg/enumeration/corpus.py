"""
Corpus Module

This module describes and generates framework corpora: every labeled
framework on n arguments, seeded random frameworks, and fixed lists read
from files. Every corpus is index-addressable, so a range of indices can be
evaluated anywhere and merged by index.
"""

import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from core.errors import CapacityError, InvalidCorpusError
from core.framework import ArgumentationFramework
from enumeration.isomorphism import MAX_CANONICAL_ARGUMENTS, is_canonical
from enumeration.prng import SplitMix64, derive_seed

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_ARGUMENTS = 5

DEFAULT_EDGE_PROB = Fraction(1, 4)
DEFAULT_SELF_LOOP_PROB = Fraction(1, 8)
DEFAULT_RANDOM_COUNT = 1000
DEFAULT_SEED = 0

EXHAUSTIVE = "exhaustive"
RANDOM = "random"


def all_afs(n: int) -> Iterator[ArgumentationFramework]:
    """Every framework on n arguments, one per attack bitmask, ascending."""
    if n < 0:
        raise InvalidCorpusError(f"argument count must be nonnegative, got {n}")
    if n > MAX_EXHAUSTIVE_ARGUMENTS:
        raise CapacityError(
            f"exhaustive enumeration is limited to {MAX_EXHAUSTIVE_ARGUMENTS} arguments, got {n}"
        )
    for relation in range(1 << (n * n)):
        yield ArgumentationFramework(n, relation)


def _check_probability(name: str, value: Fraction) -> Fraction:
    if not 0 <= value <= 1:
        raise InvalidCorpusError(f"{name} must lie in [0, 1], got {value}")
    return value


def random_af(
    n: int,
    edge_prob: Fraction,
    self_loop_prob: Fraction,
    seed: int,
) -> ArgumentationFramework:
    """A framework whose ordered pairs are drawn independently, row-major.

    Pair (i, j) with i != j is an attack with probability ``edge_prob``;
    the loop (i, i) with probability ``self_loop_prob``. One generator value
    is consumed per ordered pair.
    """
    if n < 0:
        raise InvalidCorpusError(f"argument count must be nonnegative, got {n}")
    edge_prob = _check_probability("edge probability", Fraction(edge_prob))
    self_loop_prob = _check_probability("self-loop probability", Fraction(self_loop_prob))
    generator = SplitMix64(seed)
    relation = 0
    for i in range(n):
        for j in range(n):
            probability = self_loop_prob if i == j else edge_prob
            if generator.bernoulli(probability):
                relation |= 1 << (i * n + j)
    return ArgumentationFramework(n, relation)


class Corpus(ABC):
    """An indexable sequence of frameworks, some of which may be filtered out."""

    @property
    @abstractmethod
    def size(self) -> int:
        """Number of indices, included or not."""

    @abstractmethod
    def af_at(self, index: int) -> ArgumentationFramework:
        """The framework at ``index``, whether or not it is included."""

    def includes(self, index: int) -> bool:
        return True

    @property
    @abstractmethod
    def label(self) -> str:
        """Corpus name used in reports."""

    def __iter__(self) -> Iterator[ArgumentationFramework]:
        for _, af in self.indexed():
            yield af

    def indexed(self, start: int = 0, stop: Optional[int] = None) -> Iterator[Tuple[int, ArgumentationFramework]]:
        """Yield ``(index, framework)`` for included indices in [start, stop)."""
        stop = self.size if stop is None else min(stop, self.size)
        for index in range(start, stop):
            if self.includes(index):
                yield index, self.af_at(index)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class CorpusSpec(Corpus):
    """A generated corpus: exhaustive(n) or random(n, p, loops, count, seed)."""

    mode: str
    n: int
    edge_prob: Fraction = DEFAULT_EDGE_PROB
    self_loop_prob: Fraction = DEFAULT_SELF_LOOP_PROB
    count: int = DEFAULT_RANDOM_COUNT
    seed: int = DEFAULT_SEED
    iso_reduce: bool = False

    def __post_init__(self):
        if self.mode not in (EXHAUSTIVE, RANDOM):
            raise InvalidCorpusError(f"unknown corpus mode '{self.mode}'")
        if self.n < 0:
            raise InvalidCorpusError(f"argument count must be nonnegative, got {self.n}")
        if self.mode == EXHAUSTIVE and self.n > MAX_EXHAUSTIVE_ARGUMENTS:
            raise InvalidCorpusError(
                f"exhaustive corpora are limited to {MAX_EXHAUSTIVE_ARGUMENTS} arguments, got {self.n}"
            )
        if self.mode == RANDOM:
            if self.count < 0:
                raise InvalidCorpusError(f"count must be nonnegative, got {self.count}")
            _check_probability("edge probability", self.edge_prob)
            _check_probability("self-loop probability", self.self_loop_prob)
            if self.iso_reduce:
                raise InvalidCorpusError("isomorphism reduction applies to exhaustive corpora only")
        if self.iso_reduce and self.n > MAX_CANONICAL_ARGUMENTS:
            raise InvalidCorpusError(f"isomorphism reduction is limited to {MAX_CANONICAL_ARGUMENTS} arguments")

    @classmethod
    def exhaustive(cls, n: int, iso_reduce: bool = False) -> "CorpusSpec":
        return cls(EXHAUSTIVE, n, iso_reduce=iso_reduce)

    @classmethod
    def random(
        cls,
        n: int,
        edge_prob: Fraction = DEFAULT_EDGE_PROB,
        self_loop_prob: Fraction = DEFAULT_SELF_LOOP_PROB,
        count: int = DEFAULT_RANDOM_COUNT,
        seed: int = DEFAULT_SEED,
    ) -> "CorpusSpec":
        return cls(RANDOM, n, Fraction(edge_prob), Fraction(self_loop_prob), count, seed)

    @property
    def size(self) -> int:
        if self.mode == EXHAUSTIVE:
            return 1 << (self.n * self.n)
        return self.count

    def af_at(self, index: int) -> ArgumentationFramework:
        if not 0 <= index < self.size:
            raise IndexError(f"corpus index {index} out of range for {self.label}")
        if self.mode == EXHAUSTIVE:
            return ArgumentationFramework(self.n, index)
        return random_af(self.n, self.edge_prob, self.self_loop_prob, derive_seed(self.seed, index))

    def includes(self, index: int) -> bool:
        if not self.iso_reduce:
            return True
        return is_canonical(self.af_at(index))

    @property
    def label(self) -> str:
        if self.mode == EXHAUSTIVE:
            return f"exhaustive:{self.n}" + (":iso" if self.iso_reduce else "")
        return (
            f"random:n={self.n},p={self.edge_prob},loops={self.self_loop_prob},"
            f"count={self.count},seed={self.seed}"
        )


@dataclass(frozen=True)
class FixedCorpus(Corpus):
    """Frameworks listed explicitly, typically parsed from a file."""

    frameworks: Tuple[ArgumentationFramework, ...]
    name: str = "fixed"

    @classmethod
    def of(cls, frameworks: Sequence[ArgumentationFramework], name: str = "fixed") -> "FixedCorpus":
        return cls(tuple(frameworks), name)

    @property
    def size(self) -> int:
        return len(self.frameworks)

    def af_at(self, index: int) -> ArgumentationFramework:
        return self.frameworks[index]

    @property
    def label(self) -> str:
        return self.name


_RANDOM_KEYS = {"n", "p", "loops", "count", "seed"}
_EXHAUSTIVE_PATTERN = re.compile(r"^exhaustive:(\d+)(:iso)?$")


def _parse_fraction(key: str, text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidCorpusError(f"'{key}' expects a rational such as 1/4, got '{text}'") from None


def _parse_int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidCorpusError(f"'{key}' expects an integer, got '{text}'") from None


def parse_corpus(text: str) -> CorpusSpec:
    """Parse ``exhaustive:<n>[:iso]`` or ``random:n=..,p=..,loops=..,count=..,seed=..``.

    Omitted random keys take the defaults; ``n`` is required.
    """
    text = text.strip()
    match = _EXHAUSTIVE_PATTERN.match(text)
    if match:
        return CorpusSpec.exhaustive(int(match.group(1)), iso_reduce=bool(match.group(2)))
    if not text.startswith("random:"):
        raise InvalidCorpusError(
            f"corpus must be 'exhaustive:<n>' or 'random:n=<n>,p=<q>,...', got '{text}'"
        )

    values = {}
    for item in text[len("random:"):].split(","):
        key, sep, value = item.strip().partition("=")
        if not sep or key not in _RANDOM_KEYS:
            raise InvalidCorpusError(f"unexpected corpus field '{item}' in '{text}'")
        if key in values:
            raise InvalidCorpusError(f"corpus field '{key}' given twice")
        values[key] = value.strip()
    if "n" not in values:
        raise InvalidCorpusError(f"random corpus needs n=<arguments>: '{text}'")
    logger.debug("random corpus fields: %s", values)

    return CorpusSpec.random(
        n=_parse_int("n", values["n"]),
        edge_prob=_parse_fraction("p", values.get("p", str(DEFAULT_EDGE_PROB))),
        self_loop_prob=_parse_fraction("loops", values.get("loops", str(DEFAULT_SELF_LOOP_PROB))),
        count=_parse_int("count", values.get("count", str(DEFAULT_RANDOM_COUNT))),
        seed=_parse_int("seed", values.get("seed", str(DEFAULT_SEED))),
    )
