"""
Worker Pool Module

Evaluates a probe over a corpus in index-range chunks, serially or on a
process pool. Results are merged by corpus index, so the answer never
depends on the number of workers or on completion order.
"""

import logging
import time
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Generic, Hashable, Iterator, List, Optional, Sequence, Tuple, TypeVar

from enumeration.corpus import Corpus
from core.framework import ArgumentationFramework

logger = logging.getLogger(__name__)

T = TypeVar("T")

# A probe returns None when the framework passes, or a payload describing the failure
Probe = Callable[[ArgumentationFramework], Optional[T]]
# A keyed probe evaluates one of several checks, named by its key, on a framework
KeyedProbe = Callable[[Hashable, ArgumentationFramework], Optional[T]]
ProgressCallback = Callable[[int], None]


@dataclass(frozen=True)
class ChunkResult(Generic[T]):
    start: int
    checked: int
    failure_index: Optional[int] = None
    payload: Optional[T] = None


@dataclass(frozen=True)
class SearchOutcome(Generic[T]):
    """First failure in corpus order, plus how many frameworks were evaluated up to it."""

    checked: int
    failure_index: Optional[int] = None
    payload: Optional[T] = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def failed(self) -> bool:
        return self.failure_index is not None


def _run_chunk(corpus: Corpus, probe: Probe, start: int, stop: int) -> ChunkResult:
    checked = 0
    for index, af in corpus.indexed(start, stop):
        checked += 1
        payload = probe(af)
        if payload is not None:
            return ChunkResult(start, checked, index, payload)
    return ChunkResult(start, checked)


@dataclass(frozen=True)
class KeyedChunkResult:
    """Per-key first failures inside one chunk.

    ``failures`` maps a key to ``(position, index, payload)`` where position
    counts included frameworks from the chunk start, 1-based.
    """

    checked: int
    failures: Dict[Hashable, Tuple[int, int, Any]]
    elapsed: Dict[Hashable, float]


def _run_keyed_chunk(corpus: Corpus, probe: KeyedProbe, keys: Sequence[Hashable], start: int, stop: int) -> KeyedChunkResult:
    open_keys = list(keys)
    failures: Dict[Hashable, Tuple[int, int, Any]] = {}
    elapsed = dict.fromkeys(keys, 0.0)
    checked = 0
    for index, af in corpus.indexed(start, stop):
        if not open_keys:
            break
        checked += 1
        for key in open_keys:
            began = time.perf_counter()
            payload = probe(key, af)
            elapsed[key] += time.perf_counter() - began
            if payload is not None:
                failures[key] = (checked, index, payload)
        open_keys = [key for key in open_keys if key not in failures]
    return KeyedChunkResult(checked, failures, elapsed)


class _KeyedMerge:
    """Folds chunk results, in corpus order, into one outcome per key."""

    def __init__(self, keys: Sequence[Hashable]):
        self.open: List[Hashable] = list(keys)
        self.outcomes: Dict[Hashable, SearchOutcome] = {}
        self.elapsed = dict.fromkeys(keys, 0.0)
        self.checked = 0

    def add(self, result: KeyedChunkResult) -> None:
        for key in self.open:
            self.elapsed[key] += result.elapsed.get(key, 0.0)
        still_open = []
        for key in self.open:
            if key in result.failures:
                position, index, payload = result.failures[key]
                self.outcomes[key] = SearchOutcome(self.checked + position, index, payload, self.elapsed[key])
            else:
                still_open.append(key)
        self.open = still_open
        self.checked += result.checked

    def finish(self) -> Dict[Hashable, SearchOutcome]:
        for key in self.open:
            self.outcomes[key] = SearchOutcome(self.checked, elapsed=self.elapsed[key])
        self.open = []
        return self.outcomes


def _map_chunk(corpus: Corpus, function: Callable[[ArgumentationFramework], Any], start: int, stop: int) -> List[Tuple[int, Any]]:
    return [(index, function(af)) for index, af in corpus.indexed(start, stop)]


def _chunks(size: int, chunk_size: int) -> Iterator[Tuple[int, int]]:
    for start in range(0, size, chunk_size):
        yield start, min(start + chunk_size, size)


class WorkerPool:
    """Runs corpus probes with ``workers`` processes; one worker means in-process."""

    def __init__(self, workers: int = 1, chunk_size: int = 4096):
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        if chunk_size < 1:
            raise ValueError(f"chunk size must be at least 1, got {chunk_size}")
        self.workers = workers
        self.chunk_size = chunk_size

    def first_failure(
        self,
        corpus: Corpus,
        probe: Probe,
        on_progress: Optional[ProgressCallback] = None,
    ) -> SearchOutcome:
        """Evaluate ``probe`` in corpus order and stop at the minimum failing index."""
        chunks = list(_chunks(corpus.size, self.chunk_size))
        logger.debug("searching %s in %d chunks on %d worker(s)", corpus.label, len(chunks), self.workers)
        checked = 0

        if self.workers == 1 or len(chunks) <= 1:
            for start, stop in chunks:
                result = _run_chunk(corpus, probe, start, stop)
                checked += result.checked
                if on_progress:
                    on_progress(checked)
                if result.failure_index is not None:
                    return SearchOutcome(checked, result.failure_index, result.payload)
            return SearchOutcome(checked)

        window = self.workers * 2
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            pending: List[Future] = []
            position = 0
            for _ in range(len(chunks)):
                while position < len(chunks) and len(pending) < window:
                    start, stop = chunks[position]
                    pending.append(executor.submit(_run_chunk, corpus, probe, start, stop))
                    position += 1
                # futures are consumed in submission order, so the first failure seen has the least index
                result = pending.pop(0).result()
                checked += result.checked
                if on_progress:
                    on_progress(checked)
                if result.failure_index is not None:
                    for future in pending:
                        future.cancel()
                    return SearchOutcome(checked, result.failure_index, result.payload)
        return SearchOutcome(checked)

    def first_failures(
        self,
        corpus: Corpus,
        probe: KeyedProbe,
        keys: Sequence[Hashable],
        on_progress: Optional[ProgressCallback] = None,
    ) -> Dict[Hashable, SearchOutcome]:
        """``first_failure`` for several keys in one pass over the corpus.

        Every framework is evaluated for all keys still open before the next
        one is built, and a key stops being evaluated at its first failure.
        Each outcome equals what ``first_failure`` reports for that key alone.
        """
        chunks = list(_chunks(corpus.size, self.chunk_size))
        logger.debug("checking %d keys on %s in %d chunks on %d worker(s)",
                      len(keys), corpus.label, len(chunks), self.workers)
        merge = _KeyedMerge(keys)

        if self.workers == 1 or len(chunks) <= 1:
            for start, stop in chunks:
                if not merge.open:
                    break
                merge.add(_run_keyed_chunk(corpus, probe, merge.open, start, stop))
                if on_progress:
                    on_progress(merge.checked)
            return merge.finish()

        window = self.workers * 2
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            pending: List[Future] = []
            position = 0
            while merge.open and (pending or position < len(chunks)):
                while position < len(chunks) and len(pending) < window:
                    start, stop = chunks[position]
                    pending.append(executor.submit(_run_keyed_chunk, corpus, probe, list(merge.open), start, stop))
                    position += 1
                merge.add(pending.pop(0).result())
                if on_progress:
                    on_progress(merge.checked)
            for future in pending:
                future.cancel()
        return merge.finish()

    def map(
        self,
        corpus: Corpus,
        function: Callable[[ArgumentationFramework], T],
    ) -> List[Tuple[int, T]]:
        """Apply ``function`` to every included framework; results in index order."""
        chunks = list(_chunks(corpus.size, self.chunk_size))
        if self.workers == 1 or len(chunks) <= 1:
            results: List[Tuple[int, T]] = []
            for start, stop in chunks:
                results.extend(_map_chunk(corpus, function, start, stop))
            return results
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = [executor.submit(_map_chunk, corpus, function, start, stop) for start, stop in chunks]
            results = []
            for future in futures:
                results.extend(future.result())
            return results
