"""
Claim Verification Module

This module runs registry claims over corpora. A claim is confirmed when it
holds on every framework of the corpus and refuted at the first framework
(in corpus order) where it fails.
"""

import logging
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence

from claims.registry import Claim, Mismatch, find, registry
from core.argument_sets import ExtensionSet
from core.framework import ArgumentationFramework
from enumeration.corpus import Corpus
from formats.apx import write_apx
from utils.worker_pool import ProgressCallback, SearchOutcome, WorkerPool

logger = logging.getLogger(__name__)

CONFIRMED = "confirmed"
REFUTED = "refuted"


@dataclass(frozen=True)
class Refutation:
    af: ArgumentationFramework
    corpus_index: int
    mismatch: Mismatch


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    corpus: str
    afs_checked: int
    refutation: Optional[Refutation] = None
    wall_time: float = field(default=0.0, compare=False)

    @property
    def outcome(self) -> str:
        return CONFIRMED if self.refutation is None else REFUTED

    @property
    def confirmed(self) -> bool:
        return self.refutation is None

    def to_dict(self, timings: bool = False) -> Dict:
        payload: Dict = {
            "claim": self.claim_id,
            "corpus": self.corpus,
            "afs_checked": self.afs_checked,
            "outcome": self.outcome,
        }
        if self.refutation is not None:
            af = self.refutation.af
            mismatch = self.refutation.mismatch
            payload["refutation"] = {
                "af": write_apx(af),
                "corpus_index": self.refutation.corpus_index,
                "detail": mismatch.detail,
                "direction": mismatch.direction,
                "left": _names(af, mismatch.left),
                "right": _names(af, mismatch.right),
            }
        if timings:
            payload["wall_time"] = round(self.wall_time, 6)
        return payload


def _names(af: ArgumentationFramework, extensions: Optional[ExtensionSet]) -> Optional[List[List[str]]]:
    if extensions is None:
        return None
    return [af.names_of(e) for e in extensions]


def _probe(claim_id: str, af: ArgumentationFramework) -> Optional[Mismatch]:
    # look the claim up by id so the probe pickles without its closures
    return find(claim_id).evaluate(af)


def _registered(claim: Claim) -> bool:
    try:
        return find(claim.id) is claim
    except KeyError:
        return False


def verify(
    claim: Claim,
    corpus: Corpus,
    pool: Optional[WorkerPool] = None,
    on_progress: Optional[ProgressCallback] = None,
) -> ClaimReport:
    """Evaluate ``claim`` on every framework of ``corpus``; refute at the least failing index."""
    pool = pool or WorkerPool()
    if _registered(claim):
        probe = partial(_probe, claim.id)
    else:
        # ad-hoc claims carry closures that cannot cross a process boundary
        probe = claim.evaluate
        if pool.workers > 1:
            logger.info("claim %s is not registered; checking it in-process", claim.id)
            pool = WorkerPool(1, pool.chunk_size)
    started = time.perf_counter()
    outcome = pool.first_failure(corpus, probe, on_progress)
    return _report(claim, corpus, outcome, time.perf_counter() - started)


def _report(claim: Claim, corpus: Corpus, outcome: SearchOutcome, elapsed: float) -> ClaimReport:
    refutation = None
    if outcome.failed:
        refutation = Refutation(corpus.af_at(outcome.failure_index), outcome.failure_index, outcome.payload)
        logger.warning(
            "claim %s refuted on %s at index %d: %s",
            claim.id, corpus.label, outcome.failure_index, outcome.payload.detail,
        )
    elif outcome.checked == 0:
        logger.warning("claim %s confirmed vacuously: corpus %s is empty", claim.id, corpus.label)
    return ClaimReport(claim.id, corpus.label, outcome.checked, refutation, elapsed)


def replay(report: ClaimReport) -> bool:
    """True iff a refuted report's framework still refutes its claim."""
    if report.refutation is None:
        return False
    return find(report.claim_id).evaluate(report.refutation.af) is not None


@dataclass(frozen=True)
class VerificationSummary:
    reports: List[ClaimReport]

    @property
    def confirmed(self) -> int:
        return sum(1 for report in self.reports if report.confirmed)

    @property
    def refuted(self) -> int:
        return len(self.reports) - self.confirmed

    def slowest(self, count: int = 5) -> List[ClaimReport]:
        return sorted(self.reports, key=lambda report: report.wall_time, reverse=True)[:count]

    def to_dict(self, timings: bool = False) -> Dict:
        payload: Dict = {
            "confirmed": self.confirmed,
            "refuted": self.refuted,
            "reports": [report.to_dict(timings) for report in self.reports],
        }
        if timings:
            payload["slowest"] = [report.claim_id for report in self.slowest()]
        return payload


def verify_all(
    corpora: Sequence[Corpus],
    claims: Optional[Sequence[Claim]] = None,
    pool: Optional[WorkerPool] = None,
    on_claim: Optional[Callable[[ClaimReport], None]] = None,
) -> VerificationSummary:
    """Run ``claims`` (default: the whole registry) over each corpus in turn.

    Registered claims share one pass per corpus: every framework is checked
    against all claims still unrefuted, so its extensions are computed once
    while they sit in the memo. Reports come back in claim order.
    """
    claims = list(claims) if claims is not None else registry()
    pool = pool or WorkerPool()
    shared = list(dict.fromkeys(claim.id for claim in claims if _registered(claim)))
    reports = []
    for corpus in corpora:
        logger.info("verifying %d claims on %s", len(claims), corpus.label)
        outcomes = pool.first_failures(corpus, _probe, shared) if shared else {}
        for claim in claims:
            if claim.id in outcomes and _registered(claim):
                report = _report(claim, corpus, outcomes[claim.id], outcomes[claim.id].elapsed)
            else:
                report = verify(claim, corpus, pool)
            reports.append(report)
            if on_claim:
                on_claim(report)
    summary = VerificationSummary(reports)
    logger.info("verification finished: %d confirmed, %d refuted", summary.confirmed, summary.refuted)
    return summary
