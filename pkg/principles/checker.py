"""
Principle Checker Module

This module decides the thirteen principles of principle-based analysis for
one framework and one semantics specification, and searches corpora for
counterexamples.

Each principle is a pair: a generator of candidate witnesses in minimal-first
order (smallest sets first, canonical set order), and a predicate deciding
whether one candidate instantiates a violation. ``check`` returns the first
violating candidate; ``replay`` re-runs the predicate on a stored witness.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from core.argument_sets import ArgumentSet, ExtensionSet, canonical, is_strict_subset, members, subsets_of, supersets_within
from core.errors import CapacityError
from core.framework import ArgumentationFramework, lift, project
from enumeration.corpus import Corpus
from formats.apx import write_apx
from semantics.classical import Semantics
from semantics.registry import parse_semantics
from semantics.spec import Classical, SemanticsSpec, Vac
from semantics.vacuous import SpecLike, as_spec, base_of, vac_extensions
from utils.worker_pool import ProgressCallback, WorkerPool

logger = logging.getLogger(__name__)

# context-freeness, directionality and separation quantify over subsets
MAX_QUANTIFIED_ARGUMENTS = 6


class PrincipleId(str, Enum):
    CONFLICT_FREENESS = "conflict-freeness"
    ADMISSIBILITY = "admissibility"
    CONTEXT_FREENESS = "context-freeness"
    REINSTATEMENT = "reinstatement"
    MODULARIZATION = "modularization"
    MEANINGLESS_REDUCT = "meaningless-reduct"
    EXISTENCE = "existence"
    SINGLE_STATUS = "single-status"
    I_MAXIMALITY = "i-maximality"
    ABSTENTION = "abstention"
    DIRECTIONALITY = "directionality"
    NEGLECTION_OF_SELF_ATTACKERS = "neglection-of-self-attackers"
    SEPARATION_PROPERTY = "separation-property"

    def __str__(self) -> str:
        return self.value


HOLDS = "holds"
VIOLATED = "violated"


@dataclass(frozen=True)
class Witness:
    """The sets and argument instantiating a violated quantifier.

    ``sets`` pairs a role name (``E``, ``E'``, ``S``, ``U``, ...) with a set
    in the checked framework's indices.
    """

    sets: Tuple[Tuple[str, ArgumentSet], ...] = ()
    argument: Optional[int] = None
    note: str = ""

    def get(self, role: str) -> ArgumentSet:
        for name, mask in self.sets:
            if name == role:
                return mask
        raise KeyError(role)

    def describe(self, af: ArgumentationFramework) -> str:
        parts = [f"{role}={{{','.join(af.names_of(mask))}}}" for role, mask in self.sets]
        if self.argument is not None:
            parts.append(f"a={af.names[self.argument]}")
        if self.note:
            parts.append(self.note)
        return ", ".join(parts)

    def to_dict(self, af: ArgumentationFramework) -> Dict:
        payload: Dict = {role: af.names_of(mask) for role, mask in self.sets}
        if self.argument is not None:
            payload["argument"] = af.names[self.argument]
        if self.note:
            payload["note"] = self.note
        return payload


@dataclass(frozen=True)
class Verdict:
    principle: PrincipleId
    spec: SemanticsSpec
    af: ArgumentationFramework
    witness: Optional[Witness] = None
    corpus_index: Optional[int] = field(default=None, compare=False)

    @property
    def outcome(self) -> str:
        return HOLDS if self.witness is None else VIOLATED

    @property
    def violated(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> Dict:
        payload: Dict = {
            "principle": self.principle.value,
            "semantics": self.spec.token,
            "af": write_apx(self.af),
            "outcome": self.outcome,
            "witness": self.witness.to_dict(self.af) if self.witness else None,
        }
        if self.corpus_index is not None:
            payload["corpus_index"] = self.corpus_index
        return payload


Candidates = Callable[[ArgumentationFramework, SemanticsSpec], Iterator[Witness]]
Violates = Callable[[ArgumentationFramework, SemanticsSpec, Witness], bool]


def _sigma(af: ArgumentationFramework, spec: SemanticsSpec) -> ExtensionSet:
    return vac_extensions(af, spec)


def _restricted(af: ArgumentationFramework, spec: SemanticsSpec, subset: ArgumentSet) -> ExtensionSet:
    """Extensions of F restricted to ``subset``, in F's indices."""
    restricted, index_map = af.restrict(subset)
    return canonical(lift(e, index_map) for e in _sigma(restricted, spec))


def _guard(af: ArgumentationFramework, principle: PrincipleId) -> None:
    if af.arg_count > MAX_QUANTIFIED_ARGUMENTS:
        raise CapacityError(
            f"{principle} quantifies over subsets; {af.arg_count} arguments exceeds {MAX_QUANTIFIED_ARGUMENTS}"
        )


def _unattacked_sets(af: ArgumentationFramework) -> Iterator[ArgumentSet]:
    return (u for u in subsets_of(af.all_arguments) if af.is_unattacked_set(u))


def _each_extension(af, spec) -> Iterator[Witness]:
    for e in _sigma(af, spec):
        yield Witness((("E", e),))


# conflict-freeness

def _conflict_freeness_violates(af, spec, w: Witness) -> bool:
    e = w.get("E")
    return e in _sigma(af, spec) and not af.is_conflict_free(e)


# admissibility

def _admissibility_violates(af, spec, w: Witness) -> bool:
    e = w.get("E")
    admissible = af.is_conflict_free(e) and e & ~af.defended_set(e) == 0
    return e in _sigma(af, spec) and not admissible


# context-freeness: the full framework is one of the restrictions, so only
# members of sigma(F) can break the equivalence

def _context_freeness_candidates(af, spec) -> Iterator[Witness]:
    _guard(af, PrincipleId.CONTEXT_FREENESS)
    for e in _sigma(af, spec):
        for s in supersets_within(e, af.all_arguments):
            yield Witness((("E", e), ("S", s)))


def _context_freeness_violates(af, spec, w: Witness) -> bool:
    e, s = w.get("E"), w.get("S")
    if e not in _sigma(af, spec) or e & ~s:
        return False
    restricted, index_map = af.restrict(s)
    return project(e, index_map) not in _sigma(restricted, spec)


# reinstatement

def _reinstatement_candidates(af, spec) -> Iterator[Witness]:
    for e in _sigma(af, spec):
        for a in members(af.defended_set(e) & ~e):
            yield Witness((("E", e),), argument=a)


def _reinstatement_violates(af, spec, w: Witness) -> bool:
    e, a = w.get("E"), w.argument
    return e in _sigma(af, spec) and bool(af.defended_set(e) >> a & 1) and not e >> a & 1


# modularization

def _modularization_candidates(af, spec) -> Iterator[Witness]:
    for e in _sigma(af, spec):
        reduct, index_map = af.reduct(e)
        for inner in _sigma(reduct, spec):
            yield Witness((("E", e), ("E'", lift(inner, index_map))))


def _modularization_violates(af, spec, w: Witness) -> bool:
    e, e2 = w.get("E"), w.get("E'")
    if e not in _sigma(af, spec):
        return False
    removed = e | af.attacked_by(e)
    if e2 & removed:
        return False
    reduct, index_map = af.reduct(e)
    return project(e2, index_map) in _sigma(reduct, spec) and (e | e2) not in _sigma(af, spec)


# meaningless reduct, in the subset form: sigma(F^E) has no nonempty extension

def _meaningless_reduct_candidates(af, spec) -> Iterator[Witness]:
    for e in _sigma(af, spec):
        reduct, index_map = af.reduct(e)
        nonempty = [x for x in _sigma(reduct, spec) if x]
        witness = (("E", e), ("E'", lift(nonempty[0], index_map))) if nonempty else (("E", e),)
        yield Witness(witness)


def _meaningless_reduct_violates(af, spec, w: Witness) -> bool:
    e = w.get("E")
    if e not in _sigma(af, spec):
        return False
    reduct, _ = af.reduct(e)
    return any(x for x in _sigma(reduct, spec))


# existence and single-status are decided per framework

def _whole_framework(af, spec) -> Iterator[Witness]:
    yield Witness()


def _existence_violates(af, spec, w: Witness) -> bool:
    return not _sigma(af, spec)


def _single_status_candidates(af, spec) -> Iterator[Witness]:
    yield Witness(note=f"{len(_sigma(af, spec))} extensions")


def _single_status_violates(af, spec, w: Witness) -> bool:
    return len(_sigma(af, spec)) != 1


# I-maximality

def _i_maximality_candidates(af, spec) -> Iterator[Witness]:
    sigma = _sigma(af, spec)
    for e in sigma:
        for d in sigma:
            if is_strict_subset(e, d):
                yield Witness((("E", e), ("D", d)))


def _i_maximality_violates(af, spec, w: Witness) -> bool:
    e, d = w.get("E"), w.get("D")
    sigma = _sigma(af, spec)
    return e in sigma and d in sigma and is_strict_subset(e, d)


# abstention: accepted somewhere and rejected somewhere, never undecided

def _each_argument(af, spec) -> Iterator[Witness]:
    for a in range(af.arg_count):
        yield Witness(argument=a)


def _abstention_violates(af, spec, w: Witness) -> bool:
    a = w.argument
    bit = 1 << a
    sigma = _sigma(af, spec)
    accepted = any(e & bit for e in sigma)
    rejected = any(af.attacked_by(e) & bit for e in sigma)
    undecided = any(not (e | af.attacked_by(e)) & bit for e in sigma)
    return accepted and rejected and not undecided


# directionality

def _unattacked_candidates(principle: PrincipleId):
    def candidates(af, spec) -> Iterator[Witness]:
        _guard(af, principle)
        for u in _unattacked_sets(af):
            yield Witness((("U", u),))
    return candidates


def _directionality_violates(af, spec, w: Witness) -> bool:
    u = w.get("U")
    if not af.is_unattacked_set(u):
        return False
    projected = canonical(e & u for e in _sigma(af, spec))
    return _restricted(af, spec, u) != projected


# neglection of self-attackers

def _neglection_violates(af, spec, w: Witness) -> bool:
    rest = af.all_arguments & ~af.self_attackers()
    return _sigma(af, spec) != _restricted(af, spec, rest)


# separation property, in the subset form

def _separation_violates(af, spec, w: Witness) -> bool:
    u = w.get("U")
    if not af.is_unattacked_set(u):
        return False
    if any(_restricted(af, spec, u)):
        return False
    return _sigma(af, spec) != _restricted(af, spec, af.all_arguments & ~u)


_PRINCIPLES: Dict[PrincipleId, Tuple[Candidates, Violates]] = {
    PrincipleId.CONFLICT_FREENESS: (_each_extension, _conflict_freeness_violates),
    PrincipleId.ADMISSIBILITY: (_each_extension, _admissibility_violates),
    PrincipleId.CONTEXT_FREENESS: (_context_freeness_candidates, _context_freeness_violates),
    PrincipleId.REINSTATEMENT: (_reinstatement_candidates, _reinstatement_violates),
    PrincipleId.MODULARIZATION: (_modularization_candidates, _modularization_violates),
    PrincipleId.MEANINGLESS_REDUCT: (_meaningless_reduct_candidates, _meaningless_reduct_violates),
    PrincipleId.EXISTENCE: (_whole_framework, _existence_violates),
    PrincipleId.SINGLE_STATUS: (_single_status_candidates, _single_status_violates),
    PrincipleId.I_MAXIMALITY: (_i_maximality_candidates, _i_maximality_violates),
    PrincipleId.ABSTENTION: (_each_argument, _abstention_violates),
    PrincipleId.DIRECTIONALITY: (_unattacked_candidates(PrincipleId.DIRECTIONALITY), _directionality_violates),
    PrincipleId.NEGLECTION_OF_SELF_ATTACKERS: (_whole_framework, _neglection_violates),
    PrincipleId.SEPARATION_PROPERTY: (_unattacked_candidates(PrincipleId.SEPARATION_PROPERTY), _separation_violates),
}


def parse_principle(token: str) -> PrincipleId:
    try:
        return PrincipleId(token)
    except ValueError:
        known = ", ".join(p.value for p in PrincipleId)
        raise ValueError(f"unknown principle '{token}'; expected one of: {known}") from None


def check(af: ArgumentationFramework, spec: SpecLike, principle: PrincipleId) -> Verdict:
    """Decide ``principle`` for ``spec`` on ``af``; violated verdicts carry a minimal-first witness."""
    principle = PrincipleId(principle)
    shown = parse_semantics(spec) if isinstance(spec, str) else spec
    node = as_spec(shown)
    candidates, violates = _PRINCIPLES[principle]
    for witness in candidates(af, node):
        if violates(af, node, witness):
            return Verdict(principle, shown, af, witness)
    return Verdict(principle, shown, af)


def replay(verdict: Verdict) -> bool:
    """True iff a violated verdict's witness still instantiates a violation."""
    if verdict.witness is None:
        return False
    _, violates = _PRINCIPLES[verdict.principle]
    return violates(verdict.af, as_spec(verdict.spec), verdict.witness)


def profile(af: ArgumentationFramework, spec: SpecLike) -> List[Verdict]:
    """All thirteen verdicts for one framework, in principle order."""
    return [check(af, spec, principle) for principle in PrincipleId]


def _probe(spec_token: str, principle: PrincipleId, af: ArgumentationFramework) -> Optional[Verdict]:
    verdict = check(af, spec_token, principle)
    return verdict if verdict.violated else None


@dataclass(frozen=True)
class SearchReport:
    """Corpus-level outcome of a counterexample search."""

    principle: PrincipleId
    spec: SemanticsSpec
    corpus: str
    afs_checked: int
    counterexample: Optional[Verdict] = None

    @property
    def outcome(self) -> str:
        # absence of a counterexample on a finite corpus is not a proof
        return VIOLATED if self.counterexample else "no-violation-found"

    def to_dict(self) -> Dict:
        return {
            "principle": self.principle.value,
            "semantics": self.spec.token,
            "corpus": self.corpus,
            "afs_checked": self.afs_checked,
            "outcome": self.outcome,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }


def search(
    corpus: Corpus,
    spec: SpecLike,
    principle: PrincipleId,
    pool: Optional[WorkerPool] = None,
    on_progress: Optional[ProgressCallback] = None,
) -> SearchReport:
    """Search ``corpus`` in index order for the first violation."""
    principle = PrincipleId(principle)
    shown = parse_semantics(spec) if isinstance(spec, str) else spec
    pool = pool or WorkerPool()
    outcome = pool.first_failure(corpus, partial(_probe, shown.token, principle), on_progress)
    counterexample = None
    if outcome.failed:
        found: Verdict = outcome.payload
        counterexample = Verdict(found.principle, shown, found.af, found.witness, outcome.failure_index)
        logger.warning(
            "%s violated by %s on %s (index %d)",
            principle, shown.token, corpus.label, outcome.failure_index,
        )
    return SearchReport(principle, shown, corpus.label, outcome.checked, counterexample)


def find_counterexample(
    corpus: Corpus,
    spec: SpecLike,
    principle: PrincipleId,
    pool: Optional[WorkerPool] = None,
) -> Optional[Verdict]:
    """The first violated verdict in corpus order, or None."""
    return search(corpus, spec, principle, pool).counterexample


def expected_principles(spec: SpecLike) -> Dict[PrincipleId, str]:
    """Principles a combinator inherits from its base, with the reason.

    Every combinator returns a subset of its base's extensions, so
    conflict-freeness and admissibility carry over from the innermost base.
    """
    node = as_spec(spec)
    base = base_of(node)
    expected: Dict[PrincipleId, str] = {}
    if not isinstance(node, Vac):
        return expected
    expected[PrincipleId.CONFLICT_FREENESS] = f"base {base.token} is conflict-free"
    if isinstance(base, Classical) and base.semantics not in (Semantics.CF, Semantics.NA):
        expected[PrincipleId.ADMISSIBILITY] = f"base {base.token} is admissible"
    if node == as_spec("adm-s2"):
        expected[PrincipleId.EXISTENCE] = "admissible extensions without a stable strict superset always exist"
    return expected
