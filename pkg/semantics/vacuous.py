"""
Vacuous Reduct Module

This module evaluates semantics specifications. A combinator node keeps the
base extensions E whose reduct F^E admits no nonempty extension of the
vacuity semantics; the check stops at the first nonempty witness.
"""

import logging
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Tuple, Union

from core.argument_sets import ArgumentSet, ExtensionSet, canonical
from core.framework import ArgumentationFramework, lift
from semantics import classical
from semantics.classical import DEFAULT_CACHE_SIZE
from semantics.registry import normalize, parse_semantics
from semantics.spec import Classical, SemanticsSpec, Vac

logger = logging.getLogger(__name__)

SpecLike = Union[SemanticsSpec, str]


@lru_cache(maxsize=None)
def _normalized(spec: SemanticsSpec) -> SemanticsSpec:
    return normalize(spec)


@lru_cache(maxsize=None)
def _parsed(token: str) -> SemanticsSpec:
    return _normalized(parse_semantics(token))


def as_spec(spec: SpecLike) -> SemanticsSpec:
    """Accept a parsed spec or a token and return the normalized tree."""
    if isinstance(spec, str):
        return _parsed(spec)
    return _normalized(spec)


def iter_extensions(af: ArgumentationFramework, spec: SpecLike) -> Iterator[ArgumentSet]:
    """Yield extensions lazily, in search order.

    Classical leaves use the lazy classical search; combinator nodes filter
    their base stream through the vacuity check.
    """
    node = as_spec(spec)
    if isinstance(node, Classical):
        return classical.iter_extensions(af, node.semantics)
    return (
        e for e in iter_extensions(af, node.base)
        if vacuity_holds(af, e, node.vacuity)
    )


def _first_nonempty(af: ArgumentationFramework, spec: SemanticsSpec) -> Optional[ArgumentSet]:
    for e in iter_extensions(af, spec):
        if e:
            return e
    return None


def vacuity_holds(af: ArgumentationFramework, subset: ArgumentSet, tau: SpecLike) -> bool:
    """True iff every ``tau`` extension of the reduct F^E is empty."""
    reduct, _ = af.reduct(subset)
    if reduct.arg_count == 0:
        return True
    return _first_nonempty(reduct, as_spec(tau)) is None


def vacuity_witness(
    af: ArgumentationFramework, subset: ArgumentSet, tau: SpecLike
) -> Optional[ArgumentSet]:
    """A nonempty ``tau`` extension of F^E in ``af``'s indices, or None."""
    reduct, index_map = af.reduct(subset)
    witness = _first_nonempty(reduct, as_spec(tau))
    if witness is None:
        return None
    return lift(witness, index_map)


def _compute(arg_count: int, relation: int, spec: SemanticsSpec) -> ExtensionSet:
    af = ArgumentationFramework(arg_count, relation)
    if isinstance(spec, Classical):
        return classical.extensions(af, spec.semantics)
    return canonical(
        e for e in vac_extensions(af, spec.base)
        if vacuity_holds(af, e, spec.vacuity)
    )


_cached_compute: Callable[[int, int, SemanticsSpec], ExtensionSet] = lru_cache(
    maxsize=DEFAULT_CACHE_SIZE
)(_compute)


def configure_cache(maxsize: int) -> None:
    """Resize both the combinator memo and the classical one."""
    global _cached_compute
    logger.debug("combinator cache resized to %d entries", maxsize)
    classical.configure_cache(maxsize)
    _cached_compute = lru_cache(maxsize=maxsize)(_compute)


def vac_extensions(af: ArgumentationFramework, spec: SpecLike) -> ExtensionSet:
    """All extensions of ``spec`` on ``af`` in canonical order."""
    return _cached_compute(af.arg_count, af.relation, as_spec(spec))


def reduct_chain(
    af: ArgumentationFramework, subset: ArgumentSet, spec: SpecLike
) -> List[Tuple[SemanticsSpec, bool, Optional[ArgumentSet]]]:
    """Walk the base chain of a nested spec for one set.

    Returns ``(node, vacuity_holds, witness)`` for every combinator node on the
    base path, outermost first. The witness is a nonempty vacuity extension
    of the reduct, in ``af``'s indices, when the check fails.
    """
    chain = []
    node = as_spec(spec)
    while isinstance(node, Vac):
        witness = vacuity_witness(af, subset, node.vacuity)
        chain.append((node, witness is None, witness))
        node = node.base
    return chain


def base_of(spec: SpecLike) -> SemanticsSpec:
    """Innermost classical base of a spec."""
    node = as_spec(spec)
    while isinstance(node, Vac):
        node = node.base
    return node
