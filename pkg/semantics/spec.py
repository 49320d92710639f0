"""
Semantics Specification Module

A semantics specification is a small expression tree: a classical semantics,
a registered name, or the vacuous-reduct combinator applied to two
specifications. Specifications print back to the command-line token grammar.
"""

from dataclasses import dataclass
from typing import Union

from semantics.classical import Semantics


@dataclass(frozen=True)
class Classical:
    semantics: Semantics

    @property
    def token(self) -> str:
        return self.semantics.value

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class Vac:
    """Extensions of ``base`` whose reduct has no nonempty ``vacuity`` extension."""

    base: "SemanticsSpec"
    vacuity: "SemanticsSpec"

    @property
    def token(self) -> str:
        return f"vac:{self.base.token}:{self.vacuity.token}"

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class Named:
    """A registry token such as ``ud``; resolved through the registry."""

    name: str

    @property
    def token(self) -> str:
        return self.name

    def __str__(self) -> str:
        return self.name


SemanticsSpec = Union[Classical, Vac, Named]


def classical(token: str) -> Classical:
    return Classical(Semantics.parse(token))


def vac(base: Union[SemanticsSpec, str], vacuity: Union[SemanticsSpec, str]) -> Vac:
    """Shorthand used by registries and tests: strings are classical tokens."""
    if isinstance(base, str):
        base = classical(base)
    if isinstance(vacuity, str):
        vacuity = classical(vacuity)
    return Vac(base, vacuity)


def depth(spec: SemanticsSpec) -> int:
    """Combinator nesting depth; classical and named leaves count zero."""
    if isinstance(spec, Vac):
        return 1 + max(depth(spec.base), depth(spec.vacuity))
    return 0
