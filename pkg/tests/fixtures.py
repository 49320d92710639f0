"""
Shared test frameworks.

Small frameworks with known extensions, used across the unit tests.
"""

from core.framework import ArgumentationFramework

# 3-cycle a->b->c->a with c attacking d
F1 = ArgumentationFramework.from_names("abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])

# mutual attack a<->b, b attacks the self-attacker c
F2 = ArgumentationFramework.from_names("abc", [("a", "b"), ("b", "a"), ("b", "c"), ("c", "c")])

# 3-cycle next to a 2-chain d->e
F3 = ArgumentationFramework.from_names("abcde", [("a", "b"), ("b", "c"), ("c", "a"), ("d", "e")])

F4 = ArgumentationFramework.from_names(
    "abcd", [("a", "b"), ("a", "c"), ("b", "a"), ("c", "a"), ("c", "d"), ("d", "d"), ("d", "c")]
)

# self-attacker a attacking b
F5 = ArgumentationFramework.from_names("ab", [("a", "a"), ("a", "b")])

# mutual attack
F6 = ArgumentationFramework.from_names("ab", [("a", "b"), ("b", "a")])

# self-attacker a attacking b, b attacking c
F7 = ArgumentationFramework.from_names("abc", [("a", "a"), ("a", "b"), ("b", "c")])

THREE_CYCLE = ArgumentationFramework.from_names("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def sets(af: ArgumentationFramework, *groups: str):
    """Masks for argument groups written as strings: sets(F1, "", "d") is [0, {d}]."""
    return [af.mask_of(group) for group in groups]


def named(af: ArgumentationFramework, extensions):
    """Extension masks as sorted name strings, e.g. ["", "d"]."""
    return ["".join(af.names_of(e)) for e in extensions]


F1_APX = """arg(a).
arg(b).
arg(c).
arg(d).
att(a,b).
att(b,c).
att(c,a).
att(c,d).
"""
