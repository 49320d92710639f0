"""
Isomorphism Module

Canonical forms of small frameworks by exhaustive permutation scan.
"""

from itertools import permutations

from core.errors import CapacityError
from core.framework import ArgumentationFramework

MAX_CANONICAL_ARGUMENTS = 8


def adjacency_string(af: ArgumentationFramework) -> str:
    """Row-major adjacency bits: character ``i * n + j`` is 1 iff i attacks j."""
    n = af.arg_count
    return "".join("1" if af.relation >> k & 1 else "0" for k in range(n * n))


def canonical_form(af: ArgumentationFramework) -> str:
    """Lexicographically least adjacency string over all argument orders.

    Isomorphic frameworks share the value; the empty framework maps to "".
    """
    n = af.arg_count
    if n > MAX_CANONICAL_ARGUMENTS:
        raise CapacityError(
            f"canonical form needs a permutation scan; {n} arguments exceeds {MAX_CANONICAL_ARGUMENTS}"
        )
    if n == 0:
        return ""

    rows = [af.out_mask(i) for i in range(n)]
    top = n * n - 1
    best = None
    for order in permutations(range(n)):
        # character k of the string is bit (top - k) of value
        value = 0
        k = 0
        for source in order:
            targets = rows[source]
            for target in order:
                if targets >> target & 1:
                    value |= 1 << (top - k)
                k += 1
            if best is not None and value >> (top - k + 1) > best >> (top - k + 1):
                break
        else:
            if best is None or value < best:
                best = value
    return format(best, f"0{n * n}b")


def is_canonical(af: ArgumentationFramework) -> bool:
    """True iff ``af``'s own labeling is the canonical representative of its class."""
    return adjacency_string(af) == canonical_form(af)
