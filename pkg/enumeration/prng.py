"""
Deterministic Generator Module

SplitMix64 with exact rational Bernoulli draws. The update and output
functions are listed in README.md so any implementation can rebuild the same
random corpora.
"""

from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed of item ``index`` in a corpus seeded with ``seed``."""
    return mix64(seed + (index + 1) * GOLDEN_GAMMA)


class SplitMix64:
    """64-bit state, add-gamma update, mix on output."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def bernoulli(self, probability: Fraction) -> bool:
        """Draw one value u and succeed iff u / 2**64 < probability, exactly."""
        draw = self.next()
        return draw * probability.denominator < probability.numerator << 64
