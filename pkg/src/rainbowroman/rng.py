"""Deterministic 64-bit generator for reproducible sampling.

This is the split-mix construction: the state advances by the golden
ratio increment 0x9E3779B97F4A7C15 and each output is the finalized mix

    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB
    z ^= z >> 31

with all arithmetic modulo 2**64.  The same seed yields the same stream
on any platform, which the scan and fixture machinery rely on for
byte-identical reports.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """Stateful wrapper over the split-mix step."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_below(self, bound: int) -> int:
        """Uniform-enough draw in [0, bound) by reduction modulo bound."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def next_bits(self, count: int) -> int:
        """An integer of ``count`` independent fair bits."""
        out = 0
        filled = 0
        while filled < count:
            out |= self.next_u64() << filled
            filled += 64
        return out & ((1 << count) - 1)
