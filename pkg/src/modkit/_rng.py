"""Seeded, platform-independent randomness for sampling and splitting.

A splitmix64 stream drives Fisher-Yates shuffles over lexicographically
sorted ids, so every sampling decision in the toolkit is reproducible
byte-for-byte from a single 64-bit seed, independent of Python hash
randomization or numpy version.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TypeVar

_MASK64 = (1 << 64) - 1

T = TypeVar("T")


class SplitMix64:
    """Minimal splitmix64 generator (Steele, Lea & Flood mixing constants)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound). Modulo bias is < 2**-50 for the
        bounds used here and, crucially, deterministic."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_uint64() % bound


def shuffled(items: Iterable[T], seed: int) -> list[T]:
    """Fisher-Yates shuffle of ``sorted(items)`` using a seeded SplitMix64.

    Items are sorted first so the result depends only on the set of items
    and the seed, never on input order.
    """
    out = sorted(items)  # type: ignore[type-var]
    rng = SplitMix64(seed)
    for i in range(len(out) - 1, 0, -1):
        j = rng.below(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def sample_without_replacement(items: Sequence[T], k: int, seed: int) -> list[T]:
    """First ``k`` elements of the seeded shuffle of ``items``."""
    if k > len(items):
        raise ValueError(f"cannot sample {k} from {len(items)} items")
    return shuffled(items, seed)[:k]
