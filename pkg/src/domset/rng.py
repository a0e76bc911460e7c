"""Seedable, platform-independent random number generation.

Every stochastic component of the toolkit draws from the same fixed generator:
xoshiro256** seeded through splitmix64.  The algorithm is pinned (rather than
delegating to ``random`` or ``numpy.random``) so that a given seed produces
bit-identical streams on every platform and under both the compiled and the
pure-Python search kernels, which advance the very same state words in place.

The generator state lives in a 4-element ``numpy.uint64`` array.  Python code
uses the :class:`Xoshiro256StarStar` wrapper; the hot loops in
``domset._core`` / ``domset._pure`` receive the raw state array and keep
mutating it, so a stream can cross the Python/kernel boundary mid-run without
any divergence.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(state: int) -> tuple[int, int]:
    """Advance a splitmix64 state once; return ``(new_state, output)``."""
    state = (state + _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def child_seed(base_seed: int, k: int) -> int:
    """Derive the seed for run ``k`` (0-based) from an experiment base seed.

    Defined as the ``k``-th output of a splitmix64 sequence started at
    ``base_seed``; computed in closed form.  Distinct ``k`` give statistically
    independent streams, and the derivation is part of the reproducibility
    contract: run ``k`` of an experiment always sees the same seed.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    state = (base_seed + (k + 1) * _GOLDEN) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class Xoshiro256StarStar:
    """xoshiro256** generator with splitmix64 seeding.

    ``state`` is a ``numpy.uint64[4]`` array shared with the search kernels;
    both sides read and write it in place so a single logical stream services
    an entire run regardless of which backend executes which part.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        s = int(seed) & _MASK64
        words = []
        for _ in range(4):
            s, out = _splitmix64(s)
            words.append(out)
        if not any(words):
            words[0] = _GOLDEN  # the all-zero state is a fixed point
        self.state = np.array(words, dtype=np.uint64)

    def next_u64(self) -> int:
        s = self.state
        s0 = int(s[0])
        s1 = int(s[1])
        s2 = int(s[2])
        s3 = int(s[3])
        x = (s1 * 5) & _MASK64
        result = (((x << 7) | (x >> 57)) & _MASK64) * 9 & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = ((s3 << 45) | (s3 >> 19)) & _MASK64
        s[0] = s0
        s[1] = s1
        s[2] = s2
        s[3] = s3
        return result

    def random(self) -> float:
        """Uniform double in [0, 1): the top 53 bits of one 64-bit draw."""
        return (self.next_u64() >> 11) * 1.1102230246251565e-16  # 2**-53

    def randint_below(self, bound: int) -> int:
        """Unbiased uniform integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        while True:
            x = self.next_u64()
            r = x % bound
            if x - r <= _MASK64 - bound + 1:
                return r

    def shuffle(self, seq) -> None:
        """In-place Fisher-Yates shuffle of a mutable sequence."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randint_below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def getstate(self) -> tuple[int, int, int, int]:
        return tuple(int(w) for w in self.state)

    def setstate(self, words) -> None:
        if len(words) != 4:
            raise ValueError("state must have 4 words")
        self.state[:] = [int(w) & _MASK64 for w in words]
