"""Seedable, portable random number generation for the simulators.

The generator is SplitMix64.  Its entire state is one 64-bit word and the
j-th output (counting from 0) is a pure function of the seed:

    output(seed, j) = mix64((seed + (j + 1) * GAMMA) mod 2**64)

with GAMMA = 0x9E3779B97F4A7C15 and mix64 the murmur-style finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;  z &= 2**64 - 1
    z ^= z >> 27;  z *= 0x94D049BB133111EB;  z &= 2**64 - 1
    z ^= z >> 31

Uniform draws on {1, .., n} use rejection sampling on the raw 64-bit
stream: a word u is accepted iff u < 2**64 - (2**64 mod n), and the draw
is then u mod n + 1.  Each rejected word is consumed and the next word is
tried.  Any implementation of this recipe, in any language, reproduces
the exact same draw sequence for a given seed.

Worker streams are derived from a master seed with

    sub_seed(seed, index) = mix64((seed + (index + 1) * LEAP) mod 2**64)

where LEAP = 0xD1342543DE82EF95, so that block streams never coincide
with the master stream itself.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
LEAP = 0xD1342543DE82EF95

_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """Finalizing bijection of SplitMix64 on 64-bit words."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & MASK64
    return z ^ (z >> 31)


def sub_seed(seed: int, index: int) -> int:
    """Deterministic seed for worker/block `index` under master `seed`."""
    if index < 0:
        raise ValueError("block index must be nonnegative")
    return mix64((seed + (index + 1) * LEAP) & MASK64)


class SplitMix64:
    """Sequential view of the stream defined in the module docstring."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GAMMA) & MASK64
        return mix64(self._state)

    def uniform_int(self, n: int) -> int:
        """One draw uniform on {1, .., n} by rejection on the raw stream."""
        if n < 1:
            raise ValueError("uniform_int needs n >= 1")
        limit = ((1 << 64) // n) * n  # == 2**64 - (2**64 mod n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n + 1


def stream_u64(seed: int, start: int, count: int) -> np.ndarray:
    """Raw outputs `start .. start+count-1` of the seed's stream, vectorized.

    Bit-identical to `count` calls of SplitMix64(seed).next_u64() after
    skipping `start` outputs; uint64 arithmetic wraps exactly like the
    scalar mod-2**64 recipe.
    """
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = (np.uint64(seed & MASK64) + idx * np.uint64(GAMMA))
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_A)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_B)
    return z ^ (z >> np.uint64(31))


def uniform_block(seed: int, n: int, count: int) -> np.ndarray:
    """`count` uniform draws on {1, .., n} from the seed's stream.

    Fast path: generate exactly `count` raw words; if none is rejected
    (probability < count * n / 2**64), the draws are those words reduced
    mod n.  Otherwise fall back to the scalar generator, which replays
    the identical stream including rejections.
    """
    if not 1 <= n < 1 << 63:
        raise ValueError("uniform_block needs 1 <= n < 2**63 (int64 output)")
    if count < 0:
        raise ValueError("count must be nonnegative")
    limit = ((1 << 64) // n) * n
    raw = stream_u64(seed, 0, count)
    # limit == 2**64 exactly when n is a power of two: nothing is rejectable.
    if limit <= MASK64 and bool((raw >= np.uint64(limit)).any()):
        gen = SplitMix64(seed)
        return np.array([gen.uniform_int(n) for _ in range(count)],
                        dtype=np.int64)
    return (raw % np.uint64(n) + np.uint64(1)).astype(np.int64)
