"""Deterministic random numbers.

Counter-based splitmix64 generator. Every draw is a pure function of a
64-bit state, so streams are reproducible bit for bit across platforms
and across the numpy/numba kernel builds. Bulk draws vectorize by
computing the mix over an array of counters.
"""

import numpy as np

from . import backend

GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1

_INV_2_53 = 1.0 / float(1 << 53)


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def _mix_bulk(counters):
    # counters: uint64 array, already advanced past the current state
    z = counters
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


class Rng:
    """splitmix64 stream seeded once, advanced draw by draw."""

    def __init__(self, seed: int):
        if not isinstance(seed, (int, np.integer)):
            raise TypeError("seed must be an integer")
        self.seed = int(seed)
        self._state = int(seed) & _MASK

    def next_uint64(self) -> int:
        self._state = (self._state + GAMMA) & _MASK
        return _mix(self._state)

    def _bulk(self, count: int):
        # vectorized draw of `count` raw words, advancing state by count
        with np.errstate(over="ignore"):
            counters = (
                np.uint64(self._state)
                + np.uint64(GAMMA) * np.arange(1, count + 1, dtype=np.uint64)
            )
            out = _mix_bulk(counters)
        self._state = (self._state + count * GAMMA) & _MASK
        return out

    def random(self, size=None):
        """Uniform floats in [0, 1) with 53 random bits each."""
        if size is None:
            return (self.next_uint64() >> 11) * _INV_2_53
        bits = self._bulk(int(size))
        return (bits >> np.uint64(11)).astype(np.float64) * _INV_2_53

    def normal(self, size):
        """Standard normals via the Box-Muller transform.

        Draws two uniforms per pair; u1 is shifted into (0, 1] so the log
        never sees zero. An odd request discards the last partner draw.
        """
        size = int(size)
        pairs = (size + 1) // 2
        bits1 = self._bulk(pairs)
        bits2 = self._bulk(pairs)
        u1 = ((bits1 >> np.uint64(11)).astype(np.float64) + 1.0) * _INV_2_53
        u2 = (bits2 >> np.uint64(11)).astype(np.float64) * _INV_2_53
        r = np.sqrt(-2.0 * np.log(u1))
        theta = 2.0 * np.pi * u2
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        return out[:size]

    def integers_below(self, bound: int) -> int:
        """One integer uniform on [0, bound), rejection sampled."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        rem = (1 << 64) % bound
        limit = (1 << 64) - rem
        while True:
            x = self.next_uint64()
            if x < limit:
                return x % bound

    def permutation(self, n: int):
        """Fisher-Yates permutation of range(n), backend-accelerated."""
        if n < 0:
            raise ValueError("n must be non-negative")
        if n == 0:
            return np.empty(0, dtype=np.int64)
        perm, new_state = backend.kernels().fy_permutation(n, np.uint64(self._state))
        self._state = int(new_state)
        return np.asarray(perm, dtype=np.int64)


def shuffled_indices(n: int, rng: Rng):
    return rng.permutation(n)
