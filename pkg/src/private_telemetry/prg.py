"""SplitMix64 pseudorandom stream.

The client and the server both expand the shared 64-bit seed through this
generator to sample the same hash family locally, so the exact integer
sequence matters: standard SplitMix64 constants, wrap-around 64-bit
arithmetic, no platform dependence.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_INCREMENT = 0x9E3779B97F4A7C15
_MULT1 = 0xBF58476D1CE4E5B9
_MULT2 = 0x94D049BB133111EB


def _finalize(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MULT1) & MASK64
    z = ((z ^ (z >> 27)) * _MULT2) & MASK64
    return z ^ (z >> 31)


def mix64(x: int) -> int:
    """The output SplitMix64 would produce from state ``x`` in one step."""
    return _finalize((x + _INCREMENT) & MASK64)


def derive_seed(base: int, *parts: int) -> int:
    """Fold integer components into a fresh 64-bit seed, deterministically."""
    s = base & MASK64
    for part in parts:
        s = mix64(s ^ (part & MASK64))
    return s


class SplitMix64:
    """A seeded 64-bit stream with ``random``/``randrange`` conveniences.

    The float and integer helpers are built only from ``next_u64`` so a
    fixed seed reproduces the identical draw sequence everywhere.
    """

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _INCREMENT) & MASK64
        return _finalize(self._state)

    def random(self) -> float:
        # 53 top bits, same construction as the usual double-from-u64 recipe
        return (self.next_u64() >> 11) * (2.0**-53)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection, bias-free."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (MASK64 + 1) - ((MASK64 + 1) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def spawn(self) -> "SplitMix64":
        """Child stream seeded from this one; used for per-worker streams."""
        return SplitMix64(self.next_u64())
