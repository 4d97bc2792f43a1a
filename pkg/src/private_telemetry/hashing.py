"""Bucket hashing for ASCII event strings.

A family of k degree-2 polynomials over GF(p), p = 2^61 - 1, gives 3-wise
independent bucket assignments. Families are derived from a shared seed so
client and server never have to exchange coefficient matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError, ValidationError
from .prg import SplitMix64

FIELD_PRIME = (1 << 61) - 1


@dataclass(frozen=True)
class HashFamily:
    """k coefficient triples (a0, a1, a2) mod FIELD_PRIME, mapping into [0, m)."""

    coeffs: tuple[tuple[int, int, int], ...]
    m: int

    @property
    def k(self) -> int:
        return len(self.coeffs)


def derive_hash_family(seed: int, k: int, m: int) -> HashFamily:
    """Expand ``seed`` into k coefficient triples.

    Consumes the SplitMix64 stream in order a0, a1, a2 per function, each
    output reduced mod FIELD_PRIME. Same (seed, k, m) always yields the
    bit-identical family.
    """
    if k < 1:
        raise ParameterError("hash family needs at least one function")
    if m < 2:
        raise ParameterError("bucket count must be at least 2")
    stream = SplitMix64(seed)
    coeffs = tuple(
        (
            stream.next_u64() % FIELD_PRIME,
            stream.next_u64() % FIELD_PRIME,
            stream.next_u64() % FIELD_PRIME,
        )
        for _ in range(k)
    )
    return HashFamily(coeffs=coeffs, m=m)


@lru_cache(maxsize=4096)
def string_to_field(item: str) -> int:
    """Fold an ASCII string into a field element.

    acc := (acc * 257 + byte + 1) mod p over the bytes in order. The +1 keeps
    leading NUL bytes significant and makes the map injective for short keys.
    """
    if not isinstance(item, str) or item == "":
        raise ValidationError("event string must be non-empty")
    try:
        data = item.encode("ascii")
    except UnicodeEncodeError:
        raise ValidationError("event string must be ASCII") from None
    acc = 0
    for b in data:
        acc = (acc * 257 + b + 1) % FIELD_PRIME
    return acc


def hash_eval(family: HashFamily, j: int, item: str) -> int:
    """Bucket of ``item`` under the j-th function: ((a2 x^2 + a1 x + a0) mod p) mod m."""
    if not 0 <= j < family.k:
        raise IndexError(f"hash index {j} out of range for k={family.k}")
    x = string_to_field(item)
    a0, a1, a2 = family.coeffs[j]
    return ((a2 * x * x + a1 * x + a0) % FIELD_PRIME) % family.m
