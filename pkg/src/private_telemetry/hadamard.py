"""Sylvester Hadamard arithmetic: single entries and the fast transform."""

from __future__ import annotations

import numpy as np

from .errors import ParameterError


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def hadamard_entry(l: int, c: int, m: int) -> int:
    """Entry H_m[l][c] of the m x m Sylvester matrix: (-1)^popcount(l AND c)."""
    if not _is_power_of_two(m):
        raise ParameterError("Hadamard dimension must be a power of two")
    if not (0 <= l < m and 0 <= c < m):
        raise ParameterError("Hadamard indices out of range")
    return -1 if (l & c).bit_count() & 1 else 1


def fwht(v) -> np.ndarray:
    """Un-normalized fast Walsh-Hadamard transform, H_m @ v.

    Integer input stays integer (the butterflies are exact), float input
    stays float. O(m log m).
    """
    a = np.array(v, copy=True)
    if a.ndim != 1:
        raise ParameterError("fwht expects a 1-d vector")
    n = a.shape[0]
    if not _is_power_of_two(n):
        raise ParameterError("fwht length must be a power of two")
    if a.dtype.kind not in "iuf":
        raise ParameterError("fwht expects a numeric vector")
    if a.dtype.kind in "iu":
        a = a.astype(np.int64)
    h = 1
    while h < n:
        b = a.reshape(-1, 2 * h)
        x = b[:, :h].copy()
        y = b[:, h:].copy()
        b[:, :h] = x + y
        b[:, h:] = x - y
        h *= 2
    return a


def fwht_rows(mat) -> np.ndarray:
    """Apply the transform to every row of a 2-d array at once."""
    a = np.array(mat, copy=True)
    if a.ndim != 2:
        raise ParameterError("fwht_rows expects a 2-d array")
    rows, n = a.shape
    if not _is_power_of_two(n):
        raise ParameterError("fwht row length must be a power of two")
    if a.dtype.kind in "iu":
        a = a.astype(np.int64)
    h = 1
    while h < n:
        b = a.reshape(rows, -1, 2 * h)
        x = b[:, :, :h].copy()
        y = b[:, :, h:].copy()
        b[:, :, :h] = x + y
        b[:, :, h:] = x - y
        h *= 2
    return a.reshape(rows, n)
