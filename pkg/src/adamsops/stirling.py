"""Exact combinatorial kernel: binomial coefficients, Stirling numbers of both
kinds, and the alternating power sum tying them together.

All values are plain Python integers, so everything is arbitrary precision.
The Stirling tables are memoized row by row; memoization is invisible to
callers and the cached rows are immutable, so concurrent use is safe.
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "binomial",
    "stirling2",
    "stirling1_unsigned",
    "alternating_power_sum",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling2_row(m: int) -> tuple[int, ...]:
    if m == 0:
        return (1,)
    prev = _stirling2_row(m - 1)
    row = [0] * (m + 1)
    for n in range(1, m + 1):
        above = prev[n] if n < len(prev) else 0
        row[n] = n * above + prev[n - 1]
    return tuple(row)


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < len(prev) else 0
        row[k] = prev[k - 1] + (n - 1) * above
    return tuple(row)


def _warm(rowfn, upto: int) -> None:
    # lru_cache recursion is one level per row; walking up keeps the stack flat
    # no matter how large the request is.
    for i in range(upto + 1):
        rowfn(i)


def stirling2(m: int, n: int) -> int:
    """Stirling number of the second kind {m n}: set partitions of an
    m-element set into n nonempty blocks.  {0 0} = 1."""
    if m < 0 or n < 0:
        raise ValueError(f"stirling2: arguments must be non-negative, got ({m}, {n})")
    if n > m:
        return 0
    _warm(_stirling2_row, m)
    return _stirling2_row(m)[n]


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind <n k>: permutations of an
    n-element set with exactly k cycles.

    Defined by <n k> = <n-1 k-1> + (n-1)<n-1 k> with <0 0> = 1.
    """
    if n < 0 or k < 0:
        raise ValueError(
            f"stirling1_unsigned: arguments must be non-negative, got ({n}, {k})"
        )
    if k > n:
        return 0
    _warm(_stirling1_row, n)
    return _stirling1_row(n)[k]


def alternating_power_sum(n: int, m: int) -> int:
    """Sum_{k=0}^{n} (-1)^(n+k) C(n,k) k^m, computed by direct summation.

    The convention 0^0 = 1 applies.  The value equals n! * {m n}; in
    particular it is m! when n = m and 0 when n > m.
    """
    if n < 0 or m < 0:
        raise ValueError(
            f"alternating_power_sum: arguments must be non-negative, got ({n}, {m})"
        )
    return sum((-1) ** (n + k) * binomial(n, k) * k**m for k in range(n + 1))
