"""Summatory totient function Psi(x) = sum of phi(n) for 1 <= n <= x.

Two independent evaluation routes:

* psi_naive: direct prefix sum over a totient table; linear work,
  usable wherever a sieve of size x fits.
* psi_fast: the hyperbola-method recursion
      Psi(v) = v(v+1)/2 - sum_{d=2..v} Psi(floor(v/d))
  evaluated over the O(sqrt(v)) distinct quotient values with
  memoization, with small arguments answered from a sieved prefix
  table.  With a prefix table of length ~x^(2/3) the total work is
  O(x^(2/3)).

All sums are exact integers.  Vectorized partial sums go through
exact_array_sum, which chunks so that no int64 accumulation can wrap.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterator

import numpy as np

from .errors import CapacityError
from .sieve import MEMORY_CEILING, FactorSieve, build_sieve

#: pi^2 to 38 significant digits (parsed to the nearest double).
PI_SQUARED = float("9.8696044010893586188344909998761511353")

#: Largest x accepted by psi_fast.  At 1e12 the run takes minutes on one
#: core; beyond that this package is the wrong tool.
DESK_CEILING = 10**12


def exact_array_sum(a: np.ndarray) -> int:
    """Sum an int64 array exactly, returning a Python int.

    np.sum would wrap silently on overflow.  Chunks the array so each
    partial sum stays below 2^62 (chunk length = 2^62 / max element)
    and accumulates the chunk totals in arbitrary precision.
    """
    if a.size == 0:
        return 0
    tmax = int(abs(a).max())
    step = max(1, (1 << 62) // max(tmax, 1))
    if a.size <= step:
        return int(a.sum())
    return sum(int(a[i : i + step].sum()) for i in range(0, a.size, step))


def divisor_blocks(v: int) -> Iterator[tuple[int, int, int]]:
    """Yield (d_lo, d_hi, q) blocks partitioning d in [1, v] by q = v // d.

    Within each block every d has the same quotient q; there are at most
    2*sqrt(v) blocks.  Standard device for turning sums over d into sums
    over distinct quotient values.
    """
    d = 1
    while d <= v:
        q = v // d
        d_hi = v // q
        yield d, d_hi, q
        d = d_hi + 1


def psi_naive(x: int, sieve: FactorSieve) -> int:
    """Psi(x) by direct summation of the sieved totient table."""
    if x < 0:
        raise ValueError(f"x={x} must be nonnegative")
    if x == 0:
        return 0
    sieve.check_range(x, "x")
    return exact_array_sum(sieve.phi[1 : x + 1])


class PsiCache:
    """Memoized evaluator for Psi over one sieve.

    Holds the sieve, an int64 prefix-sum table of its phi column, and a
    dict of Psi values already computed at arguments above the sieve
    limit.  Safe to reuse across many psi_fast calls; the memo only
    grows.
    """

    def __init__(self, sieve: FactorSieve):
        self.sieve = sieve
        self.prefix = np.cumsum(sieve.phi)  # int64; Psi(1e8) ~ 3e15, no wrap
        self.entries: dict[int, int] = {}

    @classmethod
    def for_target(
        cls, x: int, sieve_limit: int | None = None, memory_ceiling: int = MEMORY_CEILING
    ) -> "PsiCache":
        """Cache sized for evaluating Psi at x.

        Picks the work-balancing table length ~x^(2/3) unless an
        explicit sieve_limit is given, and never sieves past x itself
        or the memory ceiling.
        """
        if sieve_limit is None:
            sieve_limit = _ceil_cbrt(x * x)
        sieve_limit = max(1, min(sieve_limit, max(x, 1), memory_ceiling))
        return cls(build_sieve(sieve_limit, memory_ceiling))

    def psi(self, v: int) -> int:
        """Psi(v) for 0 <= v <= the desk ceiling."""
        if v < 0:
            raise ValueError(f"x={v} must be nonnegative")
        if v > DESK_CEILING:
            raise CapacityError(f"x={v} beyond desk ceiling {DESK_CEILING}")
        if v <= self.sieve.limit:
            return int(self.prefix[v])
        return self._psi_above(v)

    def _psi_above(self, v: int) -> int:
        hit = self.entries.get(v)
        if hit is not None:
            return hit
        L = self.sieve.limit
        prefix = self.prefix
        total = v * (v + 1) // 2
        s = isqrt(v)
        d_hi = v // (s + 1)  # last d whose quotient exceeds s
        d_rec = min(d_hi, v // (L + 1))  # last d whose quotient exceeds L
        d = 2
        while d <= d_rec:  # quotients > L: recurse, counted per block
            q = v // d
            d2 = min(v // q, d_rec)
            total -= (d2 - d + 1) * self._psi_above(q)
            d = d2 + 1
        if d <= d_hi:  # quotients in (s, L]: distinct d per term, table lookups
            ds = np.arange(d, d_hi + 1, dtype=np.int64)
            total -= exact_array_sum(prefix[v // ds])
        q_top = min(s, L)
        if q_top >= 1:  # quotients 1..min(s, L): weight by block width
            qs = np.arange(1, q_top + 1, dtype=np.int64)
            counts = v // qs - v // (qs + 1)
            total -= exact_array_sum(prefix[qs] * counts)
        for q in range(L + 1, s + 1):  # only when L < sqrt(v)
            count = v // q - v // (q + 1)
            if count:
                total -= count * self._psi_above(q)
        self.entries[v] = total
        return total


def psi_fast(x: int, cache: PsiCache | None = None, sieve_limit: int | None = None) -> int:
    """Psi(x) by the memoized quotient recursion; O(x^(2/3)) with a
    fresh default cache, faster when a warm cache is passed in."""
    if cache is None:
        cache = PsiCache.for_target(x, sieve_limit=sieve_limit)
    return cache.psi(x)


def psi_main_term(x: float) -> float:
    """Leading asymptotic term 3 x^2 / pi^2 of Psi(x)."""
    return 3.0 * x * x / PI_SQUARED


def _ceil_cbrt(n: int) -> int:
    """Smallest integer c with c^3 >= n, exact for any size of n."""
    if n <= 0:
        return 0
    c = round(n ** (1 / 3))
    while c**3 < n:
        c += 1
    while c > 1 and (c - 1) ** 3 >= n:
        c -= 1
    return c
