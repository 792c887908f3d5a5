"""Sieve-backed elementary arithmetic functions.

Builds a factor sieve up to a limit in one pass: a smallest-prime-factor
table (O(1) factorization queries) and an exact Euler-totient table.
Everything downstream (summatory functions, restricted sums, identity
sweeps) reads these two tables.

The totient of n with prime factorization p1^a1 ... pr^ar is
n * prod(1 - 1/pi); the sieve evaluates this with integer arithmetic
only, so every table entry is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import CapacityError

#: Default cap on sieve table length, in entries.  ~1.2 GB of tables at
#: the cap (int64 phi + int32 spf); meant as a desk-scale guard, not a
#: hard architectural bound.
MEMORY_CEILING = 10**8

# Deterministic Miller-Rabin witness set: correct for all n < 3.317e24,
# far beyond the 1e12 desk ceiling used elsewhere in this package.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class FactorSieve:
    """Immutable pair of tables indexed 0..limit.

    spf[n] is the smallest prime factor of n (spf[p] = p exactly when p
    is prime; entries below 2 are 0 and unused).  phi[n] is Euler's
    totient, with phi[0] = 0 and phi[1] = 1.  Arrays are marked
    read-only, so a sieve can be shared freely across threads.
    """

    limit: int
    spf: np.ndarray
    phi: np.ndarray

    def check_range(self, n: int, what: str = "n") -> None:
        if not 1 <= n <= self.limit:
            raise ValueError(f"{what}={n} outside sieve range [1, {self.limit}]")


def build_sieve(limit: int, memory_ceiling: int = MEMORY_CEILING) -> FactorSieve:
    """Build the smallest-prime-factor and totient tables up to limit.

    Strikes every prime power p^k <= limit across its multiples with
    vectorized slice updates (primes taken up to sqrt(limit)), then
    repairs the single prime factor > sqrt(limit) that can remain per
    entry.  Each entry is touched once per prime power dividing it, and
    the Python-level loop runs only over primes up to sqrt(limit).

    Raises CapacityError if limit is 0 or exceeds memory_ceiling.
    """
    if limit < 1 or limit > memory_ceiling:
        raise CapacityError(
            f"sieve limit {limit} outside [1, {memory_ceiling}] (memory ceiling)"
        )
    phi = np.ones(limit + 1, dtype=np.int64)
    rem = np.arange(limit + 1, dtype=np.int64)  # cofactor not yet factored out
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, isqrt(limit) + 1):
        if spf[p] == 0:  # untouched by smaller primes, so p is prime
            block = spf[p::p]
            block[block == 0] = p
            phi[p::p] *= p - 1
            rem[p::p] //= p
            pk = p * p
            while pk <= limit:
                phi[pk::pk] *= p
                rem[pk::pk] //= p
                pk *= p
    big = rem > 1  # entries with one remaining prime factor > sqrt(limit)
    phi[big] *= rem[big] - 1
    unset = np.nonzero(spf[2:] == 0)[0].astype(np.int64) + 2
    spf[unset] = unset
    phi[0] = 0
    spf.flags.writeable = False
    phi.flags.writeable = False
    return FactorSieve(limit=limit, spf=spf, phi=phi)


def phi(n: int, sieve: FactorSieve) -> int:
    """Euler's totient phi(n), read from the sieve table."""
    sieve.check_range(n)
    return int(sieve.phi[n])


def factorize(n: int, sieve: FactorSieve) -> list[tuple[int, int]]:
    """Prime factorization of n as ascending (prime, exponent) pairs.

    Walks the smallest-prime-factor chain; O(log n) table queries.
    factorize(1) is the empty list.
    """
    sieve.check_range(n)
    spf = sieve.spf
    out: list[tuple[int, int]] = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def phi_from_factorization(n: int, sieve: FactorSieve) -> int:
    """Totient via the product formula over the prime factorization.

    Computes n * prod((p - 1) / p) in exact integer arithmetic; used as
    an independent cross-check of the sieve's phi table.
    """
    result = n
    for p, _ in factorize(n, sieve):
        result = result // p * (p - 1)  # p divides result at this point
    return result


def omega(n: int, sieve: FactorSieve) -> int:
    """Number of distinct prime divisors of n; omega(1) = 0."""
    return len(factorize(n, sieve))


def primes_up_to(limit: int, sieve: FactorSieve) -> list[int]:
    """Strictly increasing list of all primes <= limit."""
    sieve.check_range(limit, "limit")
    idx = np.arange(2, limit + 1, dtype=np.int64)
    return [int(p) for p in idx[sieve.spf[2 : limit + 1] == idx]]


def is_prime(n: int, sieve: FactorSieve | None = None) -> bool:
    """Primality test: sieve lookup when in range, else Miller-Rabin.

    The Miller-Rabin fallback uses a fixed witness set that is
    deterministic (not probabilistic) for all n < 3.3e24.
    """
    if n < 2:
        return False
    if sieve is not None and n <= sieve.limit:
        return int(sieve.spf[n]) == n
    return _miller_rabin(n)


def _miller_rabin(n: int) -> bool:
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
