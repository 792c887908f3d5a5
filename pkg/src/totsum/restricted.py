"""Totient sums restricted by a prime p.

delta(n, p) sums phi over the multiples of p up to n; upsilon(n, p)
sums phi over the integers up to n coprime to p.  Together they split
the summatory totient: delta + upsilon = Psi(n).

Two independent routes to delta are provided.  delta_direct reads the
sieve table.  delta_via_psi uses the identity

    delta(n, p) = (p - 1) * sum over a >= 1 of Psi(floor(n / p^a))

whose upper limit is realized by iterating p^a in exact integer
arithmetic (never floor(log n / log p): a floating logarithm can
misround at exact powers of p and drop or add a term).
"""

from __future__ import annotations

from dataclasses import dataclass

from .sieve import FactorSieve, is_prime
from .summatory import PsiCache, exact_array_sum, psi_naive


def _require_prime(p: int, sieve: FactorSieve | None = None) -> None:
    if not is_prime(p, sieve):
        raise ValueError(f"p={p} is not prime")


def delta_direct(n: int, p: int, sieve: FactorSieve) -> int:
    """Sum of phi(m) over multiples m = p, 2p, ... up to n.

    delta(0, p) = 0 by convention (empty sum), which gives the
    telescoping identity a clean base case.
    """
    _require_prime(p, sieve)
    if n < 0:
        raise ValueError(f"n={n} must be nonnegative")
    if n < p:
        return 0
    sieve.check_range(n)
    return exact_array_sum(sieve.phi[p : n + 1 : p])


def delta_via_psi(n: int, p: int, cache: PsiCache) -> int:
    """delta(n, p) from summatory values at the points floor(n / p^a)."""
    _require_prime(p, cache.sieve)
    if n < 0:
        raise ValueError(f"n={n} must be nonnegative")
    total = 0
    pa = p
    while pa <= n:
        total += cache.psi(n // pa)
        pa *= p
    return (p - 1) * total


def upsilon(n: int, p: int, cache: PsiCache) -> int:
    """Sum of phi(k) over k <= n with gcd(k, p) = 1.

    Computed as Psi(n) - delta(n, p); equals the direct coprime sum.
    """
    return cache.psi(n) - delta_via_psi(n, p, cache)


def delta_step(n: int, p: int, sieve: FactorSieve) -> int:
    """Forward difference delta(n+1, p) - delta(n, p).

    Equals phi(n+1) when p divides n+1, else 0; accepts n >= 0 so the
    steps telescope from delta(0, p) = 0.
    """
    _require_prime(p, sieve)
    if n < 0:
        raise ValueError(f"n={n} must be nonnegative")
    m = n + 1
    sieve.check_range(m)
    return int(sieve.phi[m]) if m % p == 0 else 0


def delta_residue(n: int, p: int, cache: PsiCache) -> int:
    """delta(n, p) reduced mod p - 1.

    Always 0: each summand phi(pm) is divisible by p - 1.  Exposed so
    sweeps can assert the congruence rather than assume it.  For p = 2
    the modulus is 1 and the residue is trivially 0.
    """
    d = delta_via_psi(n, p, cache)
    return 0 if p == 2 else d % (p - 1)


@dataclass(frozen=True)
class RestrictedSumResult:
    """delta and upsilon at one point, tagged with how delta was computed.

    Invariants: delta + upsilon = Psi(n); delta is a multiple of p - 1;
    delta = 0 whenever p > n.
    """

    n: int
    p: int
    delta: int
    upsilon: int
    method: str  # "direct" or "via_psi"

    @property
    def psi(self) -> int:
        return self.delta + self.upsilon


def restricted_sums(
    n: int, p: int, cache: PsiCache, method: str = "via_psi"
) -> RestrictedSumResult:
    """Evaluate the delta/upsilon split at (n, p) by the chosen route.

    method "direct" requires n within the cache's sieve range and sums
    tables; "via_psi" works for any n up to the desk ceiling.
    """
    if method == "direct":
        d = delta_direct(n, p, cache.sieve)
        total = psi_naive(n, cache.sieve)
    elif method == "via_psi":
        d = delta_via_psi(n, p, cache)
        total = cache.psi(n)
    else:
        raise ValueError(f"unknown method {method!r}; expected 'direct' or 'via_psi'")
    return RestrictedSumResult(n=n, p=p, delta=d, upsilon=total - d, method=method)
