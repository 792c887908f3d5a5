#!/usr/bin/env python3
"""Splitting Psi by a prime: the delta / upsilon decomposition.

Fix a prime p.  Every n <= x either is divisible by p (its phi lands
in delta) or is coprime to p (its phi lands in upsilon), so
delta + upsilon = Psi exactly.  The worked example at x = 10, p = 2 is
a useful calibration point: a split of 16/16 is sometimes quoted for
it, but the defining sums simply do not produce that; term-by-term
they give 13/19, and three independent routes below concur.
"""

from totsum import (
    PsiCache,
    build_sieve,
    delta_direct,
    delta_residue,
    delta_via_psi,
    phi,
    psi_naive,
    upsilon,
)

sieve = build_sieve(10_000)
cache = PsiCache(sieve)

print("x = 10, p = 2, term by term:")
evens = [n for n in range(1, 11) if n % 2 == 0]
odds = [n for n in range(1, 11) if n % 2 == 1]
print("  even n:", {n: phi(n, sieve) for n in evens}, "-> delta =",
      sum(phi(n, sieve) for n in evens))
print("  odd  n:", {n: phi(n, sieve) for n in odds}, "-> upsilon =",
      sum(phi(n, sieve) for n in odds))
print()

print("three routes to the same split:")
print("  delta_direct(10, 2)   =", delta_direct(10, 2, sieve))
print("  delta_via_psi(10, 2)  =", delta_via_psi(10, 2, cache),
      " (= (2-1) * (Psi(5) + Psi(2) + Psi(1)) = 10 + 2 + 1)")
print("  upsilon(10, 2)        =", upsilon(10, 2, cache))
print("  sum                   =", delta_direct(10, 2, sieve) + upsilon(10, 2, cache),
      " (= Psi(10) =", str(psi_naive(10, sieve)) + ")")
print()
print("so the 16/16 split is arithmetically impossible: the even phi")
print("values 1+2+2+4+4 already sum to 13, and 13 + 19 = 32 checks out.")
print()

# the divisibility-driven recurrence works at any scale the summatory
# function can reach, far beyond the table
big = 10**8
print(f"delta({big}, 7) =", delta_via_psi(big, 7, cache))
print(f"Psi({big})      =", cache.psi(big))
print()

# a small curiosity with a big footprint: delta(n, p) is always a
# multiple of p - 1, because each summand phi(p*m) is
for p in (3, 11, 97):
    residues = {delta_residue(n, p, cache) for n in range(1, 2000)}
    print(f"p={p:3d}: residues of delta(n, p) mod {p - 1} over n < 2000: {residues}")
