#!/usr/bin/env python3
"""How fast does the totient summatory function grow?

Psi(x) counts, in aggregate, how many coprime pairs sit under x; it
hugs the parabola 3x^2/pi^2 remarkably tightly.  This script computes
Psi two ways (direct table summation and the sublinear divisor-block
recursion), confirms they agree, and tabulates the approach of
Psi(x) / (3x^2/pi^2) to 1.
"""

import time

from totsum import PsiCache, build_sieve, psi_main_term, psi_naive

# start small: the first few values, straight off a table
sieve = build_sieve(100)
print("n   :", *[f"{n:4d}" for n in range(1, 11)])
print("phi :", *[f"{v:4d}" for v in sieve.phi[1:11]])
print("Psi :", *[f"{psi_naive(n, sieve):4d}" for n in range(1, 11)])
print()
print("Psi(10) =", psi_naive(10, sieve), "(= 1+1+2+2+4+2+6+4+6+4)")
print()

# the two evaluation routes must agree wherever both can run
cache = PsiCache.for_target(10**8)
for x in (10, 1000, 100_000):
    table = psi_naive(x, build_sieve(x))
    recursive = cache.psi(x)
    marker = "ok" if table == recursive else "MISMATCH"
    print(f"x={x:>8}  table={table}  recursive={recursive}  [{marker}]")
print()

# growth against the parabola: the ratio converges quickly
print(f"{'x':>12} {'Psi(x)':>22} {'Psi/main':>12}")
for k in range(2, 9):
    x = 10**k
    t0 = time.perf_counter()
    value = cache.psi(x)
    dt = time.perf_counter() - t0
    ratio = value / psi_main_term(x)
    print(f"{x:>12} {value:>22} {ratio:>12.8f}   ({dt*1000:6.1f} ms)")

print()
print("The recursion reuses everything it has already computed, so")
print("later rows amortize against earlier ones.")
