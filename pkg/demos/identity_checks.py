#!/usr/bin/env python3
"""Exhaustively checking the exact identities, suite by suite.

Every suite computes both sides of one identity through independent
routes and compares them with integer or rational equality, so a pass
is an exact statement about every point in the range, not a tolerance
judgement.
"""

import time
from fractions import Fraction

from totsum import PsiCache, SUITES, build_sieve, ogf_lhs, ogf_rhs, verify_suite

sieve = build_sieve(10_000)
cache = PsiCache(sieve)

DESCRIPTIONS = {
    "omega": "sum of delta over primes vs phi-weighted prime-divisor counts",
    "gcd": "gcd-weighted phi sum vs Psi + (p-1) delta",
    "ogf": "delta-coefficient polynomial vs its geometric closed form",
    "cumulative": "running sum of delta vs linear-time closed form",
    "congruence": "delta(n, p) mod (p-1) vs 0",
    "decomposition": "recursive delta + coprime-sum upsilon vs Psi",
    "lemma24": "recursive delta route vs direct table route",
    "telescoping": "accumulated forward differences vs direct delta",
}

print(f"{'suite':14} {'checked':>9} {'failures':>9} {'time':>8}  comparison")
for suite in SUITES:
    t0 = time.perf_counter()
    report = verify_suite(suite, sieve, cache=cache)
    dt = time.perf_counter() - t0
    print(f"{suite:14} {report.checked:>9} {report.failures:>9} {dt:>7.2f}s"
          f"  {DESCRIPTIONS[suite]}")
    if report.first_counterexample is not None:
        point, lhs, rhs = report.first_counterexample
        print(f"  !! first counterexample {point}: {lhs} != {rhs}")

print()
print("one generating-function evaluation in the open, N=5, p=2, x=1/2:")
x = Fraction(1, 2)
print("  coefficients delta(1..5, 2) = 0, 1, 1, 3, 3")
print("  polynomial side :", ogf_lhs(5, 2, x, sieve))
print("  closed-form side:", ogf_rhs(5, 2, x, sieve))
print("  and at x = 1 the closed form degenerates to a weighted count:")
print("  both sides ->", ogf_rhs(5, 2, Fraction(1), sieve))
