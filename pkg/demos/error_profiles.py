#!/usr/bin/env python3
"""How close does delta(x, p) run to its main term 3x^2/(pi^2 (p+1))?

The raw error grows, but dividing it by x ln x flattens it into a
band, which is exactly what an O(x log x) error term looks like from
ground level.  The same game is played for the cumulative sum (scale
n^2 ln n) and the running average (scale n ln n).

The prime 101 is included as a stress case: the main-term constant
shrinks like 1/(p+1), and the profile shows the normalized error
staying tame there too, though nothing here asserts uniformity in p.
"""

from totsum import (
    PsiCache,
    average_profile,
    build_sieve,
    cumulative_profile,
    delta_error_profile,
    main_term_constant,
)

cache = PsiCache.for_target(10**7)
grid = [10**3, 10**4, 10**5, 10**6, 10**7]

print("delta(x, p) vs 3x^2/(pi^2(p+1)); err_n = (exact - main)/(x ln x)")
print(f"{'p':>4} " + "".join(f"{f'err_n@1e{k}':>12}" for k in range(3, 8)) + f"{'ratio@1e7':>12}")
for p in (2, 3, 5, 7, 101):
    records = delta_error_profile(p, grid, cache)
    cells = "".join(f"{r.normalized_error:>12.5f}" for r in records)
    ratio = float(records[-1].exact) / records[-1].main
    print(f"{p:>4} {cells}{ratio:>12.6f}")
print()
print("the columns stop growing: that flatness is the whole point.")
print()

# cumulative and average variants, on a table-backed range
sieve = build_sieve(10**5)
ns = [10**3, 10**4, 10**5]
for p in (2, 3):
    cum = cumulative_profile(p, ns, sieve)
    avg = average_profile(p, ns, sieve)
    print(f"p={p}: cumulative ratios",
          [round(float(r.exact) / r.main, 6) for r in cum],
          " average ratios",
          [round(float(r.exact) / r.main, 6) for r in avg])
print()

print("main-term constants 3/(pi^2(p+1)):")
for p in (2, 3, 5, 7, 101):
    print(f"  p={p:<3d} {main_term_constant(p):.12f}")
