"""Exact verification of identities relating delta, upsilon and Psi.

Three identity families, each checked by computing both sides through
routes that share no intermediate results:

* omega-weighted:  sum over primes p <= n of delta(n, p)
                   = sum over k <= n of phi(k) * omega(k)
* gcd-weighted:    sum over k <= n of gcd(k, p) * phi(k)
                   = Psi(n) + (p - 1) * delta(n, p)
* generating function: sum over n <= N of delta(n, p) x^n
                   = sum over m <= N/p of phi(pm) (x^pm - x^(N+1)) / (1 - x)
  with the x = 1 case degenerating to sum of phi(pm) (N - pm + 1).

All arithmetic is exact.  Polynomial variables are rationals, never
floats, so the x = 1 branch can be selected by exact equality and side
comparisons are decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .restricted import _require_prime, delta_direct, delta_step, delta_via_psi
from .sieve import FactorSieve, factorize, primes_up_to
from .summatory import PsiCache, exact_array_sum, psi_naive

#: Exact rational with arbitrary-precision numerator and denominator,
#: always in lowest terms.  The stdlib type already guarantees every
#: invariant needed here (canonical form, exact field arithmetic), so
#: it is adopted outright rather than wrapped.
BigRational = Fraction

SUITES = (
    "omega",
    "gcd",
    "ogf",
    "cumulative",
    "congruence",
    "decomposition",
    "lemma24",
    "telescoping",
)


def _exact_rational(x: Any) -> Fraction:
    """Coerce x to an exact rational; floats are refused outright.

    A float argument would make the x = 1 test a tolerance question;
    callers wanting 1/3 must say Fraction(1, 3), not 0.333... .
    """
    if isinstance(x, float):
        raise TypeError(
            f"x={x!r} is a float; pass an int or Fraction so equality with 1 is exact"
        )
    return Fraction(x)


def _delta_table(p: int, n_max: int, sieve: FactorSieve) -> np.ndarray:
    """delta(n, p) for every n in 0..n_max, as one int64 array.

    Direct evaluation of the defining sum: place phi(m) at each
    multiple m of p, then prefix-sum.
    """
    sieve.check_range(n_max, "n_max")
    contrib = np.zeros(n_max + 1, dtype=np.int64)
    if p <= n_max:
        contrib[p::p] = sieve.phi[p : n_max + 1 : p]
    return np.cumsum(contrib)


def omega_identity_sides(n: int, sieve: FactorSieve) -> tuple[int, int]:
    """Both sides of: sum_p delta(n, p) = sum_{k<=n} phi(k) omega(k).

    The prime range on the left is all p <= n; larger primes divide
    nothing below them and contribute empty sums.  Left side sums
    delta_direct per prime; right side weights phi by a
    distinct-prime-divisor count built from independent sieve strikes.
    """
    sieve.check_range(n)
    primes = primes_up_to(n, sieve) if n >= 2 else []
    lhs = sum(delta_direct(n, p, sieve) for p in primes)
    om = np.zeros(n + 1, dtype=np.int64)
    for p in primes:
        om[p::p] += 1
    rhs = exact_array_sum(sieve.phi[: n + 1] * om)
    return lhs, rhs


def gcd_identity_sides(n: int, p: int, sieve: FactorSieve) -> tuple[int, int]:
    """Both sides of: sum_{k<=n} gcd(k, p) phi(k) = Psi(n) + (p-1) delta(n, p).

    For prime p the weight gcd(k, p) is p on multiples of p and 1
    elsewhere, so the left side uses a divisibility-driven weight
    vector rather than a generic gcd.
    """
    _require_prime(p, sieve)
    sieve.check_range(n)
    w = np.ones(n + 1, dtype=np.int64)
    if p <= n:
        w[p::p] = p
    lhs = exact_array_sum(sieve.phi[1 : n + 1] * w[1 : n + 1])
    rhs = psi_naive(n, sieve) + (p - 1) * delta_direct(n, p, sieve)
    return lhs, rhs


def ogf_lhs(N: int, p: int, x: Any, sieve: FactorSieve) -> Fraction:
    """Polynomial side sum_{n=1..N} delta(n, p) x^n, by Horner over rationals."""
    _require_prime(p, sieve)
    xr = _exact_rational(x)
    deltas = _delta_table(p, N, sieve)
    acc = Fraction(0)
    for n in range(N, 0, -1):
        acc = acc * xr + int(deltas[n])
    return acc * xr


def ogf_rhs(N: int, p: int, x: Any, sieve: FactorSieve) -> Fraction:
    """Closed-form side sum_{m=1..N/p} phi(pm) (x^pm - x^(N+1)) / (1 - x).

    At x = 1 (detected by exact rational equality) the quotient
    degenerates to the tail-length count N - pm + 1 and the result is
    an integer.
    """
    _require_prime(p, sieve)
    sieve.check_range(N, "N")
    xr = _exact_rational(x)
    if xr == 1:
        return Fraction(cumulative_delta_closed(N, p, sieve))
    phis = sieve.phi[p : N + 1 : p]  # phi(pm) for m = 1..N//p
    x_top = xr ** (N + 1)
    xp = xr**p
    xm = Fraction(1)
    total = Fraction(0)
    for i in range(phis.size):
        xm = xm * xp  # x^(p*m) maintained incrementally
        total += int(phis[i]) * (xm - x_top)
    return total / (1 - xr)


def cumulative_delta_closed(N: int, p: int, sieve: FactorSieve) -> int:
    """sum_{m=1..N/p} phi(pm) (N - pm + 1), the exact value of
    sum_{n=1..N} delta(n, p), in linear rather than quadratic time."""
    _require_prime(p, sieve)
    sieve.check_range(N, "N")
    if p > N:
        return 0
    phis = sieve.phi[p : N + 1 : p]
    m = np.arange(1, phis.size + 1, dtype=np.int64)
    return exact_array_sum(phis * (N + 1 - p * m))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of sweeping one identity over a parameter range.

    params records the range actually swept (after defaults),
    first_counterexample is (point, lhs, rhs) for the smallest failing
    point in (n, p, x) order, or None when every check passed.
    """

    identity: str
    params: dict[str, Any]
    checked: int
    failures: int
    first_counterexample: tuple[dict[str, Any], Any, Any] | None = None

    def __post_init__(self) -> None:
        if (self.failures == 0) != (self.first_counterexample is None):
            raise ValueError("failures and first_counterexample disagree")
        if self.checked < 1:
            raise ValueError("a completed run checks at least one point")


_SUITE_DEFAULTS: dict[str, dict[str, Any]] = {
    "omega": {"n_max": 5000},
    "gcd": {"n_max": 10_000, "p_max": 30},
    "ogf": {
        "n_max": 300,
        "primes": (2, 3, 5),
        "x_values": (Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(1)),
    },
    "cumulative": {"n_max": 1000, "primes": (2, 3, 5, 7)},
    "congruence": {"n_max": 10_000, "p_max": 100},
    "decomposition": {"n_max": 10_000, "p_max": 50},
    "lemma24": {"n_max": 10_000, "p_max": 50},
    "telescoping": {"n_max": 1000, "primes": (2, 3, 5, 7)},
}

_ALLOWED_KEYS = {"n_max", "p_max", "primes", "x_values"}

# (sort key, point description, lhs, rhs)
_Mismatch = tuple[tuple, dict[str, Any], Any, Any]


def verify_suite(
    suite: str,
    sieve: FactorSieve,
    params: dict[str, Any] | None = None,
    cache: PsiCache | None = None,
) -> VerifyReport:
    """Sweep one identity over a parameter grid and report exact comparisons.

    Recognized params: n_max (upper bound for n, or the polynomial
    degree N for the ogf suite), and where a prime enters, either an
    explicit primes sequence or p_max (all primes up to it).  The ogf
    suite also takes x_values, a sequence of exact rationals.  Missing
    entries fall back to per-suite defaults covering each identity's
    documented range.  Counterexamples are reported for the smallest
    failing point in ascending (n, p, x) order regardless of internal
    evaluation order.
    """
    if suite not in _SUITE_DEFAULTS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    user = {k: v for k, v in (params or {}).items() if v is not None}
    unknown = set(user) - _ALLOWED_KEYS
    if unknown:
        raise ValueError(f"unknown suite parameter(s): {', '.join(sorted(unknown))}")
    merged = {**_SUITE_DEFAULTS[suite], **user}
    n_max = int(merged["n_max"])
    if n_max < 1:
        raise ValueError(f"n_max={n_max} must be positive")
    sieve.check_range(n_max, "n_max")

    resolved: dict[str, Any] = {"n_max": n_max}
    primes: Sequence[int] | None = None
    if suite != "omega":
        if "primes" in user:
            primes = tuple(int(p) for p in user["primes"])
        elif "p_max" in user:
            primes = tuple(primes_up_to(int(user["p_max"]), sieve))
        elif "primes" in _SUITE_DEFAULTS[suite]:
            primes = _SUITE_DEFAULTS[suite]["primes"]
        else:
            primes = tuple(primes_up_to(_SUITE_DEFAULTS[suite]["p_max"], sieve))
        for p in primes:
            _require_prime(p, sieve)
        if not primes:
            raise ValueError("empty prime set")
        resolved["primes"] = tuple(primes)

    if suite in ("decomposition", "lemma24") and cache is None:
        cache = PsiCache(sieve)

    if suite == "omega":
        checked, mism = _sweep_omega(sieve, n_max)
    elif suite == "gcd":
        checked, mism = _sweep_gcd(sieve, n_max, primes)
    elif suite == "ogf":
        x_values = tuple(_exact_rational(x) for x in merged["x_values"])
        resolved["x_values"] = x_values
        checked, mism = _sweep_ogf(sieve, n_max, primes, x_values)
    elif suite == "cumulative":
        checked, mism = _sweep_cumulative(sieve, n_max, primes)
    elif suite == "congruence":
        checked, mism = _sweep_congruence(sieve, n_max, primes)
    elif suite == "decomposition":
        checked, mism = _sweep_decomposition(sieve, cache, n_max, primes)
    elif suite == "lemma24":
        checked, mism = _sweep_lemma24(sieve, cache, n_max, primes)
    else:
        checked, mism = _sweep_telescoping(sieve, n_max, primes)

    first = None
    if mism:
        key, point, lhs, rhs = min(mism, key=lambda t: t[0])
        first = (point, lhs, rhs)
    return VerifyReport(
        identity=suite,
        params=resolved,
        checked=checked,
        failures=len(mism),
        first_counterexample=first,
    )


def _sweep_omega(sieve: FactorSieve, n_max: int) -> tuple[int, list[_Mismatch]]:
    # Left side: one running accumulator per prime, each evaluating its
    # delta(n, p) definition incrementally as n advances (membership of
    # phi(n) decided by factorization).  Right side: cumulative
    # phi * omega with omega from strike counting.  The two sides share
    # only the phi table.
    phi_col = sieve.phi
    primes = primes_up_to(n_max, sieve) if n_max >= 2 else []
    index = {p: i for i, p in enumerate(primes)}
    acc = np.zeros(max(len(primes), 1), dtype=np.int64)
    om = np.zeros(n_max + 1, dtype=np.int64)
    for p in primes:
        om[p::p] += 1
    rhs_cum = np.cumsum(phi_col[: n_max + 1] * om)
    mism: list[_Mismatch] = []
    for n in range(1, n_max + 1):
        if n >= 2:
            fn = int(phi_col[n])
            for p, _ in factorize(n, sieve):
                acc[index[p]] += fn
        lhs = int(acc.sum())
        rhs = int(rhs_cum[n])
        if lhs != rhs:
            mism.append(((n,), {"n": n}, lhs, rhs))
    return n_max, mism


def _sweep_gcd(
    sieve: FactorSieve, n_max: int, primes: Sequence[int]
) -> tuple[int, list[_Mismatch]]:
    mism: list[_Mismatch] = []
    checked = 0
    for n in range(1, n_max + 1):
        for j, p in enumerate(primes):
            lhs, rhs = gcd_identity_sides(n, p, sieve)
            checked += 1
            if lhs != rhs:
                mism.append(((n, j), {"n": n, "p": p}, lhs, rhs))
    return checked, mism


def _sweep_ogf(
    sieve: FactorSieve,
    n_max: int,
    primes: Sequence[int],
    x_values: Sequence[Fraction],
) -> tuple[int, list[_Mismatch]]:
    mism: list[_Mismatch] = []
    checked = 0
    for N in range(1, n_max + 1):
        for j, p in enumerate(primes):
            for k, x in enumerate(x_values):
                lhs = ogf_lhs(N, p, x, sieve)
                rhs = ogf_rhs(N, p, x, sieve)
                checked += 1
                if lhs != rhs:
                    mism.append(((N, j, k), {"N": N, "p": p, "x": x}, lhs, rhs))
    return checked, mism


def _sweep_cumulative(
    sieve: FactorSieve, n_max: int, primes: Sequence[int]
) -> tuple[int, list[_Mismatch]]:
    mism: list[_Mismatch] = []
    for j, p in enumerate(primes):
        running = np.cumsum(_delta_table(p, n_max, sieve))
        for n in range(1, n_max + 1):
            lhs = int(running[n])
            rhs = cumulative_delta_closed(n, p, sieve)
            if lhs != rhs:
                mism.append(((n, j), {"n": n, "p": p}, lhs, rhs))
    return n_max * len(primes), mism


def _sweep_congruence(
    sieve: FactorSieve, n_max: int, primes: Sequence[int]
) -> tuple[int, list[_Mismatch]]:
    mism: list[_Mismatch] = []
    for j, p in enumerate(primes):
        residues = _delta_table(p, n_max, sieve) % (p - 1) if p > 2 else None
        if residues is None:
            continue  # modulus 1: residue 0 by definition
        for n in np.nonzero(residues[1:])[0] + 1:
            mism.append(((int(n), j), {"n": int(n), "p": p}, int(residues[n]), 0))
    return n_max * len(primes), mism


def _sweep_decomposition(
    sieve: FactorSieve, cache: PsiCache, n_max: int, primes: Sequence[int]
) -> tuple[int, list[_Mismatch]]:
    # delta from the summatory-function route, upsilon from the
    # defining coprime sum; their total must rebuild the plain prefix.
    prefix = cache.prefix
    mism: list[_Mismatch] = []
    for j, p in enumerate(primes):
        coprime = sieve.phi[: n_max + 1].copy()
        coprime[p::p] = 0
        ups = np.cumsum(coprime)
        for n in range(1, n_max + 1):
            lhs = delta_via_psi(n, p, cache) + int(ups[n])
            rhs = int(prefix[n])
            if lhs != rhs:
                mism.append(((n, j), {"n": n, "p": p}, lhs, rhs))
    return n_max * len(primes), mism


def _sweep_lemma24(
    sieve: FactorSieve, cache: PsiCache, n_max: int, primes: Sequence[int]
) -> tuple[int, list[_Mismatch]]:
    mism: list[_Mismatch] = []
    for j, p in enumerate(primes):
        direct = _delta_table(p, n_max, sieve)
        for n in range(1, n_max + 1):
            via = delta_via_psi(n, p, cache)
            if via != int(direct[n]):
                mism.append(((n, j), {"n": n, "p": p}, via, int(direct[n])))
    return n_max * len(primes), mism


def _sweep_telescoping(
    sieve: FactorSieve, n_max: int, primes: Sequence[int]
) -> tuple[int, list[_Mismatch]]:
    mism: list[_Mismatch] = []
    for j, p in enumerate(primes):
        running = 0
        for n in range(1, n_max + 1):
            running += delta_step(n - 1, p, sieve)
            direct = delta_direct(n, p, sieve)
            if running != direct:
                mism.append(((n, j), {"n": n, "p": p}, running, direct))
    return n_max * len(primes), mism
