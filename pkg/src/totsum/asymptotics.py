"""Empirical error profiles for the growth laws of delta and its sums.

The profiled statements:

* delta(x, p)            = 3 x^2 / (pi^2 (p + 1)) + error of order x ln x
* sum_{k<=n} delta(k, p) = n^3 / (pi^2 (p + 1)) + error of order n^2 ln n
* (1/n) sum_{k<=n} delta = n^2 / (pi^2 (p + 1)) + error of order n ln n

Each profile pairs the exact value with the main term and reports the
raw error and the error normalized by its predicted order.  Exact and
floating sides only meet at report time; below ~10^15 the int-to-float
conversion is lossless, beyond it round-to-nearest adds at most one
part in 2^53 (negligible next to the error terms under study).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import log
from typing import Sequence

from .identities import cumulative_delta_closed
from .restricted import _require_prime, delta_via_psi
from .sieve import FactorSieve
from .summatory import PI_SQUARED, PsiCache

QUANTITIES = ("delta", "cumulative", "average")


@dataclass(frozen=True)
class ErrorRecord:
    """One profiled point: exact value vs main term.

    exact is an integer for delta and cumulative, a rational for
    average.  normalized_error divides the raw error by the predicted
    error order (x ln x, n^2 ln n, or n ln n respectively), with the
    denominator clamped to 1 at x = 1 where ln vanishes.
    """

    x: int
    p: int
    quantity: str
    exact: int | Fraction
    main: float
    raw_error: float
    normalized_error: float


def main_term_constant(p: int) -> float:
    """Growth constant 3 / (pi^2 (p + 1)) in the delta main term."""
    _require_prime(p)
    return 3.0 / (PI_SQUARED * (p + 1))


def main_term_constant_via_series(p: int) -> float:
    """The same constant assembled the long way round.

    Sums the geometric series sum_{j>=1} p^(-2j) term by term until it
    stops moving, then multiplies by 3/pi^2 * (p - 1).  Since
    (p - 1) / (p^2 - 1) = 1 / (p + 1), this must agree with
    main_term_constant to near machine precision; keeping both routes
    guards the algebra in each.
    """
    _require_prime(p)
    inv = 1.0 / (p * p)
    term = inv
    total = 0.0
    while True:
        nxt = total + term
        if nxt == total:
            break
        total = nxt
        term *= inv
    return 3.0 / PI_SQUARED * (p - 1) * total


def _check_grid(xs: Sequence[int]) -> None:
    if len(xs) == 0:
        raise ValueError("empty evaluation grid")
    for a, b in zip(xs, xs[1:]):
        if b <= a:
            raise ValueError(f"grid must be strictly ascending, got {a} before {b}")
    if xs[0] < 1:
        raise ValueError(f"grid points must be positive, got {xs[0]}")


def delta_error_profile(
    p: int, xs: Sequence[int], cache: PsiCache
) -> list[ErrorRecord]:
    """Profile delta(x, p) against 3 x^2 / (pi^2 (p + 1)) over a grid.

    xs must be nonempty and strictly ascending.  The exact side runs
    through the summatory-function route, so grid points may exceed the
    cache's sieve limit.
    """
    _require_prime(p, cache.sieve)
    _check_grid(xs)
    out = []
    for x in xs:
        exact = delta_via_psi(x, p, cache)
        main = 3.0 * x * x / (PI_SQUARED * (p + 1))
        raw = float(exact) - main
        out.append(
            ErrorRecord(
                x=x,
                p=p,
                quantity="delta",
                exact=exact,
                main=main,
                raw_error=raw,
                normalized_error=raw / max(x * log(x), 1.0),
            )
        )
    return out


def cumulative_profile(
    p: int, ns: Sequence[int], sieve: FactorSieve
) -> list[ErrorRecord]:
    """Profile sum_{k<=n} delta(k, p) against n^3 / (pi^2 (p + 1)).

    The exact side uses the linear-time closed form, so the grid may go
    up to the sieve limit without quadratic cost.
    """
    _require_prime(p, sieve)
    _check_grid(ns)
    sieve.check_range(ns[-1], "n")
    out = []
    for n in ns:
        exact = cumulative_delta_closed(n, p, sieve)
        main = float(n) ** 3 / (PI_SQUARED * (p + 1))
        raw = float(exact) - main
        out.append(
            ErrorRecord(
                x=n,
                p=p,
                quantity="cumulative",
                exact=exact,
                main=main,
                raw_error=raw,
                normalized_error=raw / max(n * n * log(n), 1.0),
            )
        )
    return out


def average_profile(
    p: int, ns: Sequence[int], sieve: FactorSieve
) -> list[ErrorRecord]:
    """Profile (1/n) sum_{k<=n} delta(k, p) against n^2 / (pi^2 (p + 1)).

    The exact side is carried as a rational (the average is in general
    not an integer) and rounded only when the record is materialized.
    """
    _require_prime(p, sieve)
    _check_grid(ns)
    sieve.check_range(ns[-1], "n")
    out = []
    for n in ns:
        exact = Fraction(cumulative_delta_closed(n, p, sieve), n)
        main = float(n) * n / (PI_SQUARED * (p + 1))
        raw = float(exact) - main
        out.append(
            ErrorRecord(
                x=n,
                p=p,
                quantity="average",
                exact=exact,
                main=main,
                raw_error=raw,
                normalized_error=raw / max(n * log(n), 1.0),
            )
        )
    return out
