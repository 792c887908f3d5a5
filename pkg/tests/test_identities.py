import math
import random
from fractions import Fraction

import pytest

from totsum import (
    FactorSieve,
    PsiCache,
    VerifyReport,
    cumulative_delta_closed,
    delta_direct,
    factorize,
    gcd_identity_sides,
    ogf_lhs,
    ogf_rhs,
    omega_identity_sides,
    phi,
    verify_suite,
)


def test_omega_identity_pinned(sieve):
    assert omega_identity_sides(1, sieve) == (0, 0)
    assert omega_identity_sides(2, sieve) == (1, 1)
    assert omega_identity_sides(10, sieve) == (37, 37)


def test_omega_identity_sweep(sieve):
    for n in range(1, 401):
        lhs, rhs = omega_identity_sides(n, sieve)
        assert lhs == rhs


def test_omega_rhs_against_factor_counts(sieve):
    # third route: omega from explicit factorization instead of strikes
    for n in (1, 2, 50, 200):
        _, rhs = omega_identity_sides(n, sieve)
        by_factorize = sum(phi(k, sieve) * len(factorize(k, sieve)) for k in range(1, n + 1))
        assert rhs == by_factorize


def test_gcd_identity_pinned(sieve):
    assert gcd_identity_sides(10, 2, sieve) == (45, 45)
    assert gcd_identity_sides(10, 3, sieve) == (52, 52)
    assert gcd_identity_sides(10, 11, sieve) == (32, 32)


def test_gcd_identity_sweep(sieve):
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(1, 301):
            lhs, rhs = gcd_identity_sides(n, p, sieve)
            assert lhs == rhs


def test_gcd_lhs_against_true_gcd(sieve):
    # the implementation uses divisibility weights; math.gcd is the oracle
    for p in (2, 5, 13):
        for n in range(1, 200):
            lhs, _ = gcd_identity_sides(n, p, sieve)
            brute = sum(math.gcd(k, p) * phi(k, sieve) for k in range(1, n + 1))
            assert lhs == brute


def test_ogf_pinned_values(sieve):
    half = Fraction(1, 2)
    assert ogf_lhs(5, 2, half, sieve) == Fraction(21, 32)
    assert ogf_rhs(5, 2, half, sieve) == Fraction(21, 32)
    assert ogf_lhs(3, 5, Fraction(7, 3), sieve) == 0
    assert ogf_lhs(2, 2, Fraction(1), sieve) == 1
    assert ogf_rhs(5, 2, 1, sieve) == 8
    assert ogf_rhs(3, 5, Fraction(9), sieve) == 0


def test_ogf_sides_agree(sieve):
    xs = (Fraction(1, 2), Fraction(-1, 3), Fraction(2), Fraction(1), Fraction(0))
    for p in (2, 3, 5):
        for N in range(1, 61):
            for x in xs:
                assert ogf_lhs(N, p, x, sieve) == ogf_rhs(N, p, x, sieve)


def test_ogf_lhs_against_plain_polynomial(sieve):
    x = Fraction(-2, 7)
    for p in (2, 3):
        for N in range(1, 31):
            brute = sum(delta_direct(n, p, sieve) * x**n for n in range(1, N + 1))
            assert ogf_lhs(N, p, x, sieve) == brute


def test_ogf_one_is_detected_exactly(sieve):
    assert ogf_rhs(5, 2, Fraction(2, 2), sieve) == 8
    assert ogf_rhs(5, 2, Fraction(3, 3), sieve) == ogf_lhs(5, 2, 1, sieve)


def test_ogf_rejects_floats(sieve):
    with pytest.raises(TypeError):
        ogf_lhs(5, 2, 0.5, sieve)
    with pytest.raises(TypeError):
        ogf_rhs(5, 2, 1.0, sieve)


def test_cumulative_closed_form(sieve):
    assert cumulative_delta_closed(5, 2, sieve) == 8
    assert cumulative_delta_closed(4, 5, sieve) == 0
    assert cumulative_delta_closed(10, 3, sieve) == 38
    for p in (2, 3, 5, 7):
        running = 0
        for n in range(1, 301):
            running += delta_direct(n, p, sieve)
            assert cumulative_delta_closed(n, p, sieve) == running


def test_big_rational_exactness_smoke():
    rng = random.Random(31337)
    for _ in range(200):
        a, c = rng.randrange(-10**12, 10**12), rng.randrange(-10**12, 10**12)
        b, d = rng.randrange(1, 10**12), rng.randrange(1, 10**12)
        x, y = Fraction(a, b), Fraction(c, d)
        assert (x + y) - y == x
        assert (x * y) / y == x if y != 0 else True


def test_verify_report_validates_consistency():
    with pytest.raises(ValueError):
        VerifyReport("omega", {}, checked=10, failures=1, first_counterexample=None)
    with pytest.raises(ValueError):
        VerifyReport("omega", {}, checked=10, failures=0,
                     first_counterexample=({"n": 3}, 1, 2))
    with pytest.raises(ValueError):
        VerifyReport("omega", {}, checked=0, failures=0)
    ok = VerifyReport("omega", {"n_max": 10}, checked=10, failures=0)
    assert ok.first_counterexample is None


def test_verify_suite_counts_match_ranges(sieve, cache):
    rep = verify_suite("omega", sieve, {"n_max": 100}, cache)
    assert (rep.checked, rep.failures) == (100, 0)
    rep = verify_suite("gcd", sieve, {"n_max": 50, "primes": (2, 3, 5)}, cache)
    assert (rep.checked, rep.failures) == (150, 0)
    rep = verify_suite(
        "ogf", sieve,
        {"n_max": 20, "primes": (2,), "x_values": (Fraction(1, 2), Fraction(1))},
        cache,
    )
    assert (rep.checked, rep.failures) == (40, 0)


def test_verify_suite_all_pass_at_modest_ranges(sieve, cache):
    shrunk = {
        "omega": {"n_max": 300},
        "gcd": {"n_max": 300, "p_max": 13},
        "ogf": {"n_max": 40},
        "cumulative": {"n_max": 300},
        "congruence": {"n_max": 2000},
        "decomposition": {"n_max": 2000},
        "lemma24": {"n_max": 2000},
        "telescoping": {"n_max": 300},
    }
    for suite, params in shrunk.items():
        rep = verify_suite(suite, sieve, params, cache)
        assert rep.failures == 0, suite
        assert rep.checked >= 1
        assert rep.identity == suite
        assert rep.params["n_max"] == params["n_max"]


def test_verify_suite_p_max_override_resolves_primes(sieve, cache):
    rep = verify_suite("cumulative", sieve, {"n_max": 50, "p_max": 7}, cache)
    assert rep.params["primes"] == (2, 3, 5, 7)
    assert rep.checked == 200


def test_verify_suite_rejects_bad_requests(sieve, cache):
    with pytest.raises(ValueError):
        verify_suite("nonesuch", sieve)
    with pytest.raises(ValueError):
        verify_suite("gcd", sieve, {"n_max": 0})
    with pytest.raises(ValueError):
        verify_suite("gcd", sieve, {"n_max": 10, "primes": (4,)})
    with pytest.raises(ValueError):
        verify_suite("omega", sieve, {"bogus_key": 3})
    with pytest.raises(ValueError):
        verify_suite("omega", sieve, {"n_max": sieve.limit + 1})


def test_verify_suite_detects_planted_fault(sieve):
    # a poisoned summatory prefix must surface as lemma24 mismatches,
    # with the earliest affected n reported first
    cache = PsiCache(sieve)
    poisoned = cache.prefix.copy()
    poisoned[7] += 1
    cache.prefix = poisoned
    rep = verify_suite("lemma24", sieve, {"n_max": 60, "p_max": 3}, cache)
    assert rep.failures > 0
    point, lhs, rhs = rep.first_counterexample
    assert lhs != rhs
    assert rep.checked == 120
    # psi(7) first enters delta_via_psi(n, 2) at n = 14
    assert point == {"n": 14, "p": 2}


def test_verify_suite_detects_poisoned_table(sieve):
    bad_phi = sieve.phi.copy()
    bad_phi[6] += 1  # breaks the congruence for p = 3 from n = 6 on
    bad = FactorSieve(limit=sieve.limit, spf=sieve.spf, phi=bad_phi)
    rep = verify_suite("congruence", bad, {"n_max": 100, "p_max": 5})
    assert rep.failures > 0
    point, lhs, rhs = rep.first_counterexample
    assert point == {"n": 6, "p": 3}
    assert (lhs, rhs) == (1, 0)


def test_delta_table_matches_direct(sieve):
    from totsum.identities import _delta_table

    for p in (2, 3, 11):
        table = _delta_table(p, 500, sieve)
        for n in (0, 1, 2, 10, 137, 500):
            assert int(table[n]) == delta_direct(n, p, sieve)
