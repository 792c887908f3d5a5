import math
import random
from fractions import Fraction

import pytest

from totsum import (
    PI_SQUARED,
    average_profile,
    cumulative_delta_closed,
    cumulative_profile,
    delta_direct,
    delta_error_profile,
    main_term_constant,
    main_term_constant_via_series,
)


def test_delta_profile_pinned_point(cache):
    (rec,) = delta_error_profile(2, [10], cache)
    assert rec.exact == 13
    assert rec.quantity == "delta"
    assert rec.main == pytest.approx(100 / PI_SQUARED, rel=1e-15)
    assert rec.raw_error == pytest.approx(13 - 100 / PI_SQUARED, rel=1e-12)
    assert rec.normalized_error == pytest.approx(rec.raw_error / (10 * math.log(10)), rel=1e-12)


def test_delta_profile_prime_larger_than_x(cache):
    (rec,) = delta_error_profile(101, [50], cache)
    assert rec.exact == 0
    assert rec.main > 0
    assert rec.raw_error == -rec.main


def test_profiles_clamp_log_at_one(cache, sieve):
    (rec,) = delta_error_profile(2, [1], cache)
    assert rec.normalized_error == rec.raw_error  # denominator clamped to 1
    (rec,) = cumulative_profile(3, [1], sieve)
    assert rec.exact == 0
    assert rec.normalized_error == rec.raw_error
    (rec,) = average_profile(3, [1], sieve)
    assert rec.exact == 0


def test_grid_validation(cache):
    with pytest.raises(ValueError):
        delta_error_profile(2, [], cache)
    with pytest.raises(ValueError):
        delta_error_profile(2, [10, 5], cache)
    with pytest.raises(ValueError):
        delta_error_profile(2, [5, 5], cache)
    with pytest.raises(ValueError):
        delta_error_profile(2, [0, 5], cache)
    with pytest.raises(ValueError):
        delta_error_profile(9, [10], cache)  # composite p


def test_profile_preserves_grid_order(cache):
    xs = [3, 10, 47, 300, 9999]
    recs = delta_error_profile(3, xs, cache)
    assert [r.x for r in recs] == xs
    assert all(r.p == 3 for r in recs)


def test_cumulative_profile_pinned(sieve):
    (rec,) = cumulative_profile(2, [5], sieve)
    assert rec.exact == 8
    assert rec.main == pytest.approx(125 / (3 * PI_SQUARED), rel=1e-15)
    assert rec.quantity == "cumulative"


def test_cumulative_steps_by_delta(sieve):
    # the cumulative sum must advance by exactly delta(n, p) at each n
    rng = random.Random(5150)
    for p in (2, 3):
        ns = sorted(rng.sample(range(2, sieve.limit), 10))
        for n in ns:
            step = cumulative_delta_closed(n, p, sieve) - cumulative_delta_closed(n - 1, p, sieve)
            assert step == delta_direct(n, p, sieve)


def test_average_profile_pinned(sieve):
    (rec,) = average_profile(2, [5], sieve)
    assert rec.exact == Fraction(8, 5)
    assert isinstance(rec.exact, Fraction)
    assert rec.main == pytest.approx(25 / (3 * PI_SQUARED), rel=1e-15)
    assert rec.quantity == "average"


def test_average_is_cumulative_over_n(sieve):
    for p in (2, 5):
        for n in (1, 2, 17, 100, 4096):
            (avg,) = average_profile(p, [n], sieve)
            assert avg.exact == Fraction(cumulative_delta_closed(n, p, sieve), n)


def test_ratios_approach_one(sieve_100k, cache):
    for p in (2, 3):
        (rec,) = delta_error_profile(p, [10**6], cache)
        assert float(rec.exact) / rec.main == pytest.approx(1.0, abs=1e-3)
        (rec,) = cumulative_profile(p, [10**5], sieve_100k)
        assert float(rec.exact) / rec.main == pytest.approx(1.0, abs=1e-2)


def test_constant_identity_routes_agree():
    for p in (2, 3, 5, 7, 101):
        direct = main_term_constant(p)
        series = main_term_constant_via_series(p)
        assert abs(direct - series) < 1e-14
    assert main_term_constant(2) == pytest.approx(1 / PI_SQUARED, rel=1e-15)


def test_constant_rejects_composite():
    with pytest.raises(ValueError):
        main_term_constant(6)
    with pytest.raises(ValueError):
        main_term_constant_via_series(1)
