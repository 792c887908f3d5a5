import math
import random

import numpy as np
import pytest

from totsum import (
    CapacityError,
    build_sieve,
    factorize,
    is_prime,
    omega,
    phi,
    phi_from_factorization,
    primes_up_to,
)

FIRST_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                61, 67, 71, 73, 79, 83, 89, 97]


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_phi_matches_coprime_count(sieve):
    for n in range(1, 301):
        assert phi(n, sieve) == brute_phi(n)


def test_phi_well_known_values(sieve):
    assert phi(1, sieve) == 1
    assert phi(2, sieve) == 1
    assert phi(10, sieve) == 4
    assert phi(97, sieve) == 96  # prime
    assert phi(1024, sieve) == 512  # 2^10
    assert phi(9973, sieve) == 9972


def test_phi_agrees_with_product_formula(sieve):
    for n in range(1, 2001):
        assert phi(n, sieve) == phi_from_factorization(n, sieve)
    rng = random.Random(20240817)
    for _ in range(500):
        n = rng.randrange(1, sieve.limit + 1)
        assert phi(n, sieve) == phi_from_factorization(n, sieve)


def test_factorize_reconstructs_and_orders(sieve):
    rng = random.Random(999)
    candidates = list(range(1, 500)) + [rng.randrange(1, sieve.limit + 1) for _ in range(300)]
    for n in candidates:
        pairs = factorize(n, sieve)
        prod = 1
        for p, e in pairs:
            assert e >= 1
            assert is_prime(p, sieve)
            prod *= p**e
        assert prod == n
        assert [p for p, _ in pairs] == sorted({p for p, _ in pairs})


def test_factorize_one_is_empty(sieve):
    assert factorize(1, sieve) == []


def test_smallest_prime_factor_is_minimal(sieve):
    for n in range(2, 2000):
        p = int(sieve.spf[n])
        assert n % p == 0
        for d in range(2, p):
            assert n % d != 0


def test_omega_values(sieve):
    assert omega(1, sieve) == 0
    assert omega(2, sieve) == 1
    assert omega(6, sieve) == 2
    assert omega(30, sieve) == 3
    assert omega(1024, sieve) == 1
    assert omega(2 * 3 * 5 * 7 * 11, sieve) == 5


def test_primes_up_to(sieve):
    assert primes_up_to(100, sieve) == FIRST_PRIMES
    assert primes_up_to(1, sieve) == []
    assert primes_up_to(2, sieve) == [2]
    ps = primes_up_to(10_000, sieve)
    assert len(ps) == 1229  # pi(10^4)
    assert ps[-1] == 9973


def test_is_prime_within_sieve(sieve):
    flags = {p for p in primes_up_to(200, sieve)}
    for n in range(0, 201):
        assert is_prime(n, sieve) == (n in flags)


def test_is_prime_beyond_sieve(sieve):
    # beyond the table the deterministic witness test takes over
    assert is_prime(2_147_483_647, sieve)  # 2^31 - 1
    assert is_prime(2**61 - 1, sieve)
    assert is_prime(10**9 + 7)
    assert not is_prime(341)  # 11 * 31, base-2 pseudoprime
    assert not is_prime(561)  # Carmichael
    assert not is_prime(2**61 + 1, sieve)
    assert not is_prime((10**9 + 7) * (10**9 + 9))


def test_small_sieves():
    one = build_sieve(1)
    assert list(one.phi) == [0, 1]
    two = build_sieve(2)
    assert list(two.phi) == [0, 1, 1]
    assert int(two.spf[2]) == 2


def test_capacity_limits():
    with pytest.raises(CapacityError):
        build_sieve(0)
    with pytest.raises(CapacityError):
        build_sieve(1001, memory_ceiling=1000)
    # CapacityError is a ValueError so coarse handlers still catch it
    with pytest.raises(ValueError):
        build_sieve(0)


def test_tables_are_read_only(sieve):
    with pytest.raises(ValueError):
        sieve.phi[10] = 99
    with pytest.raises(ValueError):
        sieve.spf[10] = 99


def test_out_of_range_queries(sieve):
    with pytest.raises(ValueError):
        phi(0, sieve)
    with pytest.raises(ValueError):
        phi(sieve.limit + 1, sieve)
    with pytest.raises(ValueError):
        factorize(-3, sieve)


def test_cross_sieve_consistency(sieve):
    small = build_sieve(500)
    assert np.array_equal(small.phi, sieve.phi[:501])
    assert np.array_equal(small.spf, sieve.spf[:501])
