import pytest

from totsum import PsiCache, build_sieve


@pytest.fixture(scope="session")
def sieve():
    return build_sieve(10_000)


@pytest.fixture(scope="session")
def cache(sieve):
    return PsiCache(sieve)


@pytest.fixture(scope="session")
def sieve_100k():
    return build_sieve(100_000)


@pytest.fixture(scope="session")
def sieve_10m():
    # big enough for the randomized large-n equivalence sweep
    return build_sieve(10**7)
