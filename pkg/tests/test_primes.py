import random

import pytest

from gapcheck.primes import (CapacityError, CoverageError, build_store,
                             is_prime_u64)
from oracles import meissel_pi, pi_trial, trial_division_is_prime, trial_division_primes


def test_first_primes(small_store):
    assert [small_store.nth_prime(i) for i in range(1, 5)] == [2, 3, 5, 7]


def test_pi_table_values(small_store):
    assert small_store.pi(1) == 0
    assert small_store.pi(2) == 1
    assert small_store.pi(16) == 6
    assert small_store.pi(32) == 11
    assert small_store.pi(243) - small_store.pi(32) == 42


def test_pi_against_trial_division(small_store):
    primes = set(trial_division_primes(2000))
    count = 0
    for x in range(2001):
        if x in primes:
            count += 1
        assert small_store.pi(x) == count


def test_is_prime_against_trial_division(small_store):
    for x in range(2, 3000):
        assert small_store.is_prime(x) == trial_division_is_prime(x)


def test_nth_prime_pi_roundtrip(small_store):
    for p in small_store.iter_primes(2, 10000):
        n = small_store.pi(p)
        assert small_store.nth_prime(n) == p
    for n in range(1, 500):
        assert small_store.pi(small_store.nth_prime(n)) == n


def test_named_prime_indices(small_store):
    assert small_store.nth_prime(16) == 53
    assert small_store.nth_prime(24) == 89
    assert small_store.nth_prime(26) == 101
    assert small_store.nth_prime(28) == 107


def test_pi_monotone_and_checkpoint_consistency(mid_store):
    # independent Meissel-style oracle at scattered points
    for x in [10 ** 4, 123456, 10 ** 6, 2999999]:
        assert mid_store.pi(x) == meissel_pi(x)


def test_segmented_vs_plain_sieve_windows(mid_store):
    rng = random.Random(7)
    for _ in range(5):
        lo = rng.randrange(2, 10 ** 6)
        hi = lo + rng.randrange(10, 10 ** 4)
        got = list(mid_store.iter_primes(lo, hi))
        assert got == [x for x in range(lo, hi + 1) if trial_division_is_prime(x)]


def test_next_prime(small_store):
    assert small_store.next_prime(1) == 2
    assert small_store.next_prime(2) == 3
    assert small_store.next_prime(89) == 97
    assert small_store.next_prime(7917) == 7919


def test_bulk_pi_matches_pi(small_store):
    xs = [0, 1, 2, 10, 97, 1000, 99999, 31337]
    assert small_store.bulk_pi(xs) == [small_store.pi(x) for x in xs]


def test_coverage_and_capacity_errors(small_store):
    with pytest.raises(CoverageError):
        small_store.pi(10 ** 6)
    with pytest.raises(CoverageError):
        small_store.nth_prime(10 ** 6)
    with pytest.raises(CapacityError):
        build_store(10 ** 9, limit_cap=10 ** 8)


def test_is_prime_u64_small_values():
    assert not is_prime_u64(0) and not is_prime_u64(1)
    assert is_prime_u64(2) and is_prime_u64(3)
    assert not is_prime_u64(4)
    assert is_prime_u64(374953)


def test_is_prime_u64_against_sieve(small_store):
    rng = random.Random(11)
    for _ in range(5000):
        x = rng.randrange(0, 10 ** 5)
        assert is_prime_u64(x) == small_store.is_prime(x)


def test_is_prime_u64_large_known():
    # Mersenne prime 2^61 - 1 and neighbours
    assert is_prime_u64(2 ** 61 - 1)
    assert not is_prime_u64(2 ** 61 + 1)  # 3 * 715827883 * ...
    assert not is_prime_u64((2 ** 31 - 1) ** 2)
    with pytest.raises(ValueError):
        is_prime_u64(1 << 64)
