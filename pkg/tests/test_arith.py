import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paraboloid_lattice.arith import (
    divisors_congruent,
    factorize,
    greatest_square_divisor,
    is_fundamental_discriminant,
    is_probable_prime,
    kronecker,
)

from oracles import brute_divisors, legendre_by_residues, trial_factor


@pytest.mark.parametrize("n, expected", [(1, []), (12, [(2, 2), (3, 1)]), (9973, [(9973, 1)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected
    assert trial_factor(n) == expected


def test_factorize_products_up_to_1e5():
    for n in range(1, 10**5 + 1):
        assert math.prod(p**e for p, e in factorize(n)) == n


def test_factorize_matches_trial_division():
    rng = random.Random(0)
    for _ in range(300):
        n = rng.randrange(1, 10**9)
        assert factorize(n) == trial_factor(n)


def test_factorize_large_semiprime_uses_rho():
    p, q = 1000003, 2147483647
    assert factorize(p * q) == [(p, 1), (q, 1)]
    big = 2**61 - 1  # Mersenne prime
    assert factorize(big) == [(big, 1)]
    assert factorize(3 * 1000000007**2) == [(3, 1), (1000000007, 2)]


def test_factorize_width_guard():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(OverflowError):
        factorize(2**63 + 1)
    assert factorize(2**63) == [(2, 63)]


@given(st.integers(min_value=1, max_value=2**40))
@settings(max_examples=200)
def test_factorization_invariants(n):
    f = factorize(n)
    primes = [p for p, _ in f]
    assert primes == sorted(set(primes))
    assert all(is_probable_prime(p) for p in primes)
    assert math.prod(p**e for p, e in f) == n


@pytest.mark.parametrize("n, expected", [(1, 1), (48, 16), (45, 9)])
def test_greatest_square_divisor(n, expected):
    assert greatest_square_divisor(n) == expected
    assert max(s * s for s in range(1, n + 1) if n % (s * s) == 0) == expected


def test_square_part_times_squarefree_part():
    for n in range(1, 5000):
        g = greatest_square_divisor(n)
        rest = n // g
        assert n % g == 0
        assert all(e == 1 for _, e in trial_factor(rest))


def test_divisors_congruent():
    assert divisors_congruent(21, 3, 4) == [3, 7]
    assert divisors_congruent(25, 3, 4) == []
    for n in (1, 12, 360, 997, 1001):
        assert divisors_congruent(n, 0, 1) == brute_divisors(n)
        assert divisors_congruent(n, 1, 4) == [d for d in brute_divisors(n) if d % 4 == 1]
    with pytest.raises(ValueError):
        divisors_congruent(10, 4, 4)


def test_kronecker_examples():
    assert kronecker(-3, 1) == 1
    assert kronecker(17, 1) == 1
    assert kronecker(-3, 2) == -1
    assert kronecker(-4, 5) == 1


def test_kronecker_legendre_agreement():
    primes = [p for p in range(3, 400) if is_probable_prime(p)]
    for p in primes:
        for D in range(-60, 61):
            assert kronecker(D, p) == legendre_by_residues(D, p)


def test_kronecker_conventions():
    assert kronecker(1, 0) == 1 and kronecker(-1, 0) == 1 and kronecker(2, 0) == 0
    assert kronecker(-5, -1) == -1 and kronecker(5, -1) == 1
    assert kronecker(4, 2) == 0
    assert [kronecker(D, 2) for D in (1, 3, 5, 7)] == [1, -1, -1, 1]


def test_kronecker_multiplicative_random_triples():
    rng = random.Random(2024)
    for _ in range(10**4):
        D = rng.randint(-500, 500)
        m1 = rng.randint(-300, 300)
        m2 = rng.randint(-300, 300)
        assert kronecker(D, m1 * m2) == kronecker(D, m1) * kronecker(D, m2)


def test_fundamental_discriminants():
    good = [-3, -4, -7, -8, -11, -15, -20, -23, -24, 5, 8, 12]
    bad = [-12, -16, -27, -28, 0, 1, -1, -2, 9]
    assert all(is_fundamental_discriminant(D) for D in good)
    assert not any(is_fundamental_discriminant(D) for D in bad)
