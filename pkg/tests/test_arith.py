import math
import random

import pytest
from hypothesis import given, strategies as st

from lucas_carmichael.arith import (
    Factorization,
    divisors,
    factor_with_spf,
    factorize,
    is_prime,
    is_squarefree,
    lcm_list,
    primes_up_to,
    spf_sieve,
    witness_bases,
)
from lucas_carmichael.errors import InvalidInputError
from oracles import eratosthenes, trial_division_factor, trial_division_is_prime


@pytest.mark.parametrize("n,expected", [(561, False), (2, True), (468686771783, True),
                                        (0, False), (1, False), (4, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division_small():
    assert all(is_prime(n) == trial_division_is_prime(n) for n in range(10**5))


def test_is_prime_matches_sieve_to_a_million():
    flags = eratosthenes(10**6)
    assert all(is_prime(n) == bool(flags[n]) for n in range(10**6 + 1))


@pytest.mark.parametrize("n", [
    3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
    3825123056546413051,  # strong pseudoprime to bases 2..23
    318665857834031151167461,  # strong pseudoprime to bases 2..37
    2047, 1373653, 25326001, 2152302898747, 3474749660383, 341550071728321,
])
def test_is_prime_rejects_known_strong_pseudoprimes(n):
    assert not is_prime(n)


def test_is_prime_large_known_values():
    assert is_prime(2**61 - 1)
    assert is_prime(2**89 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))
    assert witness_bases(2**64 + 1)[-1] == 37
    assert witness_bases(10**30)[-1] == 41


@pytest.mark.parametrize("n,expected", [
    (588455, {5: 1, 7: 1, 17: 1, 23: 1, 43: 1}),
    (399, {3: 1, 7: 1, 19: 1}),
    (4, {2: 2}),
])
def test_factorize_examples(n, expected):
    assert factorize(n).as_dict() == expected


def test_588455_from_r_and_k1():
    # p_i = r_i * k1 - 1 with k1 = 2
    ps = [2 * r - 1 for r in (3, 4, 9, 12, 22)]
    assert ps == [5, 7, 17, 23, 43] and math.prod(ps) == 588455


def test_factorize_rejects_small():
    for bad in (1, 0, -5):
        with pytest.raises(InvalidInputError):
            factorize(bad)


def test_factorize_all_to_a_million_against_spf():
    spf = spf_sieve(10**6)
    for n in range(2, 10**6 + 1):
        f = factorize(n)
        assert math.prod(p**e for p, e in f.factors) == n
        assert f.factors[0][0] == spf[n]


def test_factorize_matches_trial_division_sample():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randrange(2, 10**12)
        assert factorize(n).as_dict() == trial_division_factor(n)


def test_factorize_needs_splitting():
    # both factors exceed the trial bound, so the rho splitter must find them
    p, q = 1000000007, 998244353
    f = factorize(p * q * q, trial_bound=1000)
    assert f.as_dict() == {q: 2, p: 1}
    big = (2**61 - 1) * (2**31 - 1) * 10007
    assert factorize(big).as_dict() == {10007: 1, 2**31 - 1: 1, 2**61 - 1: 1}


def test_factorization_flags_probable_primes():
    assert factorize(2**61 - 1).proven
    assert not factorize(2**89 - 1).proven


def test_factorization_rejects_bad_lists():
    with pytest.raises(InvalidInputError):
        Factorization(12, ((2, 2), (3, 2)))
    with pytest.raises(InvalidInputError):
        Factorization(15, ((5, 1), (3, 1)))


@pytest.mark.parametrize("n,expected", [(399, True), (4, False), (935, True), (12, False)])
def test_is_squarefree(n, expected):
    assert is_squarefree(factorize(n)) is expected


@pytest.mark.parametrize("xs,expected", [
    ([3, 4, 9, 12, 22], 396),
    ([4, 6, 9, 12, 16, 27, 36], 432),
    ([1], 1),
])
def test_lcm_list(xs, expected):
    assert lcm_list(xs) == expected


def test_lcm_list_errors():
    with pytest.raises(InvalidInputError):
        lcm_list([])
    with pytest.raises(InvalidInputError):
        lcm_list([3, 0])


def test_gcd_lcm_identity():
    rng = random.Random(11)
    for _ in range(10**5):
        a, b = rng.randrange(1, 10**9), rng.randrange(1, 10**9)
        assert lcm_list([a, b]) * math.gcd(a, b) == a * b


def test_spf_examples():
    t = spf_sieve(10)
    assert t[9] == 3 and t[7] == 7
    assert spf_sieve(600)[399] == 3
    with pytest.raises(InvalidInputError):
        spf_sieve(1)


def test_primes_up_to_matches_sieve():
    flags = eratosthenes(5000)
    assert primes_up_to(5000).tolist() == [i for i in range(5001) if flags[i]]


_SPF = spf_sieve(10**6)


@given(st.integers(2, 10**6))
def test_factor_with_spf_agrees(n):
    assert factor_with_spf(n, _SPF) == factorize(n)


@given(st.integers(2, 10**9))
def test_divisors_are_exact(n):
    divs = divisors(factorize(n))
    assert all(n % d == 0 for d in divs)
    assert len(divs) == math.prod(e + 1 for _, e in factorize(n).factors)
