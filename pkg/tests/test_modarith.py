import math
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from hsduadic.modarith import (NotCoprimeError, apply_multiplier, coset_pairing,
                               cyclotomic_cosets, euler_phi, factorize, is_prime,
                               is_square_mod, jacobi, kronecker, mult_order, prime_power, v2)


def brute_order(a, m):
    a %= m
    x, k = a, 1
    while x != 1 % m:
        x = x * a % m
        k += 1
    return k


def brute_square(a, n):
    return any((x * x - a) % n == 0 for x in range(n))


def test_is_prime_small():
    sieve = [p for p in range(2, 2000) if all(p % d for d in range(2, math.isqrt(p) + 1))]
    assert [n for n in range(2000) if is_prime(n)] == sieve


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime((2**31 - 1) * (2**61 - 1))


@given(st.integers(1, 10**15))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert reduce(lambda acc, pe: acc * pe[0] ** pe[1], f, 1) == n
    assert all(is_prime(p) for p, _ in f)
    assert [p for p, _ in f] == sorted({p for p, _ in f})


def test_factorize_semiprime():
    assert factorize(1000003 * 999983) == [(999983, 1), (1000003, 1)]
    assert factorize(1) == []


def test_euler_phi_and_v2():
    for n in range(1, 300):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    assert [v2(n) for n in (1, 2, 12, -8, 96)] == [0, 1, 2, 3, 5]


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(ValueError):
        prime_power(6)
    with pytest.raises(ValueError):
        prime_power(1)


@given(st.integers(2, 3000), st.integers(-50, 50))
def test_mult_order_matches_brute(m, a):
    if math.gcd(a, m) != 1:
        with pytest.raises(NotCoprimeError):
            mult_order(a, m)
        return
    assert mult_order(a, m) == brute_order(a, m)


def test_mult_order_examples():
    assert mult_order(3, 5) == 4
    assert mult_order(3, 7) == 6
    assert mult_order(5, 1) == 1


def test_cosets_partition():
    part = cyclotomic_cosets(13, 9)
    assert part.cosets == ((0,), (1, 3, 9), (2, 5, 6), (4, 10, 12), (7, 8, 11))
    assert part.reps == [0, 1, 2, 4, 7]
    assert part.coset_of(5) == (2, 5, 6)
    assert part.is_union_of_cosets({1, 3, 9, 0})
    assert not part.is_union_of_cosets({1, 3})


@given(st.integers(1, 200).map(lambda k: 2 * k + 1), st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
def test_cosets_are_orbits(n, q):
    if math.gcd(n, q) != 1:
        return
    part = cyclotomic_cosets(n, q * q)
    seen = sorted(s for c in part.cosets for s in c)
    assert seen == list(range(n))
    for c in part.cosets:
        assert apply_multiplier(c, q * q, n) == frozenset(c)


def test_coset_pairing():
    part = cyclotomic_cosets(5, 9)
    pr = coset_pairing(part, -3)
    assert pr.fixed == (0,)
    assert pr.swapped == ((1, 2),)
    with pytest.raises(ValueError):
        coset_pairing(cyclotomic_cosets(7, 1), 3)  # 1 -> 3 -> 2: not an involution


@given(st.integers(-200, 200), st.integers(1, 400).map(lambda k: 2 * k - 1))
def test_jacobi_multiplicative_in_modulus(a, n):
    expected = 1
    for p, e in factorize(n):
        leg = pow(a % p, (p - 1) // 2, p) if a % p else 0
        leg = -1 if leg == p - 1 else leg
        expected *= leg ** e
    assert jacobi(a, n) == expected


def test_kronecker_at_two_and_negative():
    assert [kronecker(a, 2) for a in (1, 3, 5, 7, 2)] == [1, -1, -1, 1, 0]
    assert kronecker(-1, -1) == -1
    assert kronecker(5, 0) == 0 and kronecker(1, 0) == 1
    assert kronecker(-4, 9) == 1


def test_is_square_mod_exhaustive():
    for a in [x for x in range(-7, 8) if x not in (0, 1, 4)]:
        for n in range(1, 2001):
            if math.gcd(a, n) == 1:
                assert is_square_mod(a, n) == brute_square(a, n), (a, n)


def test_is_square_mod_examples():
    assert is_square_mod(2, 7)
    assert not is_square_mod(2, 15)
    assert jacobi(2, 15) == 1
    with pytest.raises(NotCoprimeError):
        is_square_mod(3, 9)
