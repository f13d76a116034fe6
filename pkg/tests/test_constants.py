import math

import pytest

from hsduadic.census import constants as cs
from hsduadic.census.functions import B_D, G_a

DISCS = [-3, -4, -7, -8, -11, -15, -20, -23]


def test_known_L_values():
    assert cs.L1_digamma(-4) == pytest.approx(math.pi / 4, abs=1e-12)
    assert cs.L1_digamma(-3) == pytest.approx(math.pi / (3 * math.sqrt(3)), abs=1e-12)
    assert cs.L1_digamma(5) == pytest.approx(2 * math.log((1 + math.sqrt(5)) / 2) / math.sqrt(5), abs=1e-12)
    assert cs.L1_digamma(8) == pytest.approx(math.log(1 + math.sqrt(2)) / math.sqrt(2), abs=1e-12)
    with pytest.raises(ValueError):
        cs.L1_digamma(1)


def test_character_modulus():
    assert [cs.character_modulus(a) for a in (-4, -3, -1, 2, 3, 5, 7)] == [-4, -3, -4, 8, 12, 5, 28]


@pytest.mark.parametrize("D", DISCS)
def test_L1_three_ways(D):
    exact = cs.L1_digamma(D)
    assert cs.L1_class_number(D) == pytest.approx(exact, abs=1e-12)
    s, bound = cs.L1_partial(D, 10**5)
    assert abs(s - exact) <= bound
    assert bound < 1e-3


@pytest.mark.parametrize("a", [-10, -7, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10])
def test_L1_series_real_characters(a):
    d = cs.character_modulus(a)
    s, bound = cs.L1_partial(d, 10**5)
    assert abs(s - cs.L1_digamma(d)) <= bound


@pytest.mark.parametrize("a", [-4, -3, -1, 2, 3, 5, 7])
def test_G_stable_in_P(a):
    lo = cs.estimate_G_const(a, P=10**5, N=10**5)
    hi = cs.estimate_G_const(a, P=10**6, N=10**5)
    assert abs(lo.value - hi.value) < 1e-5
    assert abs(lo.value - hi.value) <= lo.error + 1e-12
    assert hi.error < lo.error


@pytest.mark.parametrize("D", DISCS)
def test_J_over_G_matches_full_product(D):
    j = cs.estimate_J(D, P=10**6, N=10**5)
    g = cs.estimate_G_D(D, P=10**6, N=10**5)
    exact = 1 / cs.minus_prime_product_exact(D)
    assert (j.value / g.value) ** 2 == pytest.approx(exact ** 2, rel=1e-6)
    assert cs.minus_prime_product_exact(D) == pytest.approx(cs.minus_prime_product(D, 10**6)[0], rel=2e-6)


def test_conventions_agree_for_even_a():
    for a in (-6, -2, 2, 6, 10):
        o = cs.estimate_G_const(a, P=10**5, N=10**4)
        k = cs.estimate_G_const(a, P=10**5, N=10**4, convention="kronecker")
        assert o.value == pytest.approx(k.value, rel=1e-12)


@pytest.mark.parametrize("a", [-4, -3, -1, 2, 3, 5, 7])
def test_G_against_count(a):
    x = 10**6
    emp = G_a(x, a) * math.sqrt(math.log(x)) / x
    assert emp == pytest.approx(cs.estimate_G_const(a, P=10**5, N=10**5).value, rel=0.10)


@pytest.mark.parametrize("D", DISCS)
def test_J_against_count(D):
    x = 10**6
    emp = B_D(x, D) * math.sqrt(math.log(x)) / x
    assert emp == pytest.approx(cs.estimate_J(D, P=10**5, N=10**5).value, rel=0.10)


def test_kronecker_constant_misses_for_3_mod_4():
    x = 10**6
    for a in (3, -1):
        emp = G_a(x, a, "kronecker") * math.sqrt(math.log(x)) / x
        k = cs.estimate_G_const(a, P=10**5, N=10**5, convention="kronecker").value
        assert abs(emp / k - 1) > 0.15


@pytest.mark.slow
def test_G_minus4_at_1e7():
    x = 10**7
    emp = G_a(x, -4) * math.sqrt(math.log(x)) / x
    assert emp == pytest.approx(cs.estimate_G_const(-4).value, rel=0.15)


def test_rejects_squares_and_bad_discriminants():
    for a in (0, 1, 4, 9):
        with pytest.raises(ValueError):
            cs.estimate_G_const(a, P=1000, N=1000)
    with pytest.raises(ValueError):
        cs.estimate_J(-5)
    with pytest.raises(ValueError):
        cs.estimate_G_const(-4, P=1000, N=1000, convention="other")


def test_to_json_fields():
    rec = cs.estimate_G_const(-4, P=1000, N=1000).to_json()
    assert set(rec) == {"a", "kind", "value", "error", "L1", "L1_series",
                        "L1_series_bound", "euler_product", "P", "N"}
