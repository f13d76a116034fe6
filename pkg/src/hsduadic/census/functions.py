"""Indicator functions over the integers and their counting functions.

chi_q    n coprime to every q^(2i-1) + 1 (lengths split by mu_{-q})
g_a      product over odd p | n of (1 + (a/p))/2
f_a      g_a with the 2-adic corrections; equals [a is a square mod n]
xi_D     n represented by a primitive positive form of discriminant D

Each has a scalar version (direct factorization, used as the oracle) and a
sieve version built on PrimeRuleSieve.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..modarith import factorize, is_square_mod, kronecker, mult_order, prime_power, v2
from .sieve import ALLOW, EVEN, FORBID, PrimeRuleSieve, odd_part, powmod, small_primes, symbol_on_primes

LITERAL = "literal"          # every n <= x
CODE_LENGTHS = "code-lengths"  # odd n coprime to q only
A_MODES = (LITERAL, CODE_LENGTHS)

# g_a at p = 2: the square-mod-n lemma only works if 2 contributes nothing
# ("odd"); the L-function constant is written with the Kronecker value.
ODD_PRIMES = "odd"
KRONECKER = "kronecker"
CONVENTIONS = (ODD_PRIMES, KRONECKER)


# ---------------------------------------------------------------------------
# chi_q, A_q and the density delta(q)


@lru_cache(maxsize=None)
def _chi_prime(r: int, q: int) -> int:
    p, _ = prime_power(q)
    if r == p:
        return 1
    return 0 if mult_order(q, r) % 4 == 2 else 1


def chi_q(n: int, q: int) -> int:
    """1 if n is coprime to every q^(2i-1) + 1, else 0."""
    if n < 1:
        raise ValueError("n must be positive")
    return int(all(_chi_prime(r, q) for r, _ in factorize(n)))


def _bad_for_chi(q: int, primes: np.ndarray) -> np.ndarray:
    """True where ord_r(q) = 2 mod 4 (r != p), i.e. q^(odd part of r-1) = -1."""
    p, _ = prime_power(q)
    bad = np.zeros(len(primes), dtype=bool)
    sel = (primes != p) & (primes != 2)
    r = primes[sel]
    bad[sel] = powmod(q % r, odd_part(r - 1), r) == r - 1
    return bad


def a_q_sieve(q: int, mode: str = LITERAL) -> PrimeRuleSieve:
    if mode not in A_MODES:
        raise ValueError(f"mode must be one of {A_MODES}")
    p, _ = prime_power(q)

    def classify(primes):
        codes = np.where(_bad_for_chi(q, primes), FORBID, ALLOW)
        if mode == CODE_LENGTHS:
            codes[(primes == 2) | (primes == p)] = FORBID
        return codes

    return PrimeRuleSieve(classify, key={"kind": "A", "q": q, "mode": mode})


def A_q(x: int, q: int, mode: str = LITERAL) -> int:
    return a_q_sieve(q, mode).count(x).count


def A_q_naive(x: int, q: int, mode: str = LITERAL) -> np.ndarray:
    """Prefix counts of A_q by factoring every n."""
    p, _ = prime_power(q)
    vals = np.zeros(x + 1, dtype=np.int64)
    for n in range(1, x + 1):
        if mode == CODE_LENGTHS and (n % 2 == 0 or n % p == 0):
            continue
        vals[n] = chi_q(n, q)
    return np.cumsum(vals)


def delta(q: int) -> Fraction:
    """Density of primes r with ord_r(q) = 2 mod 4, for q = p^t."""
    p, t = prime_power(q)
    lam = v2(t)
    if p == 2:
        if lam == 0:
            return Fraction(7, 24)
        if lam == 1:
            return Fraction(1, 3)
        return Fraction(1, 3 * 2 ** (lam + 1))
    return Fraction(1, 3 * 2 ** lam)


def li(x: float) -> float:
    """Offset logarithmic integral, integral of 1/log t from 2 to x."""
    from scipy.integrate import quad

    val, _ = quad(lambda t: 1.0 / math.log(t), 2.0, x, limit=200)
    return val


def prime_order_census(q: int, X: int) -> dict:
    """Primes r <= X with ord_r(q) = 2 mod 4, against the density delta(q)."""
    if X < 100:
        raise ValueError("X must be at least 100")
    primes = small_primes(X)
    count = int(_bad_for_chi(q, primes).sum())
    pi = len(primes)
    d = delta(q)
    L = li(X)
    return {
        "q": q, "X": X, "count": count, "pi": pi,
        "density": count / pi, "delta": str(d), "delta_float": float(d),
        "li": L, "expected_count": float(d) * L, "expected_rest": (1 - float(d)) * L,
    }


# ---------------------------------------------------------------------------
# g_a, f_a, D_a, G_a


def _check_coprime(a: int, n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")


def g_a(n: int, a: int, convention: str = ODD_PRIMES) -> int:
    _check_coprime(a, n)
    out = 1
    for p, _ in factorize(n):
        if p == 2 and convention == ODD_PRIMES:
            continue
        out *= (1 + kronecker(a, p)) // 2
    return out


def f_a(n: int, a: int) -> int:
    """1 iff a is a square mod n (a, n coprime)."""
    _check_coprime(a, n)
    e = v2(n)
    if a % 4 == 3 and e >= 2:
        return 0
    if a % 8 == 5 and e >= 3:
        return 0
    return g_a(n, a)


def is_perfect_square(a: int) -> bool:
    return a >= 0 and math.isqrt(a) ** 2 == a


def _g_classify(a: int, convention: str, extra_forbid: tuple[int, ...] = ()):
    at_two = kronecker(a, 2) if convention == KRONECKER else (0 if a % 2 == 0 else 1)

    def classify(primes):
        s = symbol_on_primes(a, primes, at_two)
        codes = np.where(s == 1, ALLOW, FORBID)
        for r in extra_forbid:
            codes[primes == r] = FORBID
        return codes

    return classify


def g_sieve(a: int, convention: str = ODD_PRIMES, odd_only: bool = False) -> PrimeRuleSieve:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    extra = (2,) if odd_only else ()
    return PrimeRuleSieve(_g_classify(a, convention, extra),
                          key={"kind": "G", "a": a, "convention": convention, "odd_only": odd_only})


def f_sieve(a: int, odd_only: bool = False) -> PrimeRuleSieve:
    cap2 = None
    if a % 4 == 3:
        cap2 = 1
    elif a % 8 == 5:
        cap2 = 2
    extra = (2,) if odd_only else ()
    return PrimeRuleSieve(_g_classify(a, ODD_PRIMES, extra), cap2=cap2,
                          key={"kind": "D", "a": a, "odd_only": odd_only})


def G_a(x: int, a: int, convention: str = ODD_PRIMES) -> int:
    """Sum of g_a(n) over n <= x coprime to a."""
    return g_sieve(a, convention).count(x).count


def D_a(x: int, a: int, odd_only: bool = False) -> int:
    """Number of n <= x coprime to a with a a square mod n."""
    return f_sieve(a, odd_only).count(x).count


def D_a_naive(x: int, a: int, odd_only: bool = False) -> np.ndarray:
    vals = np.zeros(x + 1, dtype=np.int64)
    for n in range(1, x + 1):
        if math.gcd(a, n) != 1 or (odd_only and n % 2 == 0):
            continue
        vals[n] = int(is_square_mod(a, n))
    return np.cumsum(vals)


def G_a_naive(x: int, a: int, convention: str = ODD_PRIMES) -> np.ndarray:
    vals = np.zeros(x + 1, dtype=np.int64)
    for n in range(1, x + 1):
        if math.gcd(a, n) == 1:
            vals[n] = g_a(n, a, convention)
    return np.cumsum(vals)


def splitting_identity_report(a: int, x: int) -> dict:
    """Compare D_a(x) with three readings of its split over the power of 2 in n.

    literal:   G_{2a}(x) + G_{2a}(x/2) [+ G_{2a}(x/4)]
    index_a:   the same with G_a in place of G_{2a}
    odd_part:  O(x) + O(x/2) [+ O(x/4)], O(y) = sum of g_a(n) over n <= y, (n, 2a) = 1
    The third cases of each (a = 1 mod 8 or a even) reduce to G_a(x).
    """
    if is_perfect_square(a):
        raise ValueError(f"{a} is a perfect square")
    truth = f_sieve(a).prefix(x)
    if a % 4 == 3:
        parts = [x, x // 2]
    elif a % 8 == 5:
        parts = [x, x // 2, x // 4]
    else:
        parts = [x]
    G2a = g_sieve(2 * a).prefix(x)
    Ga = g_sieve(a).prefix(x)
    odd = g_sieve(a, odd_only=True).prefix(x)
    if len(parts) == 1:
        readings = {"literal": int(Ga[x]), "index_a": int(Ga[x]), "odd_part": int(Ga[x])}
    else:
        readings = {
            "literal": int(sum(G2a[y] for y in parts)),
            "index_a": int(sum(Ga[y] for y in parts)),
            "odd_part": int(sum(odd[y] for y in parts)),
        }
    d = int(truth[x])
    return {"a": a, "x": x, "D_a": d, "readings": readings,
            "matches": sorted(k for k, v in readings.items() if v == d)}


# ---------------------------------------------------------------------------
# xi_D, B_D and binary quadratic forms


def check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant")


def xi_D(n: int, D: int) -> int:
    check_discriminant(D)
    if n < 1:
        raise ValueError("n must be positive")
    for p, e in factorize(n):
        s = kronecker(D, p)
        if s == 1:
            continue
        if s == -1 and e % 2 == 0:
            continue
        return 0
    return 1


def b_sieve(D: int) -> PrimeRuleSieve:
    check_discriminant(D)
    at_two = kronecker(D, 2)

    def classify(primes):
        s = symbol_on_primes(D, primes, at_two)
        return np.select([s == 1, s == -1], [ALLOW, EVEN], FORBID)

    return PrimeRuleSieve(classify, key={"kind": "B", "D": D})


def B_D(x: int, D: int) -> int:
    return b_sieve(D).count(x).count


def B_D_naive(x: int, D: int) -> np.ndarray:
    vals = np.zeros(x + 1, dtype=np.int64)
    for n in range(1, x + 1):
        vals[n] = xi_D(n, D)
    return np.cumsum(vals)


@lru_cache(maxsize=None)
def reduced_forms(D: int) -> tuple[tuple[int, int, int], ...]:
    """Reduced primitive positive forms (a, b, c) with b^2 - 4ac = D."""
    check_discriminant(D)
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                out.append((a, b, c))
        a += 1
    return tuple(sorted(out))


def class_number(D: int) -> int:
    return len(reduced_forms(D))


def represents(form: tuple[int, int, int], n: int) -> bool:
    """Whether a x^2 + b x y + c y^2 = n has an integer solution."""
    a, b, c = form
    D = b * b - 4 * a * c
    # (2ax + by)^2 + |D| y^2 = 4an bounds y
    ymax = math.isqrt(4 * a * n // -D)
    for y in range(-ymax, ymax + 1):
        disc = D * y * y + 4 * a * n
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc:
            continue
        for root in (s, -s):
            if (-b * y + root) % (2 * a) == 0:
                return True
    return False


def representability(n: int, D: int) -> bool:
    """Whether some primitive positive form of discriminant D represents n."""
    if n < 1:
        raise ValueError("n must be positive")
    return any(represents(f, n) for f in reduced_forms(D))
