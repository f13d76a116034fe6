"""Integer and modular arithmetic: factoring, orders, cyclotomic cosets, symbols.

Everything here is pure and deterministic.  Factoring uses a Miller-Rabin
test with the witness set that is exact below 2**64 and Pollard's rho
(Brent variant) seeded from a fixed constant, so repeated runs give the
same output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

Factorization = list[tuple[int, int]]

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class NotCoprimeError(ValueError):
    """Raised when an operation needs gcd(a, n) = 1 and it does not hold."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Brent's rho)."""
    c = 1
    while True:
        y, r, g, acc = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    acc = acc * abs(x - y) % n
                g = math.gcd(acc, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factorize(n: int) -> Factorization:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    p = 53
    while n > 1 and p * p <= n and p < 1000:
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _rho(m)
        stack += [d, m // d]
    return sorted(counts.items())


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    n = abs(n)
    return (n & -n).bit_length() - 1


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**t; raise ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f[0]


def mult_order(a: int, m: int) -> int:
    """Least t >= 1 with a**t = 1 (mod m).

    Starts from the group order phi(m) and strips prime factors while
    the power stays at 1.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return 1
    a %= m
    if math.gcd(a, m) != 1:
        raise NotCoprimeError(f"gcd({a}, {m}) != 1")
    fm = factorize(m)
    phi = 1
    for p, e in fm:
        phi *= (p - 1) * p ** (e - 1)
    t = phi
    for r, _ in factorize(phi):
        while t % r == 0 and pow(a, t // r, m) == 1:
            t //= r
    return t


def _check_unit(a: int, n: int) -> None:
    if math.gcd(a, n) != 1:
        raise NotCoprimeError(f"gcd({a}, {n}) != 1")


@dataclass(frozen=True)
class CosetPartition:
    """Orbits of Z/n under multiplication by `base`.

    Each coset is a sorted tuple whose first entry is its representative;
    the cosets themselves are sorted by representative.
    """

    n: int
    base: int
    cosets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {s: k for k, c in enumerate(self.cosets) for s in c}
        )

    def coset_of(self, s: int) -> tuple[int, ...]:
        return self.cosets[self._index[s % self.n]]

    @property
    def reps(self) -> list[int]:
        return [c[0] for c in self.cosets]

    def is_union_of_cosets(self, subset: Iterable[int]) -> bool:
        s = {x % self.n for x in subset}
        return all(set(self.coset_of(x)) <= s for x in s)


def cyclotomic_cosets(n: int, base: int) -> CosetPartition:
    if n < 1:
        raise ValueError("n must be positive")
    _check_unit(base, n)
    b = base % n
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        orbit = []
        x = s
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * b % n
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(n, base, tuple(cosets))


def apply_multiplier(subset: Iterable[int], a: int, n: int) -> frozenset[int]:
    """Image of a subset of Z/n under i -> a*i."""
    _check_unit(a, n)
    return frozenset(i * a % n for i in subset)


@dataclass(frozen=True)
class CosetPairing:
    fixed: tuple[int, ...]
    swapped: tuple[tuple[int, int], ...]


def coset_pairing(part: CosetPartition, a: int) -> CosetPairing:
    """Sort the nonzero cosets into those fixed by x -> a*x and swapped pairs.

    The coset {0} is always fixed and is reported as such.
    """
    n = part.n
    _check_unit(a, n)
    fixed, swapped = [], []
    done = set()
    for c in part.cosets:
        rep = c[0]
        if rep in done:
            continue
        image = apply_multiplier(c, a, n)
        target = part.coset_of(rep * a)
        if image != frozenset(target):
            raise ValueError(f"multiplier {a} does not permute the cosets mod {n}")
        back = part.coset_of(target[0] * a)[0]
        if back != rep:
            raise ValueError(f"multiplier {a} is not an involution on cosets mod {n}")
        if target[0] == rep:
            fixed.append(rep)
        else:
            swapped.append((rep, target[0]))
            done.add(target[0])
        done.add(rep)
    return CosetPairing(tuple(fixed), tuple(swapped))


def jacobi(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for any integer n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        k = v2(n)
        n >>= k
        if k % 2 and a % 8 in (3, 5):
            sign = -sign
    return sign * jacobi(a, n)


def is_square_mod(a: int, n: int) -> bool:
    """Whether x**2 = a (mod n) is solvable, for a coprime to n.

    Decided prime power by prime power: an odd prime power needs a to be a
    residue mod the prime (Hensel lifting does the rest); powers of two
    follow the rules mod 2, 4 and 8.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _check_unit(a, n)
    for p, e in factorize(n):
        if p == 2:
            if e == 2 and a % 4 != 1:
                return False
            if e >= 3 and a % 8 != 1:
                return False
        elif jacobi(a, p) != 1:
            return False
    return True
