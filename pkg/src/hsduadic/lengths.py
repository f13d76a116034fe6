"""Which lengths n split by mu_{-q}, carry duadic codes, or carry Hermitian
self-dual extended cyclic codes over GF(q^2)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .modarith import factorize, is_square_mod, mult_order


class MultiplierPreconditionError(ValueError):
    """mu_t^2 does not fix every q^2-cyclotomic coset mod n."""


def _validate(n: int, q: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"length must be odd and positive, got {n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")


def prime_evidence(n: int, q: int) -> list[tuple[int, int, int]]:
    """(r, ord_r(q), ord_r(q) mod 4) for each prime r dividing n."""
    out = []
    for r, _ in factorize(n):
        o = mult_order(q, r)
        out.append((r, o, o % 4))
    return out


def splits_by_mu_minus_q(n: int, q: int) -> bool:
    """ord_r(q) is not 2 mod 4 for every prime r | n."""
    _validate(n, q)
    return all(o % 4 != 2 for _, o, _ in prime_evidence(n, q))


def splits_by_order_restated(n: int, q: int) -> bool:
    """Either ord_r(q) is odd or ord_r(q^2) is even, for every prime r | n."""
    _validate(n, q)
    return all(mult_order(q, r) % 2 == 1 or mult_order(q * q, r) % 2 == 0
               for r, _ in factorize(n))


def coprime_to_S_q(n: int, q: int) -> bool:
    """gcd(n, q^(2i-1) + 1) = 1 for all i >= 1, checked over one period of q mod n."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")
    if n == 1:
        return True
    period = mult_order(q, n)
    x = q % n
    q2 = q * q % n
    for _ in range(period):
        if math.gcd(n, x + 1) != 1:
            return False
        x = x * q2 % n
    return True


def divides_some_q_power_plus_one(r: int, q: int) -> bool:
    """r | q^k + 1 for some k >= 1, i.e. ord_r(q) is even (r prime, r != p)."""
    return mult_order(q, r) % 2 == 0


def duadic_exists(n: int, q: int) -> bool:
    """Duadic codes of length n over GF(q) exist iff q is a square mod n."""
    _validate(n, q)
    return is_square_mod(q, n)


def hsd_extended_exists(n: int, q: int) -> bool:
    return splits_by_mu_minus_q(n, q)


def general_multiplier_splits(n: int, q: int, t: int) -> bool:
    """Whether mu_t splits n, via gcd(n, q^(2i) - t) = 1 over one period.

    Needs t^2 to be a power of q^2 mod n so that mu_t^2 fixes every coset.
    """
    _validate(n, q)
    if math.gcd(t, n) != 1:
        raise MultiplierPreconditionError(f"multiplier {t} is not a unit mod {n}")
    if n == 1:
        return True
    q2 = q * q % n
    period = mult_order(q2, n)
    powers = []
    x = 1
    for _ in range(period):
        powers.append(x)
        x = x * q2 % n
    if t * t % n not in powers:
        raise MultiplierPreconditionError(
            f"{t}^2 is not a power of {q}^2 mod {n}; mu_{t} need not pair the cosets")
    return all(math.gcd(n, (y - t) % n) == 1 for y in powers)


@dataclass(frozen=True)
class LengthVerdict:
    n: int
    q: int
    splits_by_mu_minus_q: bool
    duadic_exists: bool
    hsd_extended_exists: bool
    evidence: list[tuple[int, int, int]]

    def to_row(self) -> list:
        ev = ";".join(f"{r}:{o}:{m}" for r, o, m in self.evidence)
        return [self.n, int(self.splits_by_mu_minus_q), int(self.duadic_exists), ev]


def classify(n: int, q: int) -> LengthVerdict:
    _validate(n, q)
    ev = prime_evidence(n, q)
    splits = all(m != 2 for _, _, m in ev)
    return LengthVerdict(n, q, splits, is_square_mod(q, n), splits, ev)
