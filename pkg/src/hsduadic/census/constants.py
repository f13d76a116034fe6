"""Growth constants of the square-mod-n and quadratic-form counts.

For a non-square a with chi the Kronecker character of disc(a) (a if
a = 0, 1 mod 4, else 4a):

  kronecker convention   pi G^2 = phi(|a|)/|a| L(1, chi) prod_{chi(p)=-1} (1 - p^-2)
  odd-prime convention   the same with p = 2 dropped from the product and an
                         extra factor (2 - chi(2)) when a is odd
  J(D)                   pi J^2 = phi(|D|)/|D| L(1, chi_D) prod_{chi(p)=-1} (1 - p^-2)^-1

The odd-prime form is the constant of G_a(x) when g_a ignores p = 2, which
is what makes g_a agree with the square test.  For even a both agree.  The
Kronecker form is the constant of the Kronecker-convention count only when
a is not 3 mod 4; for a = 3 mod 4 its factor at p = 2 is wrong.

L(1, chi) is evaluated exactly from the digamma function; a partial sum
over whole periods and (for D < 0) the class number formula serve as
independent checks.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import digamma
from scipy.special import zeta as hurwitz_zeta

from ..modarith import euler_phi, factorize, kronecker, prime_divisors
from .functions import CONVENTIONS, KRONECKER, ODD_PRIMES, class_number, check_discriminant, is_perfect_square
from .sieve import small_primes, symbol_on_primes

DEFAULT_P = 10**6
DEFAULT_N = 10**6


def character_modulus(a: int) -> int:
    """Discriminant whose Kronecker symbol agrees with (a/p) on odd p."""
    return a if a % 4 in (0, 1) else 4 * a


def character_values(d: int) -> np.ndarray:
    """chi(r) = (d/r) for r = 0..|d|-1 (one full period)."""
    k = abs(d)
    return np.array([kronecker(d, r) for r in range(k)], dtype=np.int64)


def L1_digamma(d: int) -> float:
    """L(1, (d/.)) = -(1/k) sum_r chi(r) psi(r/k), valid because chi sums to 0."""
    k = abs(d)
    chi = character_values(d)
    if chi.sum() != 0:
        raise ValueError(f"character of {d} is principal")
    r = np.arange(1, k)
    return float(-np.sum(chi[1:] * digamma(r / k)) / k)


def L1_partial(d: int, N: int = DEFAULT_N) -> tuple[float, float]:
    """Partial sum over whole periods up to about N, with an Abel-summation tail bound."""
    k = abs(d)
    chi = character_values(d)
    periods = max(1, N // k)
    M = periods * k
    n = np.arange(1, M + 1)
    s = float(np.sum(chi[n % k] / n))
    # |sum_{n > M} chi(n)/n| <= 2 max|A(t)| / (M + 1), A the partial character sums
    A = np.abs(np.cumsum(chi[np.r_[1:k, 0]])).max()
    return s, 2.0 * A / (M + 1)


def L1_class_number(D: int) -> float:
    """L(1, chi_D) = 2 pi h(D) / (w sqrt|D|) for a negative discriminant."""
    check_discriminant(D)
    w = {-3: 6, -4: 4}.get(D, 2)
    return 2 * math.pi * class_number(D) / (w * math.sqrt(-D))


def minus_prime_product(a: int, P: int, skip_two: bool = False) -> tuple[float, float]:
    """prod over p <= P with (a/p) = -1 of (1 - p^-2), plus a bound on the tail.

    (a/p) is the Kronecker symbol, so p = 2 enters when a = 3, 5 mod 8.
    The missing factors lie in [prod_{p > P}(1 - p^-2), 1], and that lower
    end is at least 1 - 1/P.
    """
    ps = small_primes(P)
    s = symbol_on_primes(a, ps, kronecker(a, 2))
    sel = s == -1
    if skip_two:
        sel &= ps != 2
    logp = np.sum(np.log1p(-1.0 / ps[sel].astype(float) ** 2))
    return float(math.exp(logp)), 1.0 / P


@dataclass(frozen=True)
class ConstantEstimate:
    a: int
    kind: str
    value: float
    error: float
    L1: float
    L1_series: float
    L1_series_bound: float
    euler_product: float
    P: int
    N: int

    def to_json(self) -> dict:
        return asdict(self)


def _estimate(a: int, kind: str, P: int, N: int) -> ConstantEstimate:
    if is_perfect_square(a):
        raise ValueError(f"{a} is a perfect square")
    d = character_modulus(a)
    L = L1_digamma(d)
    Ls, Lb = L1_partial(d, N)
    if abs(Ls - L) > Lb + 1e-9:
        raise AssertionError(f"L(1, chi_{d}): series {Ls} vs digamma {L} beyond bound {Lb}")
    phi_ratio = euler_phi(abs(a)) / abs(a)
    skip_two = kind == ODD_PRIMES
    E, tail = minus_prime_product(a, P, skip_two)
    if kind == "J":
        sq = phi_ratio * L / E
    else:
        sq = phi_ratio * L * E
        if kind == ODD_PRIMES and a % 2:
            sq *= 2 - kronecker(d, 2)
    value = math.sqrt(sq / math.pi)
    # relative error of sq is at most tail (product) + Lb/L (the series only
    # cross-checks, digamma is exact to rounding); halve it for the root
    err = value * 0.5 * (tail / (1 - tail))
    return ConstantEstimate(a, kind, value, err, L, Ls, Lb, E, P, N)


def estimate_G_const(a: int, P: int = DEFAULT_P, N: int = DEFAULT_N,
                     convention: str = ODD_PRIMES) -> ConstantEstimate:
    """Constant G with G_a(x) ~ G x / sqrt(log x)."""
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    return _estimate(a, convention, P, N)


def estimate_J(D: int, P: int = DEFAULT_P, N: int = DEFAULT_N) -> ConstantEstimate:
    """Constant J with B_D(x) ~ J x / sqrt(log x)."""
    check_discriminant(D)
    return _estimate(D, "J", P, N)


def estimate_G_D(D: int, P: int = DEFAULT_P, N: int = DEFAULT_N) -> ConstantEstimate:
    """The G-constant of a negative discriminant in the Kronecker convention."""
    check_discriminant(D)
    return _estimate(D, KRONECKER, P, N)


# ---------------------------------------------------------------------------
# the full product over (d/p) = -1 through prime zeta functions


def _L_real(s: float, d: int) -> float:
    """L(s, (d/.)) for s > 1 via Hurwitz zeta, or a direct sum once s is large."""
    k = abs(d)
    chi = character_values(d)
    if s > 30:
        n = np.arange(1, 60)
        return float(np.sum(chi[n % k] * n.astype(float) ** -s))
    r = np.arange(1, k)
    return float(np.sum(chi[1:] * hurwitz_zeta(s, r / k)) * k ** -s)


def _zeta(s: float) -> float:
    if s > 30:
        n = np.arange(1, 60)
        return float(np.sum(n.astype(float) ** -s))
    return float(hurwitz_zeta(s, 1))


def _mobius(m: int) -> int:
    f = factorize(m)
    return 0 if any(e > 1 for _, e in f) else (-1) ** len(f)


def _prime_sum(s: float, d: int, twisted: bool) -> float:
    """sum_p p^-s (or sum_p chi(p) p^-s) by Moebius inversion of log zeta / log L."""
    ramified = prime_divisors(abs(d))
    total = 0.0
    m = 1
    while 2.0 ** (-m * s) > 1e-18:
        mu = _mobius(m)
        if mu:
            ms = m * s
            if not twisted:
                val = math.log(_zeta(ms))
            elif m % 2:
                val = math.log(_L_real(ms, d))
            else:
                # chi^m is principal mod |d|
                val = math.log(_zeta(ms)) + sum(math.log1p(-p ** -ms) for p in ramified)
            total += mu * val / m
        m += 1
    return total


def minus_prime_product_exact(d: int) -> float:
    """prod over all p with (d/p) = -1 of (1 - p^-2), without truncation."""
    ramified = prime_divisors(abs(d))
    log_prod = 0.0
    k = 1
    while 2.0 ** (-2 * k) > 1e-18:
        s = 2 * k
        P = _prime_sum(s, d, False)
        Pchi = _prime_sum(s, d, True)
        ram = sum(p ** -s for p in ramified)
        minus = (P - Pchi - ram) / 2
        log_prod -= minus / k
        k += 1
    return math.exp(log_prod)
