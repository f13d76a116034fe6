"""Exact arithmetic in GF(p**d) for the fields the codes live in.

A field is GF(p)[x]/(f) with f the least monic irreducible of degree d,
where polynomials are compared as coefficient tuples (c0, c1, ..., c_{d-1})
with the constant term most significant.  Elements are coefficient tuples,
low degree first.  The *index* of an element is sum(c_i * p**i); "least"
element always means least index.

GF(q**2) is a field with even degree d = 2t, so q = p**t is read off the
field itself.  The root field for length n is GF(q**(2m)) with
m = ord_n(q**2); it is tied to GF(q**2) by an explicit Embedding rather
than by compatible (Conway) moduli.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .modarith import factorize, is_prime, mult_order

# ---------------------------------------------------------------------------
# GF(p)[x] helpers on plain lists (low degree first, no trailing zeros)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            if fi:
                a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pmod([c % p for c in out], f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, f, p)
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Ben-Or test: no factor of degree <= deg(f)/2."""
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    h = [0, 1]
    for _ in range(d // 2):
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


def _least_irreducible(p: int, d: int) -> tuple[int, ...]:
    if d == 1:
        return (0, 1)
    # constant term is the most significant digit of the search order
    for k in range(p ** (d - 1), p**d):
        digits = []
        for _ in range(d):
            k, r = divmod(k, p)
            digits.append(r)
        coeffs = digits[::-1] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {d} over GF({p})")


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    d: int
    modulus: tuple[int, ...]
    _reduce: np.ndarray = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return self.p**self.d

    @property
    def q(self) -> int:
        """q for a field viewed as GF(q**2)."""
        if self.d % 2:
            raise ValueError(f"GF({self.p}^{self.d}) is not of the form GF(q^2)")
        return self.p ** (self.d // 2)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.d, self.modulus) == (other.p, other.d, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.d, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.d})"

    # element construction -------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.owner != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.d - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.d:
            raise ValueError("too many coefficients")
        return FieldElement(self, coeffs + (0,) * (self.d - len(coeffs)))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def gen(self) -> "FieldElement":
        """The class of x (the constant 0 when d == 1)."""
        return self((0, 1)) if self.d > 1 else self(0)

    def from_index(self, k: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.d):
            k, r = divmod(k, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        for k in range(self.size):
            yield self.from_index(k)

    # raw coefficient arithmetic --------------------------------------------
    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        c = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        d = self.d
        low = c[:d]
        if d > 1:
            low = low + c[d:] @ self._reduce
        return tuple(int(v) for v in low % self.p)

    def frobenius_matrix(self, power: int) -> np.ndarray:
        """Matrix of z -> z**power on the coefficient basis (power a power of p)."""
        cols = [FieldElement(self, tuple(int(i == j) for i in range(self.d))) ** power
                for j in range(self.d)]
        return np.array([c.coeffs for c in cols], dtype=np.int64).T

    @functools.cached_property
    def tables(self) -> "FieldTables":
        return FieldTables.build(self)


@functools.lru_cache(maxsize=None)
def build_field(p: int, d: int) -> FieldSpec:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be positive")
    mod = _least_irreducible(p, d)
    # rows: x**(d+k) mod f for k = 0 .. d-2
    red = np.zeros((max(d - 1, 0), d), dtype=np.int64)
    cur = [(-c) % p for c in mod[:d]]
    for k in range(d - 1):
        red[k] = cur
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [(cur[i] - top * mod[i]) % p for i in range(d)]
    return FieldSpec(p, d, mod, red)


def gf_q2(q: int) -> FieldSpec:
    """GF(q**2) for a prime power q."""
    (p, t), = factorize(q)
    return build_field(p, 2 * t)


class FieldElement:
    __slots__ = ("owner", "coeffs")

    def __init__(self, owner: FieldSpec, coeffs: tuple[int, ...]):
        self.owner = owner
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            k = k * self.owner.p + c
        return k

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.owner(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.owner.p
        return FieldElement(self.owner, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.owner.p
        return FieldElement(self.owner, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.owner, self.owner._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.owner.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.owner.size - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.owner(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.owner == other.owner and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.owner, self.coeffs))

    def __repr__(self):
        terms = [f"{c}" if i == 0 else (f"{c}*x^{i}" if c != 1 else f"x^{i}")
                 for i, c in enumerate(self.coeffs) if c]
        return f"{self.owner}({' + '.join(terms) or '0'})"

    def order(self) -> int:
        """Multiplicative order."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        t = self.owner.size - 1
        for r, _ in factorize(t):
            while t % r == 0 and (self ** (t // r)).coeffs == self.owner.one().coeffs:
                t //= r
        return t


def conj(z: FieldElement) -> FieldElement:
    """The involution z -> z**q of GF(q**2)."""
    return z ** z.owner.q


def norm_to_subfield(z: FieldElement) -> FieldElement:
    return z ** (z.owner.q + 1)


def is_gamma(gamma: FieldElement, n: int) -> bool:
    """Whether 1 + gamma**(q+1) * n = 0."""
    return (1 + gamma ** (gamma.owner.q + 1) * gamma.owner(n)).is_zero()


def gamma_roots(n: int, F: FieldSpec) -> list[FieldElement]:
    """All gamma in GF(q**2) with 1 + gamma**(q+1) * n = 0, by index."""
    if n % F.p == 0:
        raise ValueError(f"gcd({n}, {F.p}) != 1")
    return [z for z in F.elements() if is_gamma(z, n)]


def solve_gamma(n: int, F: FieldSpec) -> FieldElement:
    """Least gamma in GF(q**2) with 1 + gamma**(q+1) * n = 0."""
    if n % F.p == 0:
        raise ValueError(f"gcd({n}, {F.p}) != 1")
    for z in F.elements():
        if is_gamma(z, n):
            return z
    raise AssertionError(f"no gamma for n={n} in {F}: field arithmetic is broken")


# ---------------------------------------------------------------------------
# lookup tables for the small coefficient field GF(q**2)


@dataclass(frozen=True)
class FieldTables:
    """Integer-indexed operation tables; index = FieldElement.index."""

    size: int
    p: int
    add: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    inv: list[int]
    conj: list[int] | None

    @classmethod
    def build(cls, F: FieldSpec) -> "FieldTables":
        els = list(F.elements())
        S = len(els)
        add = [[(a + b).index for b in els] for a in els]
        mul = [[(a * b).index for b in els] for a in els]
        neg = [(-a).index for a in els]
        inv = [0] + [a.inverse().index for a in els[1:]]
        cj = [conj(a).index for a in els] if F.d % 2 == 0 else None
        return cls(S, F.p, add, mul, neg, inv, cj)

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def scalar(self, k: int) -> int:
        """Index of the integer k viewed in the prime field."""
        return k % self.p


# ---------------------------------------------------------------------------
# root fields and embeddings


def _cyclotomic_value(k: int, b: int) -> int:
    """Phi_k(b) via the Moebius product over the divisors of k."""
    num, den = 1, 1
    for e in range(1, k + 1):
        if k % e:
            continue
        m = k // e
        mu = _moebius(m)
        if mu == 1:
            num *= b**e - 1
        elif mu == -1:
            den *= b**e - 1
    return num // den


def _moebius(m: int) -> int:
    f = factorize(m)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


@functools.lru_cache(maxsize=None)
def group_order_primes(p: int, d: int) -> tuple[int, ...]:
    """Primes dividing p**d - 1, via its cyclotomic factors."""
    primes: set[int] = set()
    for k in range(1, d + 1):
        if d % k == 0:
            primes.update(r for r, _ in factorize(_cyclotomic_value(k, p)))
    return tuple(sorted(primes))


@functools.lru_cache(maxsize=None)
def primitive_element(F: FieldSpec) -> FieldElement:
    """Least element (by index) generating the multiplicative group."""
    order = F.size - 1
    exps = [order // r for r in group_order_primes(F.p, F.d)]
    one = F.one().coeffs
    for k in range(1, F.size):
        g = F.from_index(k)
        if all((g**e).coeffs != one for e in exps):
            return g
    raise AssertionError("multiplicative group has no generator")


@dataclass(frozen=True, eq=False)
class Embedding:
    source: FieldSpec
    target: FieldSpec
    image_of_gen: FieldElement

    def __call__(self, z: FieldElement) -> FieldElement:
        if z.owner != self.source:
            raise ValueError("element not in the source field")
        acc = self.target.zero()
        for c in reversed(z.coeffs):
            acc = acc * self.image_of_gen + c
        return acc

    @functools.cached_property
    def _inverse(self) -> dict[tuple[int, ...], FieldElement]:
        return {self(z).coeffs: z for z in self.source.elements()}

    def preimage(self, w: FieldElement) -> FieldElement | None:
        """Source element mapping to w, or None if w is outside the image."""
        return self._inverse.get(w.coeffs)


def _poly_eval(coeffs, z: FieldElement) -> FieldElement:
    acc = z.owner.zero()
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


@functools.lru_cache(maxsize=None)
def embed(source: FieldSpec, target: FieldSpec) -> Embedding:
    """Embedding of a subfield, sending x to the least root of its modulus."""
    if source.p != target.p or target.d % source.d:
        raise ValueError(f"{source} is not a subfield of {target}")
    if source == target:
        return Embedding(source, target, target.gen())
    if source.d == 1:
        return Embedding(source, target, target.zero())
    h = primitive_element(target) ** ((target.size - 1) // (source.size - 1))
    roots = []
    y = target.one()
    for _ in range(source.size - 1):
        if _poly_eval(source.modulus, y).is_zero():
            roots.append(y)
        y = y * h
    if not roots:
        raise AssertionError(f"modulus of {source} has no root in {target}")
    return Embedding(source, target, min(roots, key=lambda r: r.index))


@dataclass(frozen=True, eq=False)
class RootField:
    n: int
    base: FieldSpec
    field: FieldSpec
    embedding: Embedding
    alpha: FieldElement

    @functools.cached_property
    def alpha_powers(self) -> list[FieldElement]:
        out = [self.field.one()]
        for _ in range(self.n - 1):
            out.append(out[-1] * self.alpha)
        return out


@functools.lru_cache(maxsize=None)
def root_field(n: int, F: FieldSpec) -> RootField:
    """Smallest extension of F holding a primitive n-th root of unity alpha.

    alpha = g**((Q-1)/n) for g the least primitive element of GF(Q).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(n, F.p) != 1:
        raise ValueError(f"gcd({n}, {F.p}) != 1")
    m = mult_order(F.size, n)
    R = build_field(F.p, F.d * m)
    emb = embed(F, R)
    if n == 1:
        alpha = R.one()
    else:
        alpha = primitive_element(R) ** ((R.size - 1) // n)
    return RootField(n, F, R, emb, alpha)
