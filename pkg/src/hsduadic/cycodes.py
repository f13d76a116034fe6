"""Cyclic codes of length n over GF(q**2), carried by their defining sets.

Polynomials over the coefficient field are lists of element indices, low
degree first, with no trailing zeros ([] is the zero polynomial).  The
arithmetic goes through the lookup tables of `FieldTables`.
"""

from __future__ import annotations

import functools
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import FieldSpec, FieldTables, build_field, root_field
from .modarith import CosetPartition, apply_multiplier, coset_pairing, cyclotomic_cosets

Poly = list[int]
Matrix = list[list[int]]

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"


# ---------------------------------------------------------------------------
# polynomial arithmetic over a table field


def trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(T: FieldTables, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = T.add[out[i]][c]
    return trim(out)


def psub(T: FieldTables, a: Poly, b: Poly) -> Poly:
    return padd(T, a, [T.neg[c] for c in b])


def pscale(T: FieldTables, c: int, a: Poly) -> Poly:
    row = T.mul[c]
    return trim([row[x] for x in a])


def pmul(T: FieldTables, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = T.add, T.mul
    for i, ai in enumerate(a):
        if ai:
            row = mul[ai]
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add[out[i + j]][row[bj]]
    return trim(out)


def pdivmod(T: FieldTables, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lead = T.inv[b[-1]]
    quo = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        c = T.mul[r[-1]][inv_lead]
        shift = len(r) - 1 - db
        quo[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = T.sub(r[shift + i], T.mul[c][bi])
        trim(r)
    return trim(quo), r


def pmonic(T: FieldTables, a: Poly) -> Poly:
    return pscale(T, T.inv[a[-1]], a) if a else []


def pextgcd(T: FieldTables, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = list(a), list(b)
    u0, u1, v0, v1 = [1], [], [], [1]
    while r1:
        quo, rem = pdivmod(T, r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, psub(T, u0, pmul(T, quo, u1))
        v0, v1 = v1, psub(T, v0, pmul(T, quo, v1))
    c = T.inv[r0[-1]]
    return pscale(T, c, r0), pscale(T, c, u0), pscale(T, c, v0)


def fold(T: FieldTables, a: Poly, n: int) -> Poly:
    """Reduce modulo x**n - 1 into a dense length-n coefficient list."""
    out = [0] * n
    for i, c in enumerate(a):
        if c:
            out[i % n] = T.add[out[i % n]][c]
    return out


def mulmod_xn1(T: FieldTables, a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    add, mul = T.add, T.mul
    for i, ai in enumerate(a):
        if ai:
            row = mul[ai]
            for j, bj in enumerate(b):
                if bj:
                    k = (i + j) % n
                    out[k] = add[out[k]][row[bj]]
    return out


def multiplier_poly(a: Sequence[int], mult: int, n: int) -> list[int]:
    """f(x) -> f(x**mult) mod x**n - 1 on a dense length-n vector."""
    out = [0] * n
    for i, c in enumerate(a):
        if c:
            out[i * mult % n] = c
    return out


def conj_poly(T: FieldTables, a: Sequence[int]) -> list[int]:
    return [T.conj[c] for c in a]


def reciprocal(a: Poly) -> Poly:
    return trim(list(reversed(trim(list(a)))))


def dense(a: Poly, n: int) -> list[int]:
    return list(a) + [0] * (n - len(a))


# ---------------------------------------------------------------------------
# row-space linear algebra


def rref(T: FieldTables, rows: Iterable[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    M = [list(r) for r in rows]
    pivots: list[int] = []
    if not M:
        return [], pivots
    ncols = len(M[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = T.inv[M[r][col]]
        M[r] = [T.mul[inv][x] for x in M[r]]
        prow = M[r]
        for i in range(len(M)):
            if i != r and M[i][col]:
                c = T.neg[M[i][col]]
                cm = T.mul[c]
                M[i] = [T.add[x][cm[y]] for x, y in zip(M[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(T: FieldTables, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(T, rows)[0])


def nullspace(T: FieldTables, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of {u : M u = 0}."""
    R, pivots = rref(T, rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = T.neg[row[f]]
        basis.append(v)
    return basis


def same_row_space(T: FieldTables, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    return rref(T, A)[0] == rref(T, B)[0]


def inner(T: FieldTables, u: Sequence[int], w: Sequence[int], form: str = HERMITIAN) -> int:
    """u . w (Euclidean) or u . conj(w) (Hermitian), as an element index."""
    acc = 0
    for a, b in zip(u, w):
        if a and b:
            acc = T.add[acc][T.mul[a][T.conj[b] if form == HERMITIAN else b]]
    return acc


def gram(T: FieldTables, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
         form: str = HERMITIAN) -> Matrix:
    """A . conj(B)^T (Hermitian) or A . B^T (Euclidean)."""
    return [[inner(T, a, b, form) for b in B] for a in A]


def brute_force_dual(T: FieldTables, G: Sequence[Sequence[int]], length: int,
                     form: str = HERMITIAN) -> Matrix:
    """Basis of the dual of the row space of G, by a null-space computation."""
    _check_form(form)
    rows = [[T.conj[x] for x in r] for r in G] if form == HERMITIAN else [list(r) for r in G]
    rows = [r for r in rows if any(r)]
    if not rows:
        return [[int(i == j) for j in range(length)] for i in range(length)]
    return nullspace(T, rows, length)


def _check_form(form: str) -> None:
    if form not in (EUCLIDEAN, HERMITIAN):
        raise ValueError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------


class _Ring:
    """Shared per-(field, n) data: tables, cosets, root of unity, minimal polys."""

    def __init__(self, F: FieldSpec, n: int):
        self.F = F
        self.n = n
        self.T = F.tables
        self.cosets = cyclotomic_cosets(n, F.size)

    @functools.cached_property
    def root(self):
        return root_field(self.n, self.F)

    @functools.lru_cache(maxsize=None)
    def minimal_poly(self, rep: int) -> Poly:
        """prod over the coset of rep of (x - alpha**i), pulled back to GF(q^2)."""
        rf = self.root
        R = rf.field
        poly = [R.one()]
        for i in self.cosets.coset_of(rep):
            root = rf.alpha_powers[i]
            nxt = [R.zero()] * (len(poly) + 1)
            for k, c in enumerate(poly):
                nxt[k + 1] = nxt[k + 1] + c
                nxt[k] = nxt[k] - c * root
            poly = nxt
        out = []
        for c in poly:
            z = rf.embedding.preimage(c)
            if z is None:
                raise AssertionError(
                    f"minimal polynomial coefficient {c} does not lie in {self.F}")
            out.append(z.index)
        return out

    def evaluate(self, a: Sequence[int], i: int):
        """a(alpha**i) in the root field."""
        rf = self.root
        emb = rf.embedding
        z = rf.alpha_powers[i % self.n]
        acc = rf.field.zero()
        for c in reversed(list(a)):
            acc = acc * z + emb(self.F.from_index(c))
        return acc

    def zero_set(self, a: Sequence[int]) -> frozenset[int]:
        """{i : a(alpha**i) = 0}, probing one point per coset."""
        out = set()
        for c in self.cosets.cosets:
            if self.evaluate(a, c[0]).is_zero():
                out.update(c)
        return frozenset(out)


@functools.lru_cache(maxsize=None)
def ring(F: FieldSpec, n: int) -> _Ring:
    if n < 1:
        raise ValueError("length must be positive")
    if math.gcd(n, F.p) != 1:
        raise ValueError(f"length {n} is not coprime to the characteristic {F.p}")
    return _Ring(F, n)


class CyclicCode:
    """Cyclic code of length n over F, given by its defining set T."""

    def __init__(self, F: FieldSpec, n: int, T: Iterable[int]):
        self.F = F
        self.n = n
        self.T = frozenset(t % n for t in T)
        self._ring = ring(F, n)
        if not self._ring.cosets.is_union_of_cosets(self.T):
            raise ValueError(f"defining set {sorted(self.T)} is not a union of "
                             f"{F.size}-cyclotomic cosets mod {n}")

    # identity ----------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, CyclicCode) and self.F == other.F
                and self.n == other.n and self.T == other.T)

    def __hash__(self):
        return hash((self.F, self.n, self.T))

    def __repr__(self):
        return f"CyclicCode({self.F}, n={self.n}, T={sorted(self.T)})"

    @property
    def dim(self) -> int:
        return self.n - len(self.T)

    @property
    def tables(self) -> FieldTables:
        return self._ring.T

    @property
    def q(self) -> int:
        return self.F.q

    # lazily materialized data --------------------------------------------------
    @functools.cached_property
    def generator_poly(self) -> Poly:
        T = self.tables
        g: Poly = [1]
        for c in self._ring.cosets.cosets:
            if c[0] in self.T:
                g = pmul(T, g, self._ring.minimal_poly(c[0]))
        return g

    @functools.cached_property
    def idempotent(self) -> list[int]:
        """Generating idempotent as a dense length-n vector.

        With g the generator and h = (x^n - 1)/g, u*g + v*h = 1 and the
        idempotent is u*g: zero at the roots of g, one at the roots of h.
        """
        T, n = self.tables, self.n
        if not self.T:
            return dense([1], n)
        if len(self.T) == n:
            return [0] * n
        g = self.generator_poly
        h, rem = pdivmod(T, xn_minus_1(T, n), g)
        assert not rem
        one, u, _ = pextgcd(T, g, h)
        assert one == [1]
        return fold(T, pmul(T, u, g), n)

    @functools.cached_property
    def generator_matrix(self) -> Matrix:
        g = self.generator_poly
        k = self.n - (len(g) - 1)
        return [[0] * i + g + [0] * (self.n - len(g) - i) for i in range(k)]

    # derived codes -------------------------------------------------------------
    def _with(self, T: Iterable[int]) -> "CyclicCode":
        return CyclicCode(self.F, self.n, T)

    def mu(self, a: int) -> "CyclicCode":
        """The permuted code C mu_a; its defining set is a^{-1} T."""
        return self._with(apply_multiplier(self.T, pow(a, -1, self.n), self.n))

    def contains(self, word: Sequence[int]) -> bool:
        _, r = pdivmod(self.tables, trim(list(word)), self.generator_poly)
        return not r

    def __contains__(self, word) -> bool:
        return self.contains(word)

    def is_odd_like(self) -> bool:
        return 0 not in self.T

    def to_record(self) -> dict:
        return {
            "p": self.F.p,
            "t": self.F.d // 2,
            "n": self.n,
            "T": sorted(self.T),
            "modulus": list(self.F.modulus),
        }

    @classmethod
    def from_record(cls, rec: dict) -> "CyclicCode":
        F = build_field(rec["p"], 2 * rec["t"])
        if list(F.modulus) != list(rec["modulus"]):
            raise ValueError("record was written with a different field modulus")
        return cls(F, rec["n"], rec["T"])

    def generator_matrix_csv(self) -> str:
        """One row per generator, each entry its GF(p) coefficients joined by ':'."""
        buf = io.StringIO()
        for row in self.generator_matrix:
            cells = [":".join(str(c) for c in self.F.from_index(x).coeffs) for x in row]
            buf.write(",".join(cells) + "\n")
        return buf.getvalue()


def xn_minus_1(T: FieldTables, n: int) -> Poly:
    return [T.neg[1]] + [0] * (n - 1) + [1]


def code_from_defining_set(F: FieldSpec, n: int, T: Iterable[int]) -> CyclicCode:
    return CyclicCode(F, n, T)


def code_from_generator(F: FieldSpec, n: int, gen: Sequence[int]) -> CyclicCode:
    """The cyclic code generated (as an ideal) by any polynomial."""
    R = ring(F, n)
    g, _, _ = pextgcd(R.T, trim(list(gen)), xn_minus_1(R.T, n))
    return CyclicCode(F, n, R.zero_set(g))


def full_space(F: FieldSpec, n: int) -> CyclicCode:
    return CyclicCode(F, n, ())


def zero_code(F: FieldSpec, n: int) -> CyclicCode:
    return CyclicCode(F, n, range(n))


def j_bar(F: FieldSpec, n: int) -> list[int]:
    """(1/n)(1 + x + ... + x^{n-1}), the repetition-code idempotent."""
    T = F.tables
    c = T.inv[T.scalar(n)]
    return [c] * n


def conjugate_code(C: CyclicCode) -> CyclicCode:
    """Coordinatewise conjugate code, found from the conjugated idempotent."""
    T = C.tables
    e_bar = conj_poly(T, C.idempotent)
    return CyclicCode(C.F, C.n, C._ring.zero_set(e_bar))


def hermitian_dual(C: CyclicCode) -> CyclicCode:
    """Defining set N minus (-q)T."""
    mq = apply_multiplier(C.T, -C.q, C.n)
    return C._with(set(range(C.n)) - mq)


def euclidean_dual(C: CyclicCode) -> CyclicCode:
    neg = apply_multiplier(C.T, -1, C.n)
    return C._with(set(range(C.n)) - neg)


def dual(C: CyclicCode, form: str = HERMITIAN) -> CyclicCode:
    _check_form(form)
    return hermitian_dual(C) if form == HERMITIAN else euclidean_dual(C)


def hermitian_dual_idempotent(C: CyclicCode) -> list[int]:
    """1 - e(x) mu_{-q}."""
    T = C.tables
    e = multiplier_poly(C.idempotent, -C.q, C.n)
    one = dense([1], C.n)
    return [T.sub(a, b) for a, b in zip(one, e)]


def even_like_subcode(C: CyclicCode) -> CyclicCode:
    return C._with(C.T | {0})


def _same_ambient(C1: CyclicCode, C2: CyclicCode) -> None:
    if C1.n != C2.n or C1.F != C2.F:
        raise ValueError("codes have different lengths or fields")


def intersect(C1: CyclicCode, C2: CyclicCode) -> CyclicCode:
    _same_ambient(C1, C2)
    return C1._with(C1.T | C2.T)


def code_sum(C1: CyclicCode, C2: CyclicCode) -> CyclicCode:
    _same_ambient(C1, C2)
    return C1._with(C1.T & C2.T)


def is_subcode(C1: CyclicCode, C2: CyclicCode) -> bool:
    """Whether C1 is contained in C2."""
    _same_ambient(C1, C2)
    return C2.T <= C1.T


def cyclic_complement(C: CyclicCode) -> CyclicCode:
    return C._with(set(range(C.n)) - C.T)


def poly_orthogonality_check(T: FieldTables, a: Sequence[int], b: Sequence[int], n: int,
                             form: str = HERMITIAN) -> bool:
    """Whether a is orthogonal to b and all its cyclic shifts.

    Tested as a(x) * conj(b*(x)) = 0 in R_n, b* the reciprocal of b.
    """
    _check_form(form)
    b = trim(list(b))
    if not b:
        return True
    bs = reciprocal(b)
    if form == HERMITIAN:
        bs = conj_poly(T, bs)
    return not any(mulmod_xn1(T, list(a), bs, n))


def shiftwise_orthogonal(T: FieldTables, a: Sequence[int], b: Sequence[int], n: int,
                         form: str = HERMITIAN) -> bool:
    a, b = dense(trim(list(a)), n), dense(trim(list(b)), n)
    return all(inner(T, a, b[-k:] + b[:-k] if k else b, form) == 0 for k in range(n))


def is_hermitian_self_orthogonal(C: CyclicCode) -> bool:
    """Fixed cosets of mu_{-q} inside T, and one coset of each swapped pair."""
    part = C._ring.cosets
    pairing = coset_pairing(part, -C.q)
    for rep in pairing.fixed:
        if rep not in C.T:
            return False
    return all(a in C.T or b in C.T for a, b in pairing.swapped)


def is_self_orthogonal_brute(C: CyclicCode, form: str = HERMITIAN) -> bool:
    G = C.generator_matrix
    return all(x == 0 for row in gram(C.tables, G, G, form) for x in row)


def cosets_of(C: CyclicCode) -> CosetPartition:
    return C._ring.cosets
