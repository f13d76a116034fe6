"""Splittings, duadic pairs, the gamma parity extension and the splitting table."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import cycodes as cy
from .cycodes import CyclicCode
from .gf import FieldElement, FieldSpec, gf_q2, is_gamma, solve_gamma
from .modarith import CosetPartition, apply_multiplier, cyclotomic_cosets, is_prime


@dataclass(frozen=True)
class Splitting:
    n: int
    q: int
    b: int
    S1: frozenset[int]
    S2: frozenset[int]

    def reps(self, which: int = 1) -> list[int]:
        """Representatives of the q^2-cosets making up S1 (or S2)."""
        part = cyclotomic_cosets(self.n, self.q * self.q)
        S = self.S1 if which == 1 else self.S2
        return sorted({part.coset_of(s)[0] for s in S})

    def label(self) -> str:
        return " ∪ ".join(f"C{r}" for r in self.reps())


def _validate(n: int, q: int, b: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"length must be odd and positive, got {n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")
    if math.gcd(b, n) != 1:
        raise ValueError(f"multiplier {b} is not a unit mod {n}")


def _multiplier_orbits(part: CosetPartition, b: int) -> list[list[int]] | None:
    """Cycles of mu_b on the nonzero cosets (as rep lists); None if some cycle is odd."""
    n = part.n
    seen: set[int] = set()
    orbits = []
    for c in part.cosets[1:]:
        rep = c[0]
        if rep in seen:
            continue
        cyc = []
        r = rep
        while r not in seen:
            seen.add(r)
            cyc.append(r)
            r = part.coset_of(r * b)[0]
        if len(cyc) % 2:
            return None
        orbits.append(cyc)
    return orbits


def splitting_exists(n: int, q: int, b: int | None = None) -> bool:
    """Whether mu_b splits n over GF(q^2), without listing the splittings."""
    if b is None:
        b = -q
    _validate(n, q, b)
    if n == 1:
        return True
    return _multiplier_orbits(cyclotomic_cosets(n, q * q), b) is not None


def find_splittings(n: int, q: int, b: int | None = None,
                    limit: int | None = None) -> list[Splitting]:
    """All splittings of n by mu_b over GF(q^2), one per {S1, S2} pair.

    S1 is the side holding the coset of 1; the list is sorted by the
    representative lists of S1.  There are 2^(k-1) of them for k cycles,
    so `limit` caps how many are built (ValueError if exceeded).
    """
    if b is None:
        b = -q
    _validate(n, q, b)
    part = cyclotomic_cosets(n, q * q)
    if n == 1:
        return [Splitting(n, q, b, frozenset(), frozenset())]
    orbits = _multiplier_orbits(part, b)
    if orbits is None:
        return []
    # each cycle alternates between S1 and S2: two ways to colour it
    halves = [(cyc[0::2], cyc[1::2]) for cyc in orbits]
    first, rest = halves[0], halves[1:]
    if limit is not None and 2 ** len(rest) > limit:
        raise ValueError(f"{2 ** len(rest)} splittings exceed limit {limit}")
    results = []
    for mask in range(2 ** len(rest)):
        S1_reps = list(first[0])
        S2_reps = list(first[1])
        for k, (even, odd) in enumerate(rest):
            if mask >> k & 1:
                S1_reps += odd
                S2_reps += even
            else:
                S1_reps += even
                S2_reps += odd
        S1 = frozenset(s for r in S1_reps for s in part.coset_of(r))
        S2 = frozenset(s for r in S2_reps for s in part.coset_of(r))
        results.append(Splitting(n, q, b, S1, S2))
    results.sort(key=lambda s: s.reps())
    return results


def is_splitting(s: Splitting) -> bool:
    part = cyclotomic_cosets(s.n, s.q * s.q)
    return (
        s.S1 | s.S2 == frozenset(range(1, s.n))
        and not (s.S1 & s.S2)
        and part.is_union_of_cosets(s.S1)
        and part.is_union_of_cosets(s.S2)
        and apply_multiplier(s.S1, s.b, s.n) == s.S2
        and apply_multiplier(s.S2, s.b, s.n) == s.S1
    )


def quadratic_residues(n: int) -> frozenset[int]:
    return frozenset(x * x % n for x in range(1, n) if math.gcd(x, n) == 1)


def is_qr_splitting(s: Splitting) -> bool:
    if not is_prime(s.n):
        return False
    qr = quadratic_residues(s.n)
    return s.S1 == qr or s.S2 == qr


@dataclass(frozen=True)
class DuadicPair:
    splitting: Splitting
    F: FieldSpec
    C1: CyclicCode
    C2: CyclicCode
    D1: CyclicCode
    D2: CyclicCode


def duadic_from_splitting(s: Splitting, F: FieldSpec | None = None) -> DuadicPair:
    """Even-like pair with defining sets {0} u S_i; odd-like D_i with defining set S_i."""
    F = F or gf_q2(s.q)
    n = s.n
    return DuadicPair(
        s, F,
        CyclicCode(F, n, s.S1 | {0}),
        CyclicCode(F, n, s.S2 | {0}),
        CyclicCode(F, n, s.S1),
        CyclicCode(F, n, s.S2),
    )


def idempotent_identity_holds(P: DuadicPair) -> bool:
    """e1 + e2 + jbar = 1 in R_n."""
    T = P.C1.tables
    n = P.splitting.n
    jb = cy.j_bar(P.F, n)
    total = [T.add[T.add[a][b]][c] for a, b, c in zip(P.C1.idempotent, P.C2.idempotent, jb)]
    return total == cy.dense([1], n)


@dataclass(frozen=True)
class ExtendedCode:
    base: CyclicCode
    gamma: FieldElement
    generator_matrix: list[list[int]] = field(repr=False)

    @property
    def length(self) -> int:
        return self.base.n + 1


def extend_word(T, word: Sequence[int], gamma: int) -> list[int]:
    """Append c_inf = -gamma * sum(c)."""
    s = 0
    for c in word:
        s = T.add[s][c]
    return list(word) + [T.neg[T.mul[gamma][s]]]


def extend_odd_like(D: CyclicCode, gamma: FieldElement | None = None) -> ExtendedCode:
    if gamma is None:
        gamma = solve_gamma(D.n, D.F)
    if gamma.owner != D.F:
        raise ValueError("gamma is not in the code's field")
    if not is_gamma(gamma, D.n):
        raise ValueError(f"{gamma} does not satisfy 1 + gamma^(q+1) n = 0 for n={D.n}")
    T = D.tables
    g = gamma.index
    G = [extend_word(T, row, g) for row in D.generator_matrix]
    return ExtendedCode(D, gamma, G)


def is_hermitian_self_dual_extended(E: ExtendedCode) -> bool:
    T = E.base.tables
    G = E.generator_matrix
    if 2 * cy.rank(T, G) != E.length:
        return False
    return all(x == 0 for row in cy.gram(T, G, G) for x in row)


def are_hermitian_duals(E1: ExtendedCode, E2: ExtendedCode) -> bool:
    """Whether the two extended codes are each other's Hermitian dual."""
    T = E1.base.tables
    if cy.rank(T, E1.generator_matrix) + cy.rank(T, E2.generator_matrix) != E1.length:
        return False
    return all(x == 0 for row in cy.gram(T, E1.generator_matrix, E2.generator_matrix)
               for x in row)


def _hdual_agrees(C: CyclicCode) -> CyclicCode:
    """Hermitian dual by defining set, cross-checked against the null-space dual."""
    H = cy.hermitian_dual(C)
    brute = cy.brute_force_dual(C.tables, C.generator_matrix, C.n)
    if not cy.same_row_space(C.tables, brute, H.generator_matrix):
        raise AssertionError(f"defining-set dual of {C} disagrees with the null-space dual")
    return H


@dataclass(frozen=True)
class EquivalenceReport:
    swapped_by_mu_minus_q: tuple[bool, bool, bool, bool]
    fixed_by_mu_minus_q: tuple[bool, bool, bool, bool]

    @property
    def consistent(self) -> bool:
        return len(set(self.swapped_by_mu_minus_q)) == 1 and len(set(self.fixed_by_mu_minus_q)) == 1


def check_duadic_equivalences(P: DuadicPair) -> EquivalenceReport:
    """Evaluate both four-way equivalences for the pair.

    First block: C1^H = D1, C2^H = D2, C1 mu = C2, C2 mu = C1.
    Second block: C1^H = D2, C2^H = D1, C1 mu = C1, C2 mu = C2.
    (mu = mu_{-q}, ^H = Hermitian dual.)
    """
    q = P.splitting.q
    H1, H2 = _hdual_agrees(P.C1), _hdual_agrees(P.C2)
    m1, m2 = P.C1.mu(-q), P.C2.mu(-q)
    rep = EquivalenceReport(
        (H1 == P.D1, H2 == P.D2, m1 == P.C2, m2 == P.C1),
        (H1 == P.D2, H2 == P.D1, m1 == P.C1, m2 == P.C2),
    )
    if not rep.consistent:
        raise AssertionError(f"equivalences split for {P.splitting}: {rep}")
    return rep


# ---------------------------------------------------------------------------
# verification and the splitting table


@dataclass(frozen=True)
class SplitReport:
    n: int
    q: int
    splittings: list[Splitting]
    qr_flags: list[bool]
    self_dual: list[bool]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "n": self.n,
            "q": self.q,
            "splittings": [s.reps() for s in self.splittings],
            "qr_flags": self.qr_flags,
            "self_dual_verified": bool(self.splittings) and all(self.self_dual),
        }


def verify_splitting(s: Splitting, F: FieldSpec | None = None) -> bool:
    """Both gamma-extended odd-like codes of the splitting are Hermitian self-dual."""
    P = duadic_from_splitting(s, F)
    return all(is_hermitian_self_dual_extended(extend_odd_like(D)) for D in (P.D1, P.D2))


def split_report(n: int, q: int, verify: bool = True) -> SplitReport:
    sp = find_splittings(n, q)
    flags = [is_qr_splitting(s) for s in sp]
    sd = [verify_splitting(s) for s in sp] if verify else []
    return SplitReport(n, q, sp, flags, sd)


DEFAULT_Q = (3, 4, 5)


def table1(n_values: Iterable[int] = range(5, 46, 2),
           q_values: Sequence[int] = DEFAULT_Q) -> dict[int, dict[int, list[Splitting]]]:
    """Splittings by mu_{-q} per (n, q); lengths with none for every q are left out."""
    out: dict[int, dict[int, list[Splitting]]] = {}
    for n in n_values:
        if n % 2 == 0:
            continue
        row = {q: (find_splittings(n, q) if math.gcd(n, q) == 1 else []) for q in q_values}
        if any(row.values()):
            out[n] = row
    return out


def _cell(splits: list[Splitting]) -> str:
    if not splits:
        return "-"
    return ", ".join(s.label() + (" ♣" if is_qr_splitting(s) else "") for s in splits)


def format_table1(table: dict[int, dict[int, list[Splitting]]],
                  q_values: Sequence[int] = DEFAULT_Q) -> str:
    lines = ["n\t" + "\t".join(f"q={q}" for q in q_values)]
    for n, row in table.items():
        lines.append(f"{n}\t" + "\t".join(_cell(row[q]) for q in q_values))
    return "\n".join(lines) + "\n"


def table1_csv(table: dict[int, dict[int, list[Splitting]]],
               q_values: Sequence[int] = DEFAULT_Q) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "q", "S1", "qr"])
    for n, row in table.items():
        for q in q_values:
            for s in row[q]:
                w.writerow([n, q, " ".join(str(r) for r in s.reps()), int(is_qr_splitting(s))])
    return buf.getvalue()
