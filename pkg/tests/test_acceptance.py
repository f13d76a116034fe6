"""The ten acceptance criteria, one test each, each logging a PASS/FAIL line."""

import math
import random
import time
from fractions import Fraction

import numpy as np

from acceptance_log import verdict
from expected_splittings import EXPECTED
from hsduadic import cycodes as cy
from hsduadic import duadic as du
from hsduadic import lengths as le
from hsduadic.census import constants as cs
from hsduadic.census import functions as fn
from hsduadic.census.report import run_census
from hsduadic.gf import conj, gf_q2
from hsduadic.modarith import cyclotomic_cosets


def test_1_table_reproduction():
    t0 = time.perf_counter()
    table = du.table1(range(5, 46, 2), (3, 4, 5))
    bad = []
    if sorted(table) != sorted(EXPECTED):
        bad.append(("rows", sorted(set(table) ^ set(EXPECTED))))
    for n in sorted(set(table) & set(EXPECTED)):
        for q in (3, 4, 5):
            got = {(tuple(s.reps()), du.is_qr_splitting(s)) for s in table[n][q]}
            if got != EXPECTED[n][q]:
                bad.append((n, q))
    # every odd n in range coprime to q that is absent must have no splitting
    for n in range(5, 46, 2):
        for q in (3, 4, 5):
            if math.gcd(n, q) == 1 and not EXPECTED.get(n, {}).get(q):
                if du.find_splittings(n, q):
                    bad.append(("absent", n, q))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    verdict(1, "splitting table reproduction", ok, f"{len(table)} rows, {dt:.1f}s, mismatches={bad[:5]}")
    assert ok


def _hermitian_gram_zero(F, G) -> bool:
    """G conj(G)^T computed with field elements rather than the lookup tables."""
    rows = [[F.from_index(x) for x in r] for r in G]
    bars = [[conj(z) for z in r] for r in rows]
    zero = F.zero()
    for u in rows:
        for w in bars:
            s = zero
            for a, b in zip(u, w):
                s = s + a * b
            if s != zero:
                return False
    return True


def test_2_self_duality():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for n, row in du.table1().items():
        for q, sps in row.items():
            for s in sps:
                P = du.duadic_from_splitting(s)
                for D in (P.D1, P.D2):
                    E = du.extend_odd_like(D)
                    r = cy.rank(D.tables, E.generator_matrix)
                    if r != (n + 1) // 2 or not _hermitian_gram_zero(D.F, E.generator_matrix):
                        bad.append((n, q, s.reps()))
                    checked += 1
    dt = time.perf_counter() - t0
    ok = not bad and checked > 0 and dt < 60
    verdict(2, "self-duality of extended odd-like codes", ok,
            f"{checked} codes, {dt:.1f}s, failures={bad[:5]}")
    assert ok


def test_3_dual_formula():
    rng = random.Random(20260)
    cases = [(q, n) for q in (2, 3, 5) for n in range(1, 21) if math.gcd(n, q) == 1]
    total, bad = 0, []
    while total < 240:
        q, n = rng.choice(cases)
        F = gf_q2(q)
        part = cyclotomic_cosets(n, q * q)
        T = {s for c in part.cosets if rng.random() < 0.5 for s in c}
        C = cy.CyclicCode(F, n, T)
        dual_T = set(range(n)) - {(-q * t) % n for t in T}
        H = cy.code_from_defining_set(F, n, dual_T)
        B = cy.brute_force_dual(C.tables, C.generator_matrix, n, cy.HERMITIAN)
        if not cy.same_row_space(C.tables, H.generator_matrix, B) or H.dim != n - C.dim:
            bad.append((q, n, sorted(T)))
        total += 1
    ok = not bad
    verdict(3, "Hermitian dual formula vs null space", ok, f"{total} codes, failures={bad[:3]}")
    assert ok


def test_4_four_way_agreement():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(1, 1001, 2):
            if math.gcd(n, q) != 1:
                continue
            v = (le.splits_by_mu_minus_q(n, q), le.splits_by_order_restated(n, q),
                 le.coprime_to_S_q(n, q), du.splitting_exists(n, q))
            if len(set(v)) != 1:
                bad.append((n, q, v))
            checked += 1
    ok = not bad
    verdict(4, "four-way length classification", ok,
            f"{checked} pairs, {time.perf_counter() - t0:.1f}s, disagreements={bad[:3]}")
    assert ok


def _square_table(n: int) -> np.ndarray:
    sq = np.zeros(n, dtype=bool)
    x = np.arange(n, dtype=np.int64)
    sq[(x * x) % n] = True
    return sq


def test_5_square_lemma():
    avals = [a for a in range(-10, 11) if not fn.is_perfect_square(a)]
    checked, bad = 0, []
    for n in range(1, 10**4 + 1):
        sq = _square_table(n)
        for a in avals:
            if math.gcd(a, n) != 1:
                continue
            if fn.f_a(n, a) != int(sq[a % n]):
                bad.append((a, n))
            checked += 1
    counter = fn.f_a(15, 2) == 0 and not _square_table(15)[2]
    ok = not bad and counter
    verdict(5, "f_a equals the square test", ok,
            f"{checked} pairs, f_2(15)=0: {counter}, failures={bad[:3]}")
    assert ok


def test_6_density():
    t0 = time.perf_counter()
    expect = {2: Fraction(7, 24), 3: Fraction(1, 3), 4: Fraction(1, 3), 5: Fraction(1, 3),
              9: Fraction(1, 6)}
    parts, ok = [], True
    for q, d in expect.items():
        assert fn.delta(q) == d
        r = fn.prime_order_census(q, 10**6)
        gap = abs(r["density"] - float(d))
        ok &= gap < 0.01
        parts.append(f"q={q}: {r['density']:.4f} vs {d}")
    dt = time.perf_counter() - t0
    ok &= dt < 300
    verdict(6, "prime-order density", ok, f"{'; '.join(parts)}; {dt:.1f}s")
    assert ok


def test_7_sieve_vs_naive():
    x = 10**5
    bad, runs = [], 0

    def cmp(tag, s, naive):
        nonlocal runs
        runs += 1
        if not np.array_equal(s.prefix(x), naive):
            bad.append(tag)

    for q in (2, 3, 4, 5, 9):
        for mode in fn.A_MODES:
            cmp(("A", q, mode), fn.a_q_sieve(q, mode), fn.A_q_naive(x, q, mode))
    for a in (-4, -3, -1, 2, 3, 5, 7):
        cmp(("D", a), fn.f_sieve(a), fn.D_a_naive(x, a))
    cmp(("D odd", 5), fn.f_sieve(5, True), fn.D_a_naive(x, 5, True))
    for a in (-3, 2, 5):
        for c in fn.CONVENTIONS:
            cmp(("G", a, c), fn.g_sieve(a, c), fn.G_a_naive(x, a, c))
    for D in (-3, -4, -7, -8, -11, -15, -20, -23):
        cmp(("B", D), fn.b_sieve(D), fn.B_D_naive(x, D))
    ok = not bad
    verdict(7, "sieve equals naive evaluation", ok, f"{runs} prefix arrays to 1e5, failures={bad}")
    assert ok


def test_8_forms():
    checked, bad = 0, []
    for D in (-3, -4, -7, -8, -11, -15, -20, -23):
        for n in range(1, 2001):
            if math.gcd(n, D) != 1:
                continue
            if fn.xi_D(n, D) != int(fn.representability(n, D)):
                bad.append((n, D))
            checked += 1
    ok = not bad
    verdict(8, "xi_D equals representability", ok, f"{checked} pairs, failures={bad[:3]}")
    assert ok


def test_9_constants():
    worst_p = 0.0
    for a in (-4, -3, -1, 2, 3, 5, 7):
        lo = cs.estimate_G_const(a, P=10**5)
        hi = cs.estimate_G_const(a, P=10**6)
        worst_p = max(worst_p, abs(lo.value - hi.value))
    worst_r = 0.0
    for D in (-3, -4, -7, -8, -11, -15, -20, -23):
        j = cs.estimate_J(D)
        g = cs.estimate_G_D(D)
        target = cs.minus_prime_product_exact(D) ** -2
        worst_r = max(worst_r, abs((j.value / g.value) ** 2 - target))
    ok = worst_p < 1e-3 and worst_r < 1e-6
    verdict(9, "constant stability", ok,
            f"max |G(1e5) - G(1e6)| = {worst_p:.2e}, max ratio error = {worst_r:.2e}")
    assert ok


def test_10_asymptotic_shape():
    x = 10**7
    spreads = {}
    for q in (2, 3, 4, 5, 9):
        for mode in fn.A_MODES:
            spreads[f"A{q}/{mode}"] = run_census("A", x, q=q, mode=mode).spread(10**6)
    for a in (-4, -3, -1, 2, 3, 5, 7):
        spreads[f"D{a}"] = run_census("D", x, a=a).spread(10**6)
    worst = max(spreads, key=spreads.get)
    ok = spreads[worst] < 0.10
    verdict(10, "normalized ratios stable over the last decade", ok,
            f"{len(spreads)} series, worst {worst} = {spreads[worst]:.4f}")
    assert ok
