import itertools
import math

import pytest
from hypothesis import given, strategies as st

from hsduadic import cycodes as cy
from hsduadic.gf import gf_q2
from hsduadic.modarith import cyclotomic_cosets

CASES = [(q, n) for q in (2, 3, 5) for n in range(1, 21) if math.gcd(n, q) == 1]


@st.composite
def random_code(draw):
    q, n = draw(st.sampled_from(CASES))
    F = gf_q2(q)
    part = cyclotomic_cosets(n, F.size)
    picks = draw(st.lists(st.booleans(), min_size=len(part.cosets), max_size=len(part.cosets)))
    T = {s for c, keep in zip(part.cosets, picks) if keep for s in c}
    return cy.CyclicCode(F, n, T)


def test_small_example():
    F = gf_q2(3)
    C = cy.CyclicCode(F, 5, {0, 1, 4})
    assert C.dim == 2
    T = C.tables
    e = C.idempotent
    assert cy.mulmod_xn1(T, e, e, 5) == e
    H = cy.hermitian_dual(C)
    assert sorted(H.T) == [1, 4]
    assert cy.is_hermitian_self_orthogonal(C)
    assert cy.same_row_space(T, cy.brute_force_dual(T, C.generator_matrix, 5), H.generator_matrix)


def test_rejects_non_coset_union():
    with pytest.raises(ValueError):
        cy.CyclicCode(gf_q2(3), 5, {1})
    with pytest.raises(ValueError):
        cy.ring(gf_q2(3), 6)


@given(random_code())
def test_generator_divides_xn_minus_1(C):
    T = C.tables
    g = C.generator_poly
    assert len(g) - 1 == len(C.T)
    _, r = cy.pdivmod(T, cy.xn_minus_1(T, C.n), g)
    assert r == []
    assert C._ring.zero_set(g) == C.T


@given(random_code())
def test_idempotent(C):
    T, n = C.tables, C.n
    e = C.idempotent
    assert cy.mulmod_xn1(T, e, e, n) == e
    assert C.contains(e)
    for row in C.generator_matrix:
        assert cy.mulmod_xn1(T, e, row, n) == row
    assert cy.code_from_generator(C.F, n, e) == C


@given(random_code())
def test_hermitian_dual_matches_null_space(C):
    T = C.tables
    H = cy.hermitian_dual(C)
    B = cy.brute_force_dual(T, C.generator_matrix, C.n, cy.HERMITIAN)
    assert cy.same_row_space(T, B, H.generator_matrix)
    assert cy.hermitian_dual(H) == C


@given(random_code())
def test_euclidean_dual_matches_null_space(C):
    T = C.tables
    E = cy.euclidean_dual(C)
    B = cy.brute_force_dual(T, C.generator_matrix, C.n, cy.EUCLIDEAN)
    assert cy.same_row_space(T, B, E.generator_matrix)


@given(random_code())
def test_dual_idempotent(C):
    e = cy.hermitian_dual_idempotent(C)
    assert cy.code_from_generator(C.F, C.n, e) == cy.hermitian_dual(C)


@given(random_code())
def test_conjugate_code_is_mu_q(C):
    assert cy.conjugate_code(C) == C.mu(C.q)
    T = C.tables
    for row in C.generator_matrix:
        assert cy.conjugate_code(C).contains(cy.conj_poly(T, row))


@given(random_code())
def test_multiplier_action(C):
    a = next(a for a in range(2, 2 * C.n + 3) if math.gcd(a, C.n) == 1)
    D = C.mu(a)
    T = C.tables
    for row in C.generator_matrix:
        assert D.contains(cy.multiplier_poly(row, a, C.n))


@given(random_code())
def test_self_orthogonality_tests_agree(C):
    assert cy.is_hermitian_self_orthogonal(C) == cy.is_self_orthogonal_brute(C)
    assert cy.is_hermitian_self_orthogonal(C) == cy.is_subcode(C, cy.hermitian_dual(C))


@given(random_code(), st.data())
def test_poly_orthogonality(C, data):
    T = C.tables
    a = data.draw(st.lists(st.integers(0, T.size - 1), min_size=C.n, max_size=C.n))
    b = data.draw(st.lists(st.integers(0, T.size - 1), min_size=C.n, max_size=C.n))
    for form in (cy.HERMITIAN, cy.EUCLIDEAN):
        assert cy.poly_orthogonality_check(T, a, b, C.n, form) == \
            cy.shiftwise_orthogonal(T, a, b, C.n, form)


@given(random_code(), random_code())
def test_lattice_operations(C1, C2):
    if (C1.F, C1.n) != (C2.F, C2.n):
        return
    I, S = cy.intersect(C1, C2), cy.code_sum(C1, C2)
    assert cy.is_subcode(I, C1) and cy.is_subcode(C1, S)
    assert I.dim + S.dim == C1.dim + C2.dim
    T = C1.tables
    rows = C1.generator_matrix + C2.generator_matrix
    assert cy.rank(T, rows) == S.dim


def test_even_like_and_complement():
    F = gf_q2(4)
    C = cy.CyclicCode(F, 7, {1, 2, 4})
    assert C.is_odd_like()
    Ev = cy.even_like_subcode(C)
    assert not Ev.is_odd_like()
    T = C.tables
    for row in Ev.generator_matrix:
        s = 0
        for c in row:
            s = T.add[s][c]
        assert s == 0
    assert cy.cyclic_complement(C).T == frozenset({0, 3, 5, 6})


def test_record_roundtrip_and_csv():
    C = cy.CyclicCode(gf_q2(3), 13, {1, 3, 9, 2, 5, 6})
    assert cy.CyclicCode.from_record(C.to_record()) == C
    csv_text = C.generator_matrix_csv()
    assert len(csv_text.splitlines()) == C.dim
    assert all(len(line.split(",")) == 13 for line in csv_text.splitlines())


def test_j_bar_is_repetition_idempotent():
    F = gf_q2(3)
    n = 5
    jb = cy.j_bar(F, n)
    T = F.tables
    assert cy.mulmod_xn1(T, jb, jb, n) == jb
    assert cy.CyclicCode(F, n, range(1, n)).idempotent == jb


def test_full_and_zero():
    F = gf_q2(4)
    assert cy.full_space(F, 7).idempotent == cy.dense([1], 7)
    assert cy.zero_code(F, 7).idempotent == [0] * 7
    assert cy.hermitian_dual(cy.full_space(F, 7)) == cy.zero_code(F, 7)


def test_linear_algebra():
    F = gf_q2(2)
    T = F.tables
    rows = [[1, 0, 1], [0, 1, 1], [1, 1, 0]]
    assert cy.rank(T, rows) == 2
    N = cy.nullspace(T, rows, 3)
    assert len(N) == 1
    for r in rows:
        assert cy.inner(T, r, N[0], cy.EUCLIDEAN) == 0
