from itertools import combinations
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from smithkit import (
    ElementaryOp, PolyMatrix, PreconditionError, apply_elementary, d_chain, determinant, groebner,
    is_unimodular, minors_of_order, poly_gcd_many, rank, reduced_minor_profile,
)
from smithkit.polycore import divides
from smithkit.polymatrix import elementary_matrix, mat_mul, minor_index
from smithkit.equivalence import random_unimodular

from conftest import CTX2, CTX3, M, P, from_sympy, leibniz_det, polys, syms, to_sympy


def matrices(ctx, l, m, **kw):
    return st.lists(st.lists(polys(ctx, **kw), min_size=m, max_size=m), min_size=l, max_size=l).map(
        lambda rows: PolyMatrix(ctx, rows))


def square(ctx, max_n=3, **kw):
    return st.integers(1, max_n).flatmap(lambda n: matrices(ctx, n, n, **kw))


def brute_minors(F, i):
    return [leibniz_det(F.submatrix(r, c)) for r in combinations(range(F.nrows), i)
            for c in combinations(range(F.ncols), i)]


# --- construction -----------------------------------------------------------

def test_rejects_ragged_or_empty():
    with pytest.raises(ValueError):
        PolyMatrix(CTX2, [[1, 2], [3]])
    with pytest.raises(ValueError):
        PolyMatrix(CTX2, [])


# --- determinant ------------------------------------------------------------

def test_determinant_examples():
    assert determinant(PolyMatrix.identity(CTX2, 3)) == 1
    assert determinant(M([["x1", "x2"], [0, "x1"]])) == P("x1^2")
    assert determinant(M([[1, "x2"], ["x2", "x1^2 + x2^2"]])) == P("x1^2")
    with pytest.raises(ValueError):
        determinant(M([["x1", "x2"]]))


def test_determinant_needs_pivoting():
    F = M([[0, "x1", 1], ["x2", 0, 0], [1, 1, "x1*x2"]])
    assert determinant(F) == leibniz_det(F)


@given(square(CTX2, max_n=4, max_deg=2, max_terms=3))
def test_determinant_matches_leibniz(F):
    assert determinant(F) == leibniz_det(F)


@given(square(CTX2, max_n=3, max_deg=2, max_terms=2))
def test_determinant_matches_sympy(F):
    S = sympy.Matrix([[to_sympy(e) for e in r] for r in F.rows])
    assert determinant(F) == from_sympy(S.det(method="berkowitz"), CTX2)


# --- minors -----------------------------------------------------------------

def test_minor_examples():
    F = M([["x1", "x2"], [0, "x1"]])
    assert minors_of_order(F, 1) == [P("x1"), P("x2"), CTX2.zero, P("x1")]
    assert minors_of_order(F, 2) == [determinant(F)]
    G = M([[1, 0, 0], [0, "x1", 0]])
    assert minors_of_order(G, 2) == [P("x1"), CTX2.zero, CTX2.zero]
    with pytest.raises(ValueError):
        minors_of_order(G, 3)
    with pytest.raises(ValueError):
        minors_of_order(G, 0)


def test_minor_index_convention():
    assert minor_index(2, 3, 2) == [((0, 1), (0, 1)), ((0, 1), (0, 2)), ((0, 1), (1, 2))]
    assert minor_index(2, 2, 1)[:3] == [((0,), (0,)), ((0,), (1,)), ((1,), (0,))]


@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_minors_match_brute_force(l, m, data):
    F = data.draw(matrices(CTX2, l, m, max_deg=2, max_terms=2))
    for i in range(1, min(l, m) + 1):
        ms = minors_of_order(F, i)
        assert len(ms) == comb(l, i) * comb(m, i)
        assert ms == brute_minors(F, i)


# --- rank and d-chain -------------------------------------------------------

def test_rank_examples():
    assert rank(PolyMatrix.zeros(CTX2, 2, 3)) == 0
    assert rank(PolyMatrix.identity(CTX2, 4)) == 4
    assert rank(M([["x1", "x2"], ["x1*x2", "x2^2"]])) == 1


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_rank_matches_sympy(l, m, data):
    F = data.draw(matrices(CTX2, l, m, max_deg=1, max_terms=2))
    S = sympy.Matrix([[to_sympy(e) for e in r] for r in F.rows])
    assert rank(F) == S.rank(simplify=True)


def test_d_chain_examples():
    assert d_chain(PolyMatrix.identity(CTX2, 3)) == [1, 1, 1, 1]
    assert d_chain(M([["x1", "x2"], [0, "x1"]])) == [CTX2.one, CTX2.one, P("x1^2")]


def test_d_chain_of_worked_diagonal():
    p1, p2, p3 = P("x1", CTX3), P("x1 - 1", CTX3), P("x1 + 1", CTX3)
    D = PolyMatrix.diag(CTX3, [CTX3.one, p1 * p2, p1 ** 2 * p2 * p3, p1 ** 3 * p2 ** 2 * p3])
    chain = d_chain(D)
    # oracle: sympy gcd over brute-force Leibniz minors
    for i in range(1, 5):
        expected = sympy.Integer(0)
        for a in brute_minors(D, i):
            expected = sympy.gcd(expected, to_sympy(a))
        assert chain[i] == from_sympy(expected, CTX3).monic()
    assert chain[2] == p1 * p2
    assert chain[4] == p1 ** 6 * p2 ** 4 * p3 ** 2


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_d_chain_divisibility_and_brute_force(l, m, data):
    F = data.draw(matrices(CTX2, l, m, max_deg=2, max_terms=2))
    chain = d_chain(F)
    assert chain[0] == 1
    assert len(chain) - 1 == rank(F)
    for a, b in zip(chain, chain[1:]):
        assert divides(a, b)
    for i in range(1, len(chain)):
        assert chain[i] == poly_gcd_many(brute_minors(F, i))


# --- reduced minors ---------------------------------------------------------

def test_reduced_minor_examples():
    F = M([["x1", "x2"], [0, "x1"]])
    prof = reduced_minor_profile(F, 1)
    assert prof.d == 1 and list(prof.reduced) == [P("x1"), P("x2"), CTX2.zero, P("x1")]
    assert prof.beta == 4

    U = M([[2, "x2"], [0, 1]])
    prof = reduced_minor_profile(U, 2)
    assert prof.d == 1 and prof.reduced == (determinant(U),)

    prof = reduced_minor_profile(M([["x1", 0], [0, "x1"]]), 2)
    assert prof.d == P("x1^2") and prof.reduced == (CTX2.one,)


def test_reduced_minors_above_rank_are_an_error():
    with pytest.raises(PreconditionError):
        reduced_minor_profile(M([["x1", "x2"], ["x1", "x2"]]), 2)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_reduced_profile_invariants(l, m, data):
    F = data.draw(matrices(CTX2, l, m, max_deg=2, max_terms=2))
    for i in range(1, rank(F) + 1):
        prof = reduced_minor_profile(F, i)
        assert prof.beta == comb(l, i) * comb(m, i)
        for a, b in zip(prof.minors, prof.reduced):
            assert prof.d * b == a
        assert poly_gcd_many(list(prof.reduced)) == 1


# --- unimodularity, products, elementary operations --------------------------

def test_unimodular_examples():
    assert is_unimodular(M([[1, "x2"], [0, 1]]))
    assert not is_unimodular(M([["x1", 0], [0, 1]]))
    U = random_unimodular(CTX2, 3, 10, 2, seed=5)
    assert is_unimodular(U)
    with pytest.raises(ValueError):
        is_unimodular(M([["x1", 0]]))


def test_mat_mul_examples():
    A = M([["x1", "x2"], [1, "x1 + 1"]])
    assert A * PolyMatrix.identity(CTX2, 2) == A
    assert M([[1, 0], ["x2", 1]]) * M([[1, "x2"], [0, 1]]) == M([[1, "x2"], ["x2", "x2^2 + 1"]])
    with pytest.raises(ValueError):
        mat_mul(M([["x1", 1]]), M([["x1", 1]]))


@given(matrices(CTX2, 2, 2, max_deg=2), matrices(CTX2, 2, 2, max_deg=2), matrices(CTX2, 2, 2, max_deg=2))
def test_mat_mul_associative(A, B, C):
    assert (A * B) * C == A * (B * C)


def test_elementary_examples():
    I = PolyMatrix.identity(CTX2, 2)
    S = apply_elementary(I, ElementaryOp("swap", 0, 1))
    assert S == M([[0, 1], [1, 0]]) and determinant(S) == -1
    assert apply_elementary(I, ElementaryOp("shear", 1, 0, P("x2"))) == M([[1, 0], ["x2", 1]])
    F = M([["x1", "x2", 1], [0, "x1", "x2"]])
    op = ElementaryOp("shear", 2, 0, P("x1 - x2"), side="col")
    assert apply_elementary(apply_elementary(F, op), op.inverse(CTX2)) == F


def test_elementary_errors():
    I = PolyMatrix.identity(CTX2, 2)
    with pytest.raises(ValueError):
        apply_elementary(I, ElementaryOp("scale", 0, factor=0))
    with pytest.raises(ValueError):
        apply_elementary(I, ElementaryOp("scale", 0, factor=P("x1")))
    with pytest.raises(IndexError):
        apply_elementary(I, ElementaryOp("swap", 0, 2))


ops = st.builds(
    lambda kind, i, j, f, side: ElementaryOp(kind, i, j if j != i else (i + 1) % 3,
                                             (f if kind == "shear" else 3) if kind != "swap" else None, side),
    st.sampled_from(["swap", "scale", "shear"]), st.integers(0, 2), st.integers(0, 2),
    polys(CTX2, max_deg=1, max_terms=2), st.sampled_from(["row", "col"]))


@given(matrices(CTX2, 3, 3, max_deg=1, max_terms=2), ops)
def test_elementary_matches_matrix_product(F, op):
    E = elementary_matrix(CTX2, 3, op)
    G = apply_elementary(F, op)
    assert G == (E * F if op.side == "row" else F * E)
    assert apply_elementary(G, op.inverse(CTX2)) == F
    assert is_unimodular(E)


# --- Cauchy-Binet and equivalence invariance ----------------------------------

@given(st.integers(1, 3), st.data())
def test_cauchy_binet(n, data):
    A = data.draw(matrices(CTX2, n, n, max_deg=1, max_terms=2))
    B = data.draw(matrices(CTX2, n, n, max_deg=1, max_terms=2))
    for i in range(1, n + 1):
        lhs = minors_of_order(A * B, i)
        idx = list(combinations(range(n), i))
        for (rs, cs), value in zip(minor_index(n, n, i), lhs):
            rhs = CTX2.zero
            for ks in idx:
                rhs = rhs + leibniz_det(A.submatrix(rs, ks)) * leibniz_det(B.submatrix(ks, cs))
            assert value == rhs
    assert determinant(A * B) == determinant(A) * determinant(B)


@given(matrices(CTX2, 2, 3, max_deg=1, max_terms=2), st.integers(0, 10**6))
def test_d_chain_and_ideals_invariant_under_equivalence(F, seed):
    U = random_unimodular(CTX2, 2, 3, 1, seed)
    V = random_unimodular(CTX2, 3, 3, 1, seed + 1)
    G = U * F * V
    assert d_chain(F) == d_chain(G)
    for i in range(1, rank(F) + 1):
        a = groebner(reduced_minor_profile(F, i).reduced, ctx=CTX2)
        b = groebner(reduced_minor_profile(G, i).reduced, ctx=CTX2)
        assert set(a.generators) == set(b.generators)
