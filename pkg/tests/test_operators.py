import pytest
from hypothesis import given, strategies as st

from vidinli.algebra import make_algebra
from vidinli.charnot2 import from_bilinear_form
from vidinli.field import GF, QQ
from vidinli.linalg import Subspace, identity, mat_mul, mat_vec, vectorize
from vidinli.operators import (OperatorSpan, bracket, derivations_generic, is_closed, lie_mult_algebra_closure,
                               mult_algebra_closure, multiplication_generators, trace)

from oracles import brute_matrices
from test_algebra import dual_numbers, unital_algebras

GF2, GF3, GF5, GF7 = GF(2), GF(3), GF(5), GF(7)


def naive_closure(F, n, gens, op):
    """Add op(a, b) over all pairs of the current basis until nothing new appears."""
    S = Subspace.span(F, n * n, [vectorize(g) for g in gens])
    while True:
        mats = OperatorSpan(n, S).matrices()
        new = S.extend([vectorize(op(a, b)) for a in mats for b in mats])
        if new == S:
            return S
        S = new


def is_derivation(A, D):
    F = A.field
    E = [A.basis(i) for i in range(A.dim)]
    return all(mat_vec(F, D, A.product(x, y)) == tuple(
        F.norm(a + b) for a, b in zip(A.product(mat_vec(F, D, x), y), A.product(x, mat_vec(F, D, y))))
        for x in E for y in E)


def test_field_examples():
    K = make_algebra(QQ, [[[1]]], 0)
    assert mult_algebra_closure(K).dim == 1
    assert lie_mult_algebra_closure(K).dim == 1
    assert derivations_generic(K).dim == 0


def test_dual_numbers_mult_algebra():
    assert mult_algebra_closure(dual_numbers()).dim == 2


def test_derivation_examples():
    assert derivations_generic(from_bilinear_form(GF5, [[0, 0], [0, 0]]).algebra).dim == 4
    assert derivations_generic(from_bilinear_form(GF7, [[1, 0], [0, 1]]).algebra).dim == 1


@given(st.data())
def test_derivations_against_enumeration(data):
    A = data.draw(unital_algebras(GF2, max_dim=3))
    D = derivations_generic(A)
    count = sum(1 for M in brute_matrices(2, A.dim) if is_derivation(A, M))
    assert count == 2 ** D.dim
    assert all(is_derivation(A, M) and not any(mat_vec(GF2, M, A.one)) for M in D.matrices())
    assert is_closed(D, bracket)


@given(st.data())
def test_closures_against_naive(data):
    A = data.draw(unital_algebras(GF3, max_dim=3))
    gens = multiplication_generators(A)
    M = mult_algebra_closure(A)
    L = lie_mult_algebra_closure(A)
    n = A.dim
    assert M.space == naive_closure(GF3, n, gens, lambda a, b: mat_mul(GF3, a, b))
    assert L.space == naive_closure(GF3, n, gens, lambda a, b: bracket(GF3, a, b))
    assert all(M.contains(g) and L.contains(g) for g in gens)
    assert M.contains(identity(GF3, n))


def test_mult_algebra_skew_gf3():
    assert mult_algebra_closure(from_bilinear_form(GF3, [[0, 1], [-1, 0]]).algebra).dim == 9


def test_lie_mult_algebra_symmetric_gf7():
    assert lie_mult_algebra_closure(from_bilinear_form(GF7, [[1, 0], [0, 1]]).algebra).dim == 4


@pytest.mark.parametrize("p,expected", [(5, 9), (7, 9), (3, 8)])
def test_lie_mult_algebra_skew(p, expected):
    """All of gl(3) except in characteristic 3, where every generator (and id) has trace 0."""
    F = GF(p)
    A = from_bilinear_form(F, [[0, 1], [-1, 0]]).algebra
    L = lie_mult_algebra_closure(A)
    gens = multiplication_generators(A)
    assert L.space == naive_closure(F, 3, gens, lambda a, b: bracket(F, a, b))
    assert L.dim == expected
    if p == 3:
        assert trace(F, identity(F, 3)) == 0 and all(trace(F, g) == 0 for g in gens)
