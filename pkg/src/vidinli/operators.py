"""Spans of linear operators on an algebra: derivations, multiplication
algebras and rank-one operator spaces."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, left_mult, right_mult
from .errors import PropertyViolation
from .field import Field
from .linalg import (Subspace, identity, kernel, mat_mul, mat_sub, unvectorize, vectorize)


@dataclass(frozen=True)
class OperatorSpan:
    """A subspace of End(F^n), stored through row-major vectorizations."""

    n: int
    space: Subspace

    @classmethod
    def span(cls, F: Field, n: int, matrices) -> "OperatorSpan":
        return cls(n, Subspace.span(F, n * n, [vectorize(M) for M in matrices]))

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def matrices(self) -> list[list[list]]:
        return [unvectorize(v, self.n) for v in self.space.basis]

    def contains(self, M) -> bool:
        return self.space.contains(vectorize(M))

    def __le__(self, other: "OperatorSpan") -> bool:
        return self.space <= other.space

    def __add__(self, other: "OperatorSpan") -> "OperatorSpan":
        return OperatorSpan(self.n, self.space + other.space)

    def __and__(self, other: "OperatorSpan") -> "OperatorSpan":
        return OperatorSpan(self.n, self.space & other.space)

    def to_json(self) -> list:
        F = self.field
        return [[[F.dump(x) for x in row] for row in M] for M in self.matrices()]


def compose(F: Field, A, B):
    return mat_mul(F, A, B)


def bracket(F: Field, A, B):
    return mat_sub(F, mat_mul(F, A, B), mat_mul(F, B, A))


def rank_one(F: Field, a, f) -> list[list]:
    """The operator x -> f(x) a, with f given by its coefficient row."""
    return [[F.norm(ai * fj) for fj in f] for ai in a]


def rank_one_span(F: Field, n: int, vectors, forms) -> OperatorSpan:
    """Span of a.f for a in ``vectors`` and f in ``forms``."""
    return OperatorSpan.span(F, n, [rank_one(F, a, f) for a in vectors for f in forms])


def annihilator(F: Field, n: int, S: Subspace) -> OperatorSpan:
    """{phi in End(F^n) : phi(S) = 0}."""
    rows = []
    for v in S.basis:
        for i in range(n):
            row = [F.zero] * (n * n)
            row[i * n:(i + 1) * n] = v
            rows.append(row)
    return OperatorSpan(n, Subspace.span(F, n * n, kernel(F, rows, n * n)))


def trace(F: Field, M):
    return F.norm(sum(M[i][i] for i in range(len(M))))


def trace_zero_part(span: OperatorSpan) -> OperatorSpan:
    F, n = span.field, span.n
    mats = span.matrices()
    if not mats:
        return span
    tr = [[trace(F, M) for M in mats]]
    coeffs = kernel(F, tr, len(mats))
    vecs = [tuple(F.norm(sum(c * v[k] for c, v in zip(z, span.space.basis) if c))
                  for k in range(n * n)) for z in coeffs]
    return OperatorSpan(n, Subspace.span(F, n * n, vecs))


def product_span(F: Field, S: OperatorSpan, T: OperatorSpan) -> OperatorSpan:
    return OperatorSpan.span(F, S.n, [mat_mul(F, a, b) for a in S.matrices() for b in T.matrices()])


def _closure(F: Field, n: int, generators, op) -> OperatorSpan:
    S = Subspace.span(F, n * n, [vectorize(g) for g in generators])
    gens = [unvectorize(v, n) for v in S.basis]
    todo = list(gens)
    while todo:
        M = todo.pop()
        for g in gens:
            W = vectorize(op(F, M, g))
            if not S.contains(W):
                S = S.extend([W])
                todo.append(unvectorize(W, n))
    return OperatorSpan(n, S)


def multiplication_generators(A: Algebra) -> list[list[list]]:
    gens = []
    for i in range(A.dim):
        e = A.basis(i)
        gens.append(left_mult(A, e))
        gens.append(right_mult(A, e))
    return gens


def mult_algebra_closure(A: Algebra) -> OperatorSpan:
    """Associative subalgebra of End(A) generated by all L_x, R_x.

    Words in the generators are grown by right multiplication until the
    span stops growing (at most n^2 extensions).
    """
    return _closure(A.field, A.dim, multiplication_generators(A), compose)


def lie_mult_algebra_closure(A: Algebra) -> OperatorSpan:
    """Lie subalgebra of gl(A) generated by all L_x, R_x (right-normed brackets)."""
    return _closure(A.field, A.dim, multiplication_generators(A), bracket)


def is_closed(span: OperatorSpan, op) -> bool:
    F = span.field
    mats = span.matrices()
    return all(span.contains(op(F, a, b)) for a in mats for b in mats)


def derivations_generic(A: Algebra) -> OperatorSpan:
    """Solve the Leibniz rule D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for the n^2 entries of D."""
    F, n = A.field, A.dim
    c = A.constants
    rows = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    if c[i][j][k]:
                        row[l * n + k] += c[i][j][k]
                    if c[k][j][l]:
                        row[k * n + i] -= c[k][j][l]
                    if c[i][k][l]:
                        row[k * n + j] -= c[i][k][l]
                row = [F.norm(x) for x in row]
                if any(row):
                    rows.append(row)
    D = OperatorSpan(n, Subspace.span(F, n * n, kernel(F, rows, n * n)))
    if not is_closed(D, bracket):
        raise PropertyViolation("derivation space not closed under commutators")
    return D


def identity_span(F: Field, n: int) -> OperatorSpan:
    return OperatorSpan.span(F, n, [identity(F, n)])
