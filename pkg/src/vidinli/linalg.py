"""Dense exact linear algebra over a :class:`~vidinli.field.Field`.

Matrices are lists of rows; vectors are tuples.  Every routine is pure and
deterministic: elimination pivots on the first nonzero entry and bases are
returned in reduced row echelon form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError
from .field import Field


def coerce_matrix(F: Field, A) -> list[list]:
    rows = [list(r) for r in A]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError("ragged matrix")
    return [[F(x) for x in r] for r in rows]


def shape(A) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def zeros(F: Field, r: int, c: int) -> list[list]:
    return [[F.zero] * c for _ in range(r)]


def identity(F: Field, n: int) -> list[list]:
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def unit_vector(F: Field, n: int, i: int) -> tuple:
    return tuple(F.one if k == i else F.zero for k in range(n))


def transpose(A) -> list[list]:
    return [list(c) for c in zip(*A)]


def mat_mul(F: Field, A, B) -> list[list]:
    if A and len(A[0]) != len(B):
        raise InputError(f"cannot multiply {shape(A)} by {shape(B)}")
    Bt = list(zip(*B))
    return [[F.norm(sum(a * b for a, b in zip(row, col) if a and b)) for col in Bt] for row in A]


def mat_vec(F: Field, A, v) -> tuple:
    if A and len(A[0]) != len(v):
        raise InputError(f"cannot apply {shape(A)} matrix to vector of length {len(v)}")
    return tuple(F.norm(sum(a * b for a, b in zip(row, v) if a and b)) for row in A)


def mat_add(F: Field, A, B) -> list[list]:
    return [[F.norm(a + b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(F: Field, A, B) -> list[list]:
    return [[F.norm(a - b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(F: Field, c, A) -> list[list]:
    return [[F.norm(c * a) for a in r] for r in A]


def is_zero(A) -> bool:
    return all(x == 0 for r in A for x in r)


def vadd(F: Field, u, v) -> tuple:
    return tuple(F.norm(a + b) for a, b in zip(u, v))


def vsub(F: Field, u, v) -> tuple:
    return tuple(F.norm(a - b) for a, b in zip(u, v))


def vscale(F: Field, c, v) -> tuple:
    return tuple(F.norm(c * a) for a in v)


def lincomb(F: Field, coeffs, vectors, n: int) -> tuple:
    out = [0] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
    return tuple(F.norm(x) for x in out)


def bilinear(F: Field, G, x, y):
    """x^T G y."""
    return F.norm(sum(xi * g * yj for xi, row in zip(x, G) if xi for g, yj in zip(row, y) if g and yj))


def vectorize(M) -> tuple:
    """Row-major flattening of a square matrix."""
    return tuple(x for r in M for x in r)


def unvectorize(v, n: int) -> list[list]:
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


# -- elimination ------------------------------------------------------------

def rref(F: Field, A) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of ``A`` (zero rows dropped) and pivot columns."""
    rows = [list(r) for r in A if any(r)]
    ncols = len(A[0]) if len(A) else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        prow = [F.norm(x * inv) for x in rows[r]]
        rows[r] = prow
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                row = rows[i]
                for k in nz:
                    row[k] = F.norm(row[k] - f * prow[k])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(F: Field, A) -> int:
    return len(rref(F, A)[1])


def kernel(F: Field, A, ncols: int | None = None) -> list[tuple]:
    """Basis of {x : A x = 0}, one vector per free column, in echelon order.

    ``ncols`` is needed only when ``A`` has no rows.
    """
    A = coerce_matrix(F, A)
    n = len(A[0]) if A else (ncols or 0)
    R, pivots = rref(F, A)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [F.zero] * n
        x[free] = F.one
        for row, pc in zip(R, pivots):
            if row[free]:
                x[pc] = F.neg(row[free])
        basis.append(tuple(x))
    return basis


def solve_linear(F: Field, A, b) -> tuple | None:
    """One exact solution of ``A x = b`` (free variables set to zero), or None."""
    A = coerce_matrix(F, A)
    b = [F(x) for x in b]
    if len(A) != len(b):
        raise InputError(f"matrix has {len(A)} rows but right-hand side has {len(b)}")
    n = len(A[0]) if A else 0
    R, pivots = rref(F, [row + [bi] for row, bi in zip(A, b)])
    if pivots and pivots[-1] == n:
        return None
    x = [F.zero] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return tuple(x)


def inverse(F: Field, A) -> list[list] | None:
    A = coerce_matrix(F, A)
    n = len(A)
    if any(len(r) != n for r in A):
        raise InputError("inverse of a non-square matrix")
    I = identity(F, n)
    R, pivots = rref(F, [ra + ri for ra, ri in zip(A, I)])
    if pivots[:n] != list(range(n)) or len(R) < n:
        return None
    return [r[n:] for r in R]


def solve_columns(F: Field, A, B) -> list[list] | None:
    """Solve ``A X = B`` for a matrix ``X``; None if some column is inconsistent."""
    cols = []
    for col in transpose(B):
        x = solve_linear(F, A, col)
        if x is None:
            return None
        cols.append(x)
    return transpose(cols) if cols else [[] for _ in range(len(A[0]) if A else 0)]


# -- subspaces ----------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of F^ambient, stored by its canonical RREF basis.

    Equality of two instances is equality of subspaces.
    """

    field: Field
    ambient: int
    basis: tuple[tuple, ...]

    @classmethod
    def span(cls, F: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(F(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise InputError(f"vector of length {len(v)} in ambient dimension {ambient}")
        R, _ = rref(F, vecs) if vecs else ([], [])
        return cls(F, ambient, tuple(tuple(r) for r in R))

    @classmethod
    def zero(cls, F: Field, ambient: int) -> "Subspace":
        return cls(F, ambient, ())

    @classmethod
    def whole(cls, F: Field, ambient: int) -> "Subspace":
        return cls(F, ambient, tuple(unit_vector(F, ambient, i) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    def reduce(self, v) -> tuple:
        """Remainder of ``v`` after clearing the pivot coordinates."""
        F = self.field
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] = F.norm(v[k] - c * x)
        return tuple(v)

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def coordinates(self, v) -> tuple | None:
        """Coefficients of ``v`` in the RREF basis, or None if ``v`` is outside."""
        if not self.contains(v):
            return None
        return tuple(v[pc] for pc in self.pivots)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient, self.basis + other.basis)

    def extend(self, vectors) -> "Subspace":
        return Subspace.span(self.field, self.ambient, self.basis + tuple(tuple(v) for v in vectors))

    def __and__(self, other: "Subspace") -> "Subspace":
        F = self.field
        if not self.basis or not other.basis:
            return Subspace.zero(F, self.ambient)
        # a.self_basis = b.other_basis
        cols = [list(v) for v in self.basis] + [[F.neg(x) for x in v] for v in other.basis]
        K = kernel(F, transpose(cols))
        k = len(self.basis)
        vecs = [lincomb(F, z[:k], self.basis, self.ambient) for z in K]
        return Subspace.span(F, self.ambient, vecs)

    def complement(self) -> "Subspace":
        """Echelon complement: the standard basis vectors at non-pivot positions."""
        piv = set(self.pivots)
        return Subspace(self.field, self.ambient,
                        tuple(unit_vector(self.field, self.ambient, i)
                              for i in range(self.ambient) if i not in piv))

    def complement_in(self, larger: "Subspace") -> list[tuple]:
        """Vectors of ``larger``'s RREF basis that extend ``self`` to ``larger``."""
        cur = self
        out = []
        for v in larger.basis:
            if not cur.contains(v):
                out.append(v)
                cur = cur.extend([v])
        return out

    def to_json(self) -> list:
        return [[self.field.dump(x) for x in v] for v in self.basis]


def independent(F: Field, vectors) -> bool:
    vectors = list(vectors)
    return rank(F, vectors) == len(vectors) if vectors else True
