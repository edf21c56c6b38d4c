"""Finite-dimensional nonassociative algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product as cartesian
from typing import Iterable, Iterator

from .errors import BoundExceeded, InputError, PropertyViolation
from .field import Field
from .linalg import (Subspace, inverse, kernel, lincomb, mat_mul, mat_vec, solve_linear,
                     transpose, unit_vector, vsub)

DEFAULT_ENUMERATION_BOUND = 10**6


@dataclass(frozen=True)
class Algebra:
    """``constants[i][j][k]`` is the e_k-coordinate of e_i e_j."""

    field: Field
    constants: tuple
    unit_index: int | None = None
    labels: tuple[str, ...] | None = dc_field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return len(self.constants)

    @cached_property
    def _table(self):
        # sparse basis products: _table[i][j] = [(k, c), ...]
        return [[[(k, c) for k, c in enumerate(cij) if c] for cij in ci] for ci in self.constants]

    def basis(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    @cached_property
    def one(self) -> tuple | None:
        """The unity as a coordinate vector, or None if the algebra has none."""
        if self.unit_index is not None:
            return self.basis(self.unit_index)
        return find_unity(self)

    def product(self, x, y) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise InputError(f"vectors of length {len(x)}, {len(y)} in an algebra of dimension {n}")
        out = [0] * n
        T = self._table
        for i, a in enumerate(x):
            if not a:
                continue
            Ti = T[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in Ti[j]:
                    out[k] += ab * c
        F = self.field
        return tuple(F.norm(v) for v in out)

    def commutator(self, x, y) -> tuple:
        return vsub(self.field, self.product(x, y), self.product(y, x))

    def associator(self, x, y, z) -> tuple:
        return vsub(self.field, self.product(self.product(x, y), z),
                    self.product(x, self.product(y, z)))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def constants_json(self) -> list:
        return [[[self.field.dump(c) for c in cij] for cij in ci] for ci in self.constants]


def make_algebra(F: Field, constants, unit_index: int | None = None, labels=None) -> Algebra:
    """Validate and coerce structure constants; checks the unit axioms when ``unit_index`` is given."""
    try:
        n = len(constants)
        if n < 1:
            raise InputError("an algebra needs dimension >= 1")
        c = tuple(tuple(tuple(F.load(x) for x in constants[i][j]) for j in range(len(constants[i])))
                  for i in range(n))
    except TypeError:
        raise InputError("structure constants must be a cubic nested array") from None
    if any(len(ci) != n or any(len(cij) != n for cij in ci) for ci in c):
        raise InputError(f"ragged structure constants: expected {n}x{n}x{n}")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise InputError("one label per basis vector")
    A = Algebra(F, c, unit_index, labels)
    if unit_index is not None:
        if not 0 <= unit_index < n:
            raise InputError(f"unit index {unit_index} out of range")
        for i in range(n):
            e = A.basis(i)
            if c[unit_index][i] != e or c[i][unit_index] != e:
                raise InputError(f"e{unit_index} is not a unity: fails against e{i}")
    return A


def algebra_from_products(F: Field, n: int, mul, unit_index=None, labels=None) -> Algebra:
    """Build an algebra from ``mul(i, j)`` returning the coordinate vector of e_i e_j."""
    return make_algebra(F, [[list(mul(i, j)) for j in range(n)] for i in range(n)], unit_index, labels)


def find_unity(A: Algebra) -> tuple | None:
    F, n = A.field, A.dim
    rows, rhs = [], []
    # u e_i = e_i and e_i u = e_i, linear in u
    for i in range(n):
        for k in range(n):
            rows.append([A.constants[a][i][k] for a in range(n)])
            rhs.append(F.one if k == i else F.zero)
            rows.append([A.constants[i][a][k] for a in range(n)])
            rhs.append(F.one if k == i else F.zero)
    return solve_linear(F, rows, rhs)


def left_mult(A: Algebra, x) -> list[list]:
    """Matrix of L_x: y -> xy (columns are images of basis vectors)."""
    return transpose([A.product(x, A.basis(j)) for j in range(A.dim)])


def right_mult(A: Algebra, x) -> list[list]:
    return transpose([A.product(A.basis(j), x) for j in range(A.dim)])


def is_homomorphism(A: Algebra, B: Algebra, M) -> bool:
    """M maps A-coordinates to B-coordinates; checks M(e_i e_j) = M(e_i) M(e_j)."""
    cols = transpose(M)
    F = A.field
    for i in range(A.dim):
        for j in range(A.dim):
            if mat_vec(F, M, A.product(A.basis(i), A.basis(j))) != B.product(cols[i], cols[j]):
                return False
    return True


# -- subspaces, ideals, quotients ------------------------------------------------

def _as_subspace(A: Algebra, S) -> Subspace:
    if isinstance(S, Subspace):
        if S.ambient != A.dim:
            raise InputError("subspace lives in a different ambient dimension")
        return S
    return Subspace.span(A.field, A.dim, S)


def ideal_closure(A: Algebra, generators) -> Subspace:
    """Smallest two-sided ideal containing ``generators``."""
    S = _as_subspace(A, generators)
    todo = list(S.basis)
    basis = [A.basis(i) for i in range(A.dim)]
    while todo:
        v = todo.pop()
        for e in basis:
            for w in (A.product(v, e), A.product(e, v)):
                if not S.contains(w):
                    S = S.extend([w])
                    todo.append(w)
    return S


def is_ideal(A: Algebra, S) -> bool:
    S = _as_subspace(A, S)
    for v in S.basis:
        for i in range(A.dim):
            e = A.basis(i)
            if not S.contains(A.product(v, e)) or not S.contains(A.product(e, v)):
                return False
    return True


def is_subalgebra(A: Algebra, S) -> bool:
    S = _as_subspace(A, S)
    return all(S.contains(A.product(u, v)) for u in S.basis for v in S.basis)


def span_product(A: Algebra, S, T) -> Subspace:
    S, T = _as_subspace(A, S), _as_subspace(A, T)
    return Subspace.span(A.field, A.dim, [A.product(u, v) for u in S.basis for v in T.basis])


def is_solvable(A: Algebra, S) -> bool:
    """Derived series S, S^2, (S^2)^2, ... reaches zero."""
    S = _as_subspace(A, S)
    while S.dim:
        nxt = span_product(A, S, S)
        if nxt == S:
            return False
        S = nxt
    return True


@dataclass(frozen=True)
class QuotientMap:
    algebra: Algebra
    projection: tuple  # rows: dim(A/I) x dim A
    lift: tuple  # representatives in A of the quotient basis


def quotient_map(A: Algebra, I) -> QuotientMap:
    """A/I on a complement basis; the image of the unity (if any) is basis vector 0."""
    F, n = A.field, A.dim
    I = _as_subspace(A, I)
    if not is_ideal(A, I):
        raise InputError("quotient by a subspace that is not an ideal")
    chosen: list[tuple] = []
    cur = I
    one = A.one
    if one is not None and not I.contains(one):
        chosen.append(one)
        cur = cur.extend([one])
    for i in range(n):
        e = A.basis(i)
        if not cur.contains(e):
            chosen.append(e)
            cur = cur.extend([e])
    k = len(chosen)
    T = transpose(list(chosen) + list(I.basis))
    P = inverse(F, T)[:k]
    table = [[mat_vec(F, P, A.product(chosen[a], chosen[b])) for b in range(k)] for a in range(k)]
    unit = 0 if (one is not None and k and not I.contains(one)) else None
    Q = make_algebra(F, table, unit)
    return QuotientMap(Q, tuple(tuple(r) for r in P), tuple(chosen))


def quotient_algebra(A: Algebra, I) -> Algebra:
    return quotient_map(A, I).algebra


# -- centers ------------------------------------------------------------------

@dataclass(frozen=True)
class Centers:
    K: Subspace  # commutative center
    N: Subspace  # nucleus
    Z: Subspace  # center


def _kernel_of_linear_family(A: Algebra, images) -> Subspace:
    """{x : sum_a x_a images[r][a] = 0 for every r}, each images[r] a list of n vectors."""
    F, n = A.field, A.dim
    rows = []
    for family in images:
        for k in range(n):
            row = [family[a][k] for a in range(n)]
            if any(row):
                rows.append(row)
    return Subspace.span(F, n, kernel(F, rows, n))


def centers(A: Algebra) -> Centers:
    n = A.dim
    E = [A.basis(i) for i in range(n)]
    K = _kernel_of_linear_family(A, [[A.commutator(E[a], E[i]) for a in range(n)] for i in range(n)])
    fams = []
    for i in range(n):
        for j in range(n):
            fams.append([A.associator(E[a], E[i], E[j]) for a in range(n)])
            fams.append([A.associator(E[j], E[a], E[i]) for a in range(n)])
            fams.append([A.associator(E[i], E[j], E[a]) for a in range(n)])
    N = _kernel_of_linear_family(A, fams)
    return Centers(K, N, K & N)


# -- identities ---------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    commutative: bool
    anticommutative: bool
    flexible: bool
    jordan: bool
    associative: bool
    power_assoc_deg2: bool


def _vanishes_identically(A: Algebra, degree: int, term, with_y: bool) -> bool:
    """Does a polynomial identity of ``degree`` in x (linear in y) hold identically?

    ``term(t, y)`` evaluates the fully expanded identity on basis vectors
    x-slots e_{t[0]}, e_{t[1]}, ...; contributions are collected per monomial
    of the coordinates of x, so the check is exact in every characteristic.
    """
    F, n = A.field, A.dim
    ys = [A.basis(j) for j in range(n)] if with_y else [None]
    for y in ys:
        acc: dict[tuple, list] = {}
        for t in cartesian(range(n), repeat=degree):
            v = term(t, y)
            key = tuple(sorted(t))
            cur = acc.setdefault(key, [0] * n)
            for k, c in enumerate(v):
                if c:
                    cur[k] += c
        if any(F.norm(c) for vec in acc.values() for c in vec):
            return False
    return True


def identity_predicates(A: Algebra) -> IdentityReport:
    F, n = A.field, A.dim
    E = [A.basis(i) for i in range(n)]
    P = [[A.product(E[i], E[j]) for j in range(n)] for i in range(n)]
    mul = A.product
    commutative = all(P[i][j] == P[j][i] for i in range(n) for j in range(n))
    anticomm = _vanishes_identically(A, 2, lambda t, _: P[t[0]][t[1]], False)
    associative = all(mul(P[i][j], E[k]) == mul(E[i], P[j][k])
                      for i in range(n) for j in range(n) for k in range(n))
    flexible = _vanishes_identically(
        A, 2, lambda t, y: vsub(F, mul(mul(E[t[0]], y), E[t[1]]), mul(E[t[0]], mul(y, E[t[1]]))), True)
    jordan = commutative and _vanishes_identically(
        A, 3, lambda t, y: vsub(F, mul(mul(P[t[0]][t[1]], y), E[t[2]]),
                                mul(P[t[0]][t[1]], mul(y, E[t[2]]))), True)
    power = _vanishes_identically(
        A, 3, lambda t, _: vsub(F, mul(P[t[0]][t[1]], E[t[2]]), mul(E[t[2]], P[t[0]][t[1]])), False)
    return IdentityReport(commutative, anticomm, flexible, jordan, associative, power)


def plus_minus_algebras(A: Algebra) -> tuple[Algebra, Algebra]:
    """(A+, A-): products (xy + yx)/2 and [x, y]."""
    F, n = A.field, A.dim
    if F.characteristic == 2:
        raise InputError("the symmetrized algebra A+ needs 1/2; characteristic 2 given")
    half = F.inv(F(2))
    c = A.constants
    plus = [[[F.norm(half * (c[i][j][k] + c[j][i][k])) for k in range(n)] for j in range(n)]
            for i in range(n)]
    minus = [[[F.norm(c[i][j][k] - c[j][i][k]) for k in range(n)] for j in range(n)]
             for i in range(n)]
    return make_algebra(F, plus, A.unit_index), make_algebra(F, minus)


def double_products_vanish(A: Algebra) -> bool:
    """(xy)z = 0 = z(xy) on basis triples, i.e. nilpotent of degree <= 2."""
    n = A.dim
    E = [A.basis(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            p = A.product(E[i], E[j])
            if any(any(A.product(p, e)) or any(A.product(e, p)) for e in E):
                return False
    return True


def is_commutative(A: Algebra) -> bool:
    n = A.dim
    c = A.constants
    return all(c[i][j] == c[j][i] for i in range(n) for j in range(n))


# -- finite-field oracles -------------------------------------------------------

def _projective_points(F: Field, n: int) -> Iterator[tuple]:
    """One representative (first nonzero coordinate 1) of every line in F^n."""
    for lead in range(n):
        for tail in cartesian(range(F.p), repeat=n - lead - 1):
            yield (0,) * lead + (1,) + tail


def enumerate_ideals(A: Algebra, bound: int = DEFAULT_ENUMERATION_BOUND,
                     sums: bool = False) -> list[Subspace]:
    """Ideals generated by single vectors, plus 0, deduplicated.

    With ``sums=True`` the list is closed under sums, which yields every ideal.
    """
    F, n = A.field, A.dim
    if not F.is_finite:
        raise InputError("ideal enumeration needs a finite field")
    size = F.p ** n
    if size > bound:
        raise BoundExceeded("enumerate_ideals", size, bound, "--max-enum")
    found = {Subspace.zero(F, n)}
    for v in _projective_points(F, n):
        found.add(ideal_closure(A, [v]))
    if sums:
        changed = True
        while changed:
            changed = False
            cur = list(found)
            for a in cur:
                for b in cur:
                    s = a + b
                    if s not in found:
                        found.add(s)
                        changed = True
    return sorted(found, key=lambda S: (S.dim, S.basis))


def maximal_ideals(A: Algebra, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[Subspace]:
    ideals = enumerate_ideals(A, bound, sums=True)
    proper = [I for I in ideals if I.dim < A.dim]
    return [I for I in proper if not any(I != J and I <= J for J in proper)]


def iter_unital_isomorphisms(A: Algebra, B: Algebra,
                             bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[list[list]]:
    """Brute force over every invertible map sending 1_A to 1_B; yields the isomorphisms."""
    F, n = A.field, A.dim
    if B.field != F or B.dim != n:
        return
    if not F.is_finite:
        raise InputError("brute-force isomorphism search needs a finite field")
    if A.one is None or B.one is None:
        raise InputError("both algebras must be unital")
    size = F.p ** (n * (n - 1))
    if size > bound:
        raise BoundExceeded("unital isomorphism enumeration", size, bound, "--max-enum")
    rest = Subspace.span(F, n, [A.one]).complement_in(Subspace.whole(F, n))
    P = transpose([A.one] + rest)
    Pinv = inverse(F, P)
    vectors = list(cartesian(range(F.p), repeat=n))
    for cols in cartesian(vectors, repeat=n - 1):
        Y = transpose([B.one] + list(cols))
        if inverse(F, Y) is None:
            continue
        M = mat_mul(F, Y, Pinv)
        if is_homomorphism(A, B, M):
            yield M


def count_automorphisms_bruteforce(A: Algebra, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    return sum(1 for _ in iter_unital_isomorphisms(A, A, bound))


def assert_property(cond: bool, message: str) -> None:
    if not cond:
        raise PropertyViolation(message)


def coordinates_in(F: Field, basis: Iterable, v) -> tuple:
    """Coordinates of ``v`` in a basis given as a list of vectors (must be a basis of the span)."""
    x = solve_linear(F, transpose(list(basis)), v)
    if x is None:
        raise InputError("vector not in the span of the given basis")
    return x


__all__ = [
    "Algebra", "Centers", "IdentityReport", "QuotientMap", "algebra_from_products", "centers",
    "count_automorphisms_bruteforce", "double_products_vanish", "enumerate_ideals", "find_unity",
    "ideal_closure", "identity_predicates", "is_commutative", "is_homomorphism", "is_ideal",
    "is_solvable", "is_subalgebra", "iter_unital_isomorphisms", "left_mult", "make_algebra",
    "maximal_ideals", "plus_minus_algebras", "quotient_algebra", "quotient_map", "right_mult",
    "span_product", "lincomb",
]
