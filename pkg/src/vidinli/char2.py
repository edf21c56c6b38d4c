"""Vidinli algebras over GF(2): the presentations A(V, *, phi), twists by
linear forms and the isomorphism criterion.

A(V, *, phi) is F1 + V with (a1 + u)(b1 + v) = (ab + phi(u, v))1 + (av + bu + u*v)
for an anticommutative product * on V.  The splitting depends on the chosen
complement of F1, which is recorded with every presentation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from typing import Iterator

from .algebra import Algebra, centers, is_commutative, is_homomorphism, make_algebra
from .conic import conic_norm
from .errors import BoundExceeded, InputError, NotVidinli, PropertyViolation
from .field import Field
from .linalg import Subspace, coerce_matrix, inverse, mat_vec, rank, transpose

DEFAULT_MAX_ISO_DIM = 4


def _require_char2(F: Field):
    if F.characteristic != 2:
        raise InputError(f"characteristic 2 required, got {F}")


@dataclass(frozen=True)
class Char2Presentation:
    field: Field
    star: tuple  # star[a][b][c]: v_c-coordinate of v_a * v_b
    phi: tuple
    complement: tuple | None = None  # basis of V inside A, when extracted from an algebra

    @property
    def dim_V(self) -> int:
        return len(self.phi)

    @cached_property
    def algebra(self) -> Algebra:
        F, m = self.field, self.dim_V
        n = m + 1
        c = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
        for k in range(n):
            c[0][k][k] = c[k][0][k] = F.one
        for a in range(m):
            for b in range(m):
                c[a + 1][b + 1][0] = self.phi[a][b]
                for k in range(m):
                    c[a + 1][b + 1][k + 1] = self.star[a][b][k]
        return make_algebra(F, c, 0, ["1"] + [f"v{i + 1}" for i in range(m)])

    def star_product(self, u, v) -> tuple:
        F, m = self.field, self.dim_V
        out = [0] * m
        for a in range(m):
            if u[a]:
                for b in range(m):
                    if v[b]:
                        for k in range(m):
                            out[k] += u[a] * v[b] * self.star[a][b][k]
        return tuple(F.norm(x) for x in out)

    def to_json(self) -> dict:
        F = self.field
        d = {"field": F.describe(),
             "phi": [[F.dump(x) for x in r] for r in self.phi],
             "star": [[[F.dump(x) for x in sab] for sab in sa] for sa in self.star]}
        if self.complement is not None:
            d["complement"] = [[F.dump(x) for x in v] for v in self.complement]
        return d


def make_char2_presentation(F: Field, star, phi, complement=None) -> Char2Presentation:
    _require_char2(F)
    phi = coerce_matrix(F, phi)
    m = len(phi)
    if any(len(r) != m for r in phi):
        raise InputError("phi must be square")
    try:
        st = tuple(tuple(tuple(F.load(x) for x in star[a][b]) for b in range(m)) for a in range(m))
        if len(star) != m or any(len(star[a]) != m for a in range(m)) or \
                any(len(star[a][b]) != m for a in range(m) for b in range(m)):
            raise InputError(f"star constants must be {m}x{m}x{m}")
    except (TypeError, IndexError):
        raise InputError(f"star constants must be {m}x{m}x{m}") from None
    for a in range(m):
        if any(st[a][a]):
            raise InputError(f"star is not anticommutative: v{a + 1}*v{a + 1} != 0")
        for b in range(a + 1, m):
            if any(F.norm(x + y) for x, y in zip(st[a][b], st[b][a])):
                raise InputError(f"star is not anticommutative on (v{a + 1}, v{b + 1})")
    return Char2Presentation(F, st, tuple(map(tuple, phi)),
                             None if complement is None else tuple(map(tuple, complement)))


def build_char2(F: Field, star, phi) -> Algebra:
    return make_char2_presentation(F, star, phi).algebra


# -- recognition -----------------------------------------------------------------

@dataclass(frozen=True)
class Char2Norm:
    q_values: tuple  # q(e_i)
    q_gram: tuple
    qA1_zero: bool


def char2_norm(A: Algebra) -> Char2Norm:
    """Norm of a char-2 Vidinli algebra; raises :class:`NotVidinli`.

    In dimension >= 3 these are exactly the algebras with x^2 in F1 for all
    x, checked on basis vectors and pairwise sums.  In dimension <= 2 the
    bracket condition is automatic and only the conic condition is tested.
    """
    F, n = A.field, A.dim
    _require_char2(F)
    one = A.one
    if one is None:
        raise InputError("a Vidinli algebra must be unital")
    if n <= 2:
        cert = conic_norm(A)
        q1 = mat_vec(F, cert.q_gram, one)
        return Char2Norm(cert.q_diag, cert.q_gram, not any(q1))
    from .conic import scalar_multiple_of
    E = [A.basis(i) for i in range(n)]
    qv = []
    for i in range(n):
        c = scalar_multiple_of(F, A.product(E[i], E[i]), one)
        if c is None:
            raise NotVidinli("not_conic", f"e{i}^2 is not a multiple of 1")
        qv.append(c)
    G = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = tuple(F.norm(a + b) for a, b in zip(E[i], E[j]))
            c = scalar_multiple_of(F, A.product(s, s), one)
            if c is None:
                raise NotVidinli("not_conic", f"(e{i} + e{j})^2 is not a multiple of 1")
            G[i][j] = G[j][i] = F.norm(c - qv[i] - qv[j])
    return Char2Norm(tuple(qv), tuple(map(tuple, G)), True)


def _value(F, qv, G, x):
    n = len(x)
    s = sum(x[i] * x[i] * qv[i] for i in range(n) if x[i])
    s += sum(x[i] * x[j] * G[i][j] for i in range(n) if x[i] for j in range(i + 1, n) if x[j])
    return F.norm(s)


def is_vidinli_char2(A: Algebra) -> Char2Norm | None:
    try:
        return char2_norm(A)
    except NotVidinli:
        return None


def extract_char2_presentation(A: Algebra, complement=None) -> Char2Presentation:
    """(star, phi) relative to a complement V of F1 (default: the echelon complement)."""
    F, n = A.field, A.dim
    if n < 3:
        raise InputError("a char-2 presentation A(V, *, phi) needs dimension >= 3")
    norm = char2_norm(A)
    one = A.one
    if complement is None:
        comp = list(Subspace.span(F, n, [one]).complement().basis)
    else:
        comp = [tuple(F.load(x) for x in v) for v in complement]
    m = n - 1
    if len(comp) != m or any(len(v) != n for v in comp) or rank(F, [one] + comp) != n:
        raise InputError("supplied complement is not complementary to F1")
    Tinv = inverse(F, transpose([one] + comp))
    phi = [[F.zero] * m for _ in range(m)]
    star = [[[F.zero] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            coords = mat_vec(F, Tinv, A.product(comp[a], comp[b]))
            phi[a][b] = coords[0]
            star[a][b] = list(coords[1:])
    for a in range(m):
        if any(star[a][a]) or phi[a][a] != _value(F, norm.q_values, norm.q_gram, comp[a]):
            raise PropertyViolation("extracted presentation violates u*u = 0 or q(u) = phi(u, u)")
    return make_char2_presentation(F, star, phi, comp)


# -- twists and isomorphisms ----------------------------------------------------------

def twist(P: Char2Presentation, f) -> Char2Presentation:
    """u *^f v = u*v + f(u)v + f(v)u,  phi^f(u, v) = phi(u, v) + f(u)f(v) + f(u*v)."""
    F, m = P.field, P.dim_V
    f = [F(x) for x in f]
    if len(f) != m:
        raise InputError(f"linear form must have {m} coefficients")
    star = [[[F.norm(P.star[a][b][k] + (f[a] if k == b else 0) + (f[b] if k == a else 0))
              for k in range(m)] for b in range(m)] for a in range(m)]
    phi = [[F.norm(P.phi[a][b] + f[a] * f[b] + sum(P.star[a][b][k] * f[k] for k in range(m)))
            for b in range(m)] for a in range(m)]
    return make_char2_presentation(F, star, phi)


def upsilon(P: Char2Presentation, f, Phi) -> list[list]:
    """Matrix of 1 -> 1, u -> f(u)1 + Phi(u) between the two algebras."""
    F, m = P.field, P.dim_V
    cols = [[F.one] + [F.zero] * m]
    for a in range(m):
        cols.append([F(f[a])] + [F(Phi[b][a]) for b in range(m)])
    return transpose(cols)


@dataclass(frozen=True)
class IsoWitness:
    f: tuple
    Phi: tuple  # columns are the images of the basis of V

    def to_json(self, F: Field) -> dict:
        return {"f": [F.dump(x) for x in self.f], "Phi": [[F.dump(x) for x in r] for r in self.Phi]}


def _invariants(P: Char2Presentation):
    F, m = P.field, P.dim_V
    phi = [list(r) for r in P.phi]
    sym = [[F.norm(phi[a][b] + phi[b][a]) for b in range(m)] for a in range(m)]
    products = [P.star[a][b] for a in range(m) for b in range(a + 1, m)]
    return (rank(F, phi), rank(F, sym), phi == transpose(phi), rank(F, products) if products else 0)


def _triple_isomorphisms(P: Char2Presentation, Q: Char2Presentation) -> Iterator[list[list]]:
    """Linear isomorphisms Phi : (V, *, phi) -> (W, <>, psi), by column-wise backtracking."""
    F, m = P.field, P.dim_V
    vectors = [v for v in cartesian(range(F.p), repeat=m) if any(v)]
    cols: list[tuple] = []

    def apply(u):
        return tuple(F.norm(sum(u[a] * cols[a][k] for a in range(len(cols)) if u[a])) for k in range(m))

    def ready(a, b):
        # the step at which every column entering the (a, b) constraints is placed
        return max([a, b] + [c for c in range(m) if P.star[a][b][c]])

    def consistent(k):
        for a in range(k + 1):
            for b in range(k + 1):
                if (a == k or b == k) and P.phi[a][b] != _bil(F, Q.phi, cols[a], cols[b]):
                    return False
                if ready(a, b) == k and apply(P.star[a][b]) != Q.star_product(cols[a], cols[b]):
                    return False
        return True

    def rec(k, span):
        if k == m:
            yield transpose([list(c) for c in cols])
            return
        # e_k first, so that P against itself yields the identity
        unit = tuple(int(i == k) for i in range(m))
        for v in [unit] + [v for v in vectors if v != unit]:
            if span.contains(v):
                continue
            cols.append(v)
            if consistent(k):
                yield from rec(k + 1, span.extend([v]))
            cols.pop()

    yield from rec(0, Subspace.zero(F, m))


def _bil(F, G, x, y):
    return F.norm(sum(x[i] * G[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j]))


def iso_test_char2(P: Char2Presentation, Q: Char2Presentation,
                   max_dim: int = DEFAULT_MAX_ISO_DIM) -> IsoWitness | None:
    """Search a linear form f and Phi : (V, *^f, phi^f) -> (W, <>, psi); the witness is re-verified
    as an algebra isomorphism A(V, *, phi) -> A(W, <>, psi)."""
    F = P.field
    _require_char2(F)
    if Q.field != F:
        raise InputError("presentations over different fields")
    if P.dim_V != Q.dim_V:
        return None
    m = P.dim_V
    if m > max_dim:
        raise BoundExceeded("iso_test_char2 dimension", m, max_dim, "--max-iso-dim")
    target = _invariants(Q)
    for f in cartesian(range(F.p), repeat=m):
        Pf = twist(P, f)
        if _invariants(Pf) != target:
            continue
        for Phi in _triple_isomorphisms(Pf, Q):
            w = IsoWitness(tuple(f), tuple(map(tuple, Phi)))
            U = upsilon(P, f, Phi)
            if inverse(F, U) is None or not is_homomorphism(P.algebra, Q.algebra, U):
                raise PropertyViolation(f"twisted isomorphism {w} is not an algebra isomorphism")
            return w
    return None


# -- dimension two ---------------------------------------------------------------

@dataclass(frozen=True)
class Dim2Class:
    tag: str  # dual_numbers | purely_inseparable | split_FxF | separable_quadratic
    x: tuple
    min_poly: tuple  # q(x) - q(x,1) X + X^2, lowest degree first
    witness: tuple | None = None  # eps with eps^2 = 0, or a root of the min poly


def classify_dim2(A: Algebra) -> Dim2Class:
    F = A.field
    _require_char2(F)
    if A.dim != 2:
        raise InputError("classify_dim2 needs a 2-dimensional algebra")
    cert = conic_norm(A)
    one = A.one
    x = next(A.basis(i) for i in range(2) if not Subspace.span(F, 2, [one]).contains(A.basis(i)))
    t, qx = cert.polar(one, x), cert.value(x)
    mp = (qx, F.neg(t), F.one)
    if t == 0:
        r = F.sqrt(qx)
        if r is not None:
            eps = tuple(F.norm(a - r * b) for a, b in zip(x, one))
            if any(A.product(eps, eps)):
                raise PropertyViolation("x - sqrt(q(x))1 does not square to zero")
            return Dim2Class("dual_numbers", x, mp, eps)
        return Dim2Class("purely_inseparable", x, mp)
    roots = [r for r in F.elements() if F.norm(r * r - t * r + qx) == 0]
    if roots:
        return Dim2Class("split_FxF", x, mp, (roots[0],))
    return Dim2Class("separable_quadratic", x, mp)


# -- center ------------------------------------------------------------------------

@dataclass(frozen=True)
class Center2Report:
    Z: Subspace
    N: Subspace
    branch: str  # unity_line | commutative


def center_char2(A: Algebra) -> Center2Report:
    F, n = A.field, A.dim
    if is_vidinli_char2(A) is None:
        raise InputError("center_char2 needs a Vidinli algebra")
    c = centers(A)
    if c.N != c.Z:
        raise PropertyViolation("nucleus differs from center")
    comm = is_commutative(A)
    unity_line = c.Z == Subspace.span(F, n, [A.one])
    if not (unity_line or comm):
        raise PropertyViolation("center is neither F1 nor is the algebra commutative")
    if n <= 2 and c.Z != Subspace.whole(F, n):
        raise PropertyViolation("algebra of dimension <= 2 with a proper center")
    return Center2Report(c.Z, c.N, "commutative" if comm else "unity_line")


def all_presentations(F: Field, m: int) -> Iterator[Char2Presentation]:
    """Every (star, phi) on an m-dimensional V over a finite char-2 field."""
    _require_char2(F)
    pairs = [(a, b) for a in range(m) for b in range(a + 1, m)]
    for stvals in cartesian(cartesian(range(F.p), repeat=m), repeat=len(pairs)):
        star = [[[0] * m for _ in range(m)] for _ in range(m)]
        for (a, b), v in zip(pairs, stvals):
            star[a][b] = list(v)
            star[b][a] = [F.neg(x) for x in v]
        for ph in cartesian(range(F.p), repeat=m * m):
            yield make_char2_presentation(F, star, [list(ph[i * m:(i + 1) * m]) for i in range(m)])
