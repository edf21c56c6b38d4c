"""Vidinli algebras over fields of characteristic not 2.

Such an algebra is F1 + V with (a1 + u)(b1 + v) = (ab - B(u, v))1 + (av + bu)
for a bilinear form B on V; every structural invariant computed here is
read off B and cross-checked against the generic engines in
:mod:`vidinli.algebra` and :mod:`vidinli.operators`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as cartesian

from . import poly as P_
from .algebra import (DEFAULT_ENUMERATION_BOUND, Algebra, centers, count_automorphisms_bruteforce,
                      enumerate_ideals, is_ideal, is_subalgebra, make_algebra,
                      maximal_ideals, quotient_map, span_product)
from .conic import ConicCertificate, conic_norm, scalar_multiple_of
from .errors import BoundExceeded, InputError, NotVidinli, PropertyViolation
from .field import QQ, Field
from .linalg import (Subspace, bilinear, coerce_matrix, identity, inverse, is_zero, kernel,
                     mat_mul, mat_sub, mat_vec, rank, solve_columns, transpose)
from .operators import (OperatorSpan, annihilator, derivations_generic, identity_span,
                        lie_mult_algebra_closure, mult_algebra_closure, product_span, rank_one,
                        rank_one_span, trace_zero_part)

ORACLE_BOUND = 4096


def _require_odd(F: Field):
    if F.characteristic == 2:
        raise InputError("characteristic 2 field: use the char2 presentation A(V, *, phi)")


def extract_norm(A: Algebra) -> ConicCertificate | None:
    """The norm of A if A is conic, else None."""
    _require_odd(A.field)
    if A.one is None:
        raise InputError("extract_norm needs a unital algebra")
    try:
        return conic_norm(A)
    except NotVidinli:
        return None


@dataclass(frozen=True)
class VidinliPresentation:
    """A Vidinli algebra with its norm q, V = (F1)^perp, omega and B (Grams in algebra coordinates)."""

    algebra: Algebra
    V: Subspace
    B: tuple
    omega: tuple
    q: ConicCertificate

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def one(self) -> tuple:
        return self.algebra.one

    def gram_on_V(self, G) -> list[list]:
        F = self.field
        return [[bilinear(F, G, u, v) for v in self.V.basis] for u in self.V.basis]

    @property
    def B_on_V(self) -> list[list]:
        return self.gram_on_V(self.B)

    @property
    def q_on_V(self) -> list[list]:
        return self.gram_on_V(self.q.q_gram)

    @property
    def omega_on_V(self) -> list[list]:
        return self.gram_on_V(self.omega)

    @property
    def adapted_basis(self) -> list[tuple]:
        """[1, v_1, ..., v_m] with the v_i the RREF basis of V."""
        return [self.one] + list(self.V.basis)

    @property
    def is_symmetric(self) -> bool:
        return tuple(map(tuple, transpose(self.B))) == self.B

    def to_json(self) -> dict:
        F = self.field
        return {"field": F.describe(),
                "B": [[F.dump(x) for x in r] for r in self.B_on_V]}


def presentation_of(A: Algebra) -> VidinliPresentation:
    """Recognize a Vidinli algebra; raises :class:`NotVidinli` with reason
    ``not_conic`` or ``bracket_escapes_unity_line``."""
    F, n = A.field, A.dim
    _require_odd(F)
    one = A.one
    if one is None:
        raise InputError("a Vidinli algebra must be unital")
    q = conic_norm(A)
    omega = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = scalar_multiple_of(F, A.commutator(A.basis(i), A.basis(j)), one)
            if c is None:
                raise NotVidinli("bracket_escapes_unity_line", f"[e{i}, e{j}] is not a multiple of 1")
            omega[i][j], omega[j][i] = c, F.neg(c)
    q1 = mat_vec(F, q.q_gram, one)
    V = Subspace.span(F, n, kernel(F, [q1], n))
    half = F.inv(F(2))
    B = [[F.norm(half * (q.q_gram[i][j] - omega[i][j])) for j in range(n)] for i in range(n)]
    P = VidinliPresentation(A, V, tuple(map(tuple, B)), tuple(map(tuple, omega)), q)
    _check_presentation(P)
    return P


def _check_presentation(P: VidinliPresentation):
    F, A, one = P.field, P.algebra, P.one
    if bilinear(F, P.B, one, one) != F.one:
        raise PropertyViolation("B(1, 1) != 1")
    for v in P.V.basis:
        if bilinear(F, P.B, one, v) or bilinear(F, P.B, v, one):
            raise PropertyViolation("B(1, V) or B(V, 1) nonzero")
        for w in P.V.basis:
            expect = tuple(F.norm(-bilinear(F, P.B, v, w) * c) for c in one)
            if A.product(v, w) != expect:
                raise PropertyViolation("uv != -B(u, v)1 on V")


def is_vidinli(A: Algebra) -> VidinliPresentation | None:
    try:
        return presentation_of(A)
    except NotVidinli:
        return None


def algebra_from_form(F: Field, B_V, labels=None) -> Algebra:
    """The algebra F1 + V on basis (1, v_1, ..., v_m) with v_i v_j = -B_ij 1."""
    _require_odd(F)
    B_V = coerce_matrix(F, B_V)
    m = len(B_V)
    if any(len(r) != m for r in B_V):
        raise InputError("the bilinear form must be a square matrix")
    n = m + 1
    c = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        c[0][k][k] = c[k][0][k] = F.one
    for i in range(m):
        for j in range(m):
            c[i + 1][j + 1][0] = F.neg(B_V[i][j])
    if labels is None:
        labels = ["1"] + [f"v{i + 1}" for i in range(m)]
    return make_algebra(F, c, 0, labels)


def from_bilinear_form(F: Field, B_V) -> VidinliPresentation:
    return presentation_of(algebra_from_form(F, B_V))


def from_super_form(F: Field, sym_on_V0, skew_on_V1) -> VidinliPresentation:
    """Jordan superalgebra of a supersymmetric form b: x y = b(x, y)1 on V0 + V1, so B = -b."""
    _require_odd(F)
    S = coerce_matrix(F, sym_on_V0)
    K = coerce_matrix(F, skew_on_V1)
    if S != transpose(S) and S:
        raise InputError("form on the even part must be symmetric")
    if K and any(K[i][j] != F.neg(K[j][i]) for i in range(len(K)) for j in range(len(K))):
        raise InputError("form on the odd part must be skew-symmetric")
    a, b = len(S), len(K)
    m = a + b
    B = [[F.zero] * m for _ in range(m)]
    for i in range(a):
        for j in range(a):
            B[i][j] = F.neg(S[i][j])
    for i in range(b):
        for j in range(b):
            B[a + i][a + j] = F.neg(K[i][j])
    labels = ["1"] + [f"x0_{i + 1}" for i in range(a)] + [f"x1_{j + 1}" for j in range(b)]
    return presentation_of(algebra_from_form(F, B, labels))


def standard_symplectic(F: Field, n: int) -> list[list]:
    J = [[F.zero] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        J[2 * k][2 * k + 1] = F.one
        J[2 * k + 1][2 * k] = F.neg(F.one)
    return J


def coskun_eden_example(n: int, F: Field = QQ) -> VidinliPresentation:
    """Dimension 2n+1: uv = (-(u.v) + w(u, v))1 on V, dot product and standard symplectic w."""
    if n < 1:
        raise InputError("n >= 1 required")
    _require_odd(F)
    J = standard_symplectic(F, n)
    I = identity(F, 2 * n)
    return from_bilinear_form(F, mat_sub(F, I, J))


# -- radical and structure ------------------------------------------------------

def radical(P: VidinliPresentation) -> Subspace:
    F = P.field
    B = [list(r) for r in P.B]
    return Subspace.span(F, P.dim, kernel(F, B + transpose(B), P.dim))


@dataclass(frozen=True)
class StructureReport:
    rad: Subspace
    quotient_dim: int
    quotient_class: str  # simple | field_times_field | ground_field
    complement_S: Subspace
    maximal_ideal_count: str  # one | two | not_applicable
    dims: dict
    checks: dict
    oracle: dict | None = None

    def to_json(self) -> dict:
        return {"rad_basis": self.rad.to_json(), "quotient_dim": self.quotient_dim,
                "quotient_class": self.quotient_class,
                "complement_S": self.complement_S.to_json(),
                "maximal_ideal_count": self.maximal_ideal_count,
                "dims": dict(self.dims), "checks": dict(self.checks), "oracle": self.oracle}


def _classify_quotient(P: VidinliPresentation, rad: Subspace) -> str:
    F = P.field
    d = P.dim - rad.dim
    if d == 1:
        return "ground_field"
    if d == 2:
        u = rad.complement_in(P.V)[0]
        # u^2 = -B(u, u) 1; F x F exactly when -B(u, u) is a nonzero square
        c = F.neg(bilinear(F, P.B, u, u))
        return "field_times_field" if c != 0 and F.is_square(c) else "simple"
    return "simple"


def structure_report(P: VidinliPresentation, oracle: bool | None = None,
                     oracle_bound: int = ORACLE_BOUND, with_dims: bool = True) -> StructureReport:
    """Radical of B, class of A/rad B, a unital complement S and counts of maximal ideals.

    ``oracle=None`` cross-checks against exhaustive ideal enumeration whenever
    the field is finite and small enough.
    """
    A, F = P.algebra, P.field
    rad = radical(P)
    checks = {
        "rad_inside_V": rad <= P.V,
        "rad_is_ideal": is_ideal(A, rad),
        "rad_squares_to_zero": span_product(A, rad, rad).dim == 0,
    }
    qclass = _classify_quotient(P, rad)
    S = Subspace.span(F, P.dim, [P.one] + rad.complement_in(P.V))
    checks["S_unital_subalgebra"] = is_subalgebra(A, S) and S.contains(P.one)
    checks["S_plus_rad_is_A"] = S.dim + rad.dim == P.dim and (S + rad).dim == P.dim
    if qclass == "field_times_field":
        maxcount = "two"
    elif rad.dim:
        maxcount = "one"
    else:
        maxcount = "not_applicable"
    dims = {}
    if with_dims:
        dims = {"der": derivations_generic(A).dim, "mult": mult_algebra_closure(A).dim,
                "lie_mult": lie_mult_algebra_closure(A).dim, "center": centers(A).Z.dim}
    report_oracle = None
    small = F.is_finite and F.p ** P.dim <= oracle_bound
    if oracle or (oracle is None and small):
        if not small:
            raise BoundExceeded("structure oracle", F.p ** P.dim if F.is_finite else float("inf"),
                                oracle_bound, "--max-enum")
        report_oracle = ideal_oracle(P, rad, oracle_bound)
        checks["oracle_quotient_class"] = report_oracle["quotient_class"] == qclass
        checks["oracle_maximal_ideals"] = report_oracle["maximal_ideal_count"] == maxcount
        checks["oracle_solvable_in_rad"] = report_oracle["solvable_ideals_in_rad"]
    return StructureReport(rad, P.dim - rad.dim, qclass, S, maxcount, dims, checks, report_oracle)


def ideal_oracle(P: VidinliPresentation, rad: Subspace, bound: int = ORACLE_BOUND) -> dict:
    """Ground truth from exhaustive enumeration of all ideals of A and of A/rad B."""
    from .algebra import is_solvable
    A = P.algebra
    Q = quotient_map(A, rad).algebra
    qideals = enumerate_ideals(Q, bound, sums=True)
    if Q.dim == 1:
        qclass = "ground_field"
    elif len(qideals) == 2:
        qclass = "simple"
    elif Q.dim == 2 and len(qideals) == 4:
        qclass = "field_times_field"
    else:
        qclass = "other"
    ideals = enumerate_ideals(A, bound, sums=True)
    maxi = maximal_ideals(A, bound)
    if len(maxi) == 2:
        maxcount = "two"
    elif len(maxi) == 1 and maxi[0].dim:
        maxcount = "one"
    elif len(maxi) == 1:
        maxcount = "not_applicable"
    else:
        maxcount = f"{len(maxi)}"
    solvable_ok = all(I <= rad for I in ideals if is_solvable(A, I))
    return {"quotient_ideals": len(qideals), "quotient_class": qclass,
            "ideals": len(ideals), "maximal_ideals": len(maxi),
            "maximal_ideal_count": maxcount, "solvable_ideals_in_rad": solvable_ok}


# -- derivations and automorphisms ----------------------------------------------

def _extend_from_V(P: VidinliPresentation, d) -> list[list]:
    """Operator on A acting as ``d`` (V coordinates) on V and killing 1."""
    F = P.field
    m = P.V.dim
    T = transpose(P.adapted_basis)
    D = [[F.zero] * (m + 1)] + [[F.zero] + list(r) for r in d]
    return mat_mul(F, mat_mul(F, T, D), inverse(F, T))


def skew_endomorphisms(F: Field, G) -> list[list[list]]:
    """Basis of {d : G(dx, y) + G(x, dy) = 0}, i.e. d^T G + G d = 0."""
    m = len(G)
    rows = []
    for a in range(m):
        for b in range(m):
            row = [0] * (m * m)
            for c in range(m):
                row[c * m + a] += G[c][b]  # d[c][a] G[c][b]
                row[c * m + b] += G[a][c]  # G[a][c] d[c][b]
            rows.append([F.norm(x) for x in row])
    return [[list(z[i * m:(i + 1) * m]) for i in range(m)] for z in kernel(F, rows, m * m)]


def derivations_skew(P: VidinliPresentation) -> OperatorSpan:
    """Skew endomorphisms of B restricted to V, extended by d(1) = 0."""
    F = P.field
    mats = [_extend_from_V(P, d) for d in skew_endomorphisms(F, P.B_on_V)]
    return OperatorSpan.span(F, P.dim, mats)


@dataclass(frozen=True)
class AutomorphismCheck:
    is_auto: bool
    invertible: bool
    fixes_unity: bool
    preserves_V: bool
    isometry_of_B: bool


def check_automorphism(P: VidinliPresentation, phi) -> AutomorphismCheck:
    """Test phi directly and through (fixes 1, preserves V, isometry of B|V); both must agree."""
    from .algebra import is_homomorphism
    A, F = P.algebra, P.field
    phi = coerce_matrix(F, phi)
    if len(phi) != P.dim or any(len(r) != P.dim for r in phi):
        raise InputError(f"map must be {P.dim}x{P.dim}")
    invertible = inverse(F, phi) is not None
    is_auto = invertible and is_homomorphism(A, A, phi)
    fixes = mat_vec(F, phi, P.one) == P.one
    images = [mat_vec(F, phi, v) for v in P.V.basis]
    preserves = all(P.V.contains(w) for w in images)
    iso = all(bilinear(F, P.B, images[a], images[b]) == bilinear(F, P.B, u, v)
              for a, u in enumerate(P.V.basis) for b, v in enumerate(P.V.basis))
    res = AutomorphismCheck(is_auto, invertible, fixes, preserves, iso)
    if is_auto != (invertible and fixes and preserves and iso):
        raise PropertyViolation(f"automorphism criterion disagrees with direct test: {res}")
    return res


@dataclass(frozen=True)
class AutomorphismCount:
    isometries: int
    automorphisms: int


def count_isometries(F: Field, G, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Invertible g with g^T G g = G, by enumeration over GF(p)."""
    if not F.is_finite:
        raise InputError("isometry enumeration needs a finite field")
    m = len(G)
    size = F.p ** (m * m)
    if size > bound:
        raise BoundExceeded("isometry enumeration", size, bound, "--max-enum")
    G = [list(r) for r in G]
    count = 0
    for entries in cartesian(range(F.p), repeat=m * m):
        g = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
        if mat_mul(F, mat_mul(F, transpose(g), G), g) == G and inverse(F, g) is not None:
            count += 1
    return count


def count_automorphisms_small(P, bound: int = DEFAULT_ENUMERATION_BOUND) -> AutomorphismCount:
    """Isometries of B|V against unital automorphisms found by exhaustive search.

    Accepts a char-2 presentation with zero star product as well: there the
    algebra is F1 + V with uv = phi(u, v)1, the same multiplication rule.
    """
    from .char2 import Char2Presentation
    if isinstance(P, Char2Presentation):
        if any(x for a in P.star for b in a for x in b):
            raise InputError("isometry count matches automorphisms only for a zero star product")
        A, G = P.algebra, [list(r) for r in P.phi]
    else:
        A, G = P.algebra, P.B_on_V
    res = AutomorphismCount(count_isometries(A.field, G, bound), count_automorphisms_bruteforce(A, bound))
    if res.isometries != res.automorphisms:
        raise PropertyViolation(f"automorphism count {res.automorphisms} != isometry count {res.isometries}")
    return res


# -- multiplication algebras ------------------------------------------------------

def _forms_B(P: VidinliPresentation):
    """Coefficient rows of B(b, .) and B(., b) over the standard basis b."""
    n = P.dim
    rows = [list(P.B[b]) for b in range(n)]
    cols = [[P.B[k][b] for k in range(n)] for b in range(n)]
    return rows, cols


def _std_basis(P):
    return [P.algebra.basis(i) for i in range(P.dim)]


def big_span(P: VidinliPresentation) -> OperatorSpan:
    """A(B(A, .) + B(., A))."""
    rows, cols = _forms_B(P)
    return rank_one_span(P.field, P.dim, _std_basis(P), rows + cols)


def sigma_op(P: VidinliPresentation, x, y) -> list[list]:
    """sigma_{x,y} = q(x, .)y - q(y, .)x."""
    F = P.field
    qx = mat_vec(F, transpose(P.q.q_gram), x)
    qy = mat_vec(F, transpose(P.q.q_gram), y)
    return mat_sub(F, rank_one(F, y, qx), rank_one(F, x, qy))


@dataclass(frozen=True)
class MultAlgebraReport:
    computed: OperatorSpan
    predicted: OperatorSpan
    case: str  # d | e | f
    symmetric: bool
    match: bool
    checks: dict

    def to_json(self) -> dict:
        return {"case": self.case, "symmetric": self.symmetric, "computed_dim": self.computed.dim,
                "predicted_dim": self.predicted.dim, "match": self.match, "checks": dict(self.checks)}


def mult_algebra_report(P: VidinliPresentation) -> MultAlgebraReport:
    F, n, A = P.field, P.dim, P.algebra
    computed = mult_algebra_closure(A)
    rad = radical(P)
    sym = P.is_symmetric
    d = n - rad.dim
    rows, cols = _forms_B(P)
    W = big_span(P)
    ideal = rank_one_span(F, n, rad.basis, rows + cols)
    idl = identity_span(F, n)
    if not sym or d >= 3:
        case = "d"
        predicted = idl + W
    elif d == 1:
        case = "e"
        B1 = mat_vec(F, transpose(P.B), P.one)  # B(1, .)
        predicted = idl + rank_one_span(F, n, rad.basis, [B1])
    else:
        case = "f"
        x = rad.complement_in(P.V)[0]
        s1x = sigma_op(P, P.one, x)
        T = transpose([P.one, x] + list(rad.basis))
        proj = [[F.one if (i == j and i < 2) else F.zero for j in range(n)] for i in range(n)]
        pi = mat_mul(F, mat_mul(F, T, proj), inverse(F, T))
        predicted = (OperatorSpan.span(F, n, [identity(F, n), s1x, pi])
                     + rank_one_span(F, n, rad.basis, rows))
    checks = {
        "a_contained": computed <= idl + W,
        "b_ideal_inside": ideal <= computed,
        "b_square_zero": product_span(F, ideal, ideal).dim == 0,
        "b_is_ideal": product_span(F, computed, ideal) <= ideal and product_span(F, ideal, computed) <= ideal,
        "c_annihilator": W == annihilator(F, n, rad),
    }
    if case == "e":
        checks["e_forms_agree"] = predicted == idl + rank_one_span(F, n, rad.basis, rows)
    return MultAlgebraReport(computed, predicted, case, sym, computed == predicted, checks)


@dataclass(frozen=True)
class LieMultAlgebraReport:
    computed: OperatorSpan
    predicted: OperatorSpan
    symmetric: bool
    match: bool

    def to_json(self) -> dict:
        return {"symmetric": self.symmetric, "computed_dim": self.computed.dim,
                "predicted_dim": self.predicted.dim, "match": self.match}


def lie_mult_algebra_report(P: VidinliPresentation) -> LieMultAlgebraReport:
    F, n = P.field, P.dim
    computed = lie_mult_algebra_closure(P.algebra)
    sym = P.is_symmetric
    E = _std_basis(P)
    if sym:
        sig = OperatorSpan.span(F, n, [sigma_op(P, E[i], E[j]) for i in range(n) for j in range(i + 1, n)])
        predicted = identity_span(F, n) + sig
    else:
        predicted = identity_span(F, n) + trace_zero_part(big_span(P))
    return LieMultAlgebraReport(computed, predicted, sym, computed == predicted)


# -- sigma decomposition ---------------------------------------------------------

@dataclass(frozen=True)
class SigmaDecomposition:
    sigma: tuple  # endomorphism of V in the RREF coordinates of V
    factors: tuple  # (polynomial, multiplicity, partner index)
    components: tuple  # Subspace of A per factor
    pairing: tuple  # self_paired | isotropic_pair
    r: int
    s: int
    subalgebras: tuple
    checks: dict = dc_field(default_factory=dict)

    def to_json(self, F: Field) -> dict:
        return {
            "sigma": [[F.dump(x) for x in row] for row in self.sigma],
            "factors": [{"poly": [F.dump(c) for c in p], "text": P_.to_str(p),
                         "multiplicity": m, "partner": j} for p, m, j in self.factors],
            "components": [c.to_json() for c in self.components],
            "pairing": list(self.pairing), "r": self.r, "s": self.s,
            "subalgebras": [S.to_json() for S in self.subalgebras],
            "checks": dict(self.checks),
        }


def sigma_endomorphism(P: VidinliPresentation) -> list[list]:
    """sigma on V with omega(x, y) = q(sigma x, y): solves Q sigma = -Omega."""
    F = P.field
    if inverse(F, P.q.q_gram) is None:
        raise InputError("the norm is degenerate; the sigma decomposition needs a nondegenerate norm")
    Q, Om = P.q_on_V, P.omega_on_V
    if not Q:
        return []
    sigma = solve_columns(F, Q, [[F.neg(x) for x in r] for r in Om])
    if sigma is None:
        raise PropertyViolation("no sigma with omega = q(sigma ., .)")
    return sigma


def sigma_decompose(P: VidinliPresentation, factors_override=None) -> SigmaDecomposition:
    F = P.field
    sigma = sigma_endomorphism(P)
    m = len(sigma)
    Q = P.q_on_V
    checks = {}
    if m:
        skew = mat_mul(F, transpose(sigma), Q)
        checks["sigma_skew"] = is_zero([[F.norm(a + b) for a, b in zip(r1, r2)]
                                        for r1, r2 in zip(skew, mat_mul(F, Q, sigma))])
        checks["omega_is_q_sigma"] = skew == P.omega_on_V
    chi = P_.char_poly(F, sigma)
    if factors_override is not None:
        facs = [P_.monic(F, P_.poly(F, f)) for f in factors_override]
    elif F.is_finite:
        facs = [f for f, _ in P_.factor_over_prime_field(F, chi)]
    elif m:
        raise InputError("factorization over Q not provided; supply factors explicitly")
    else:
        facs = []
    for f in facs:
        if P_.pmod(F, chi, f):
            raise InputError(f"supplied factor {P_.to_str(f)} does not divide {P_.to_str(chi)}")
    partner = []
    for f in facs:
        g = P_.reflect(F, f)
        hits = [j for j, h in enumerate(facs) if h == g]
        if len(hits) != 1:
            raise PropertyViolation(f"factor {P_.to_str(f)} has {len(hits)} partners")
        partner.append(hits[0])
    order = [i for i in range(len(facs)) if partner[i] == i]
    r = len(order)
    for i in range(len(facs)):
        if partner[i] != i and i not in order:
            order.extend([i, partner[i]])
    s = (len(order) - r) // 2
    facs = [facs[i] for i in order]
    newpos = {old: new for new, old in enumerate(order)}
    partner = [newpos[partner[old]] for old in order]
    compsV = P_.primary_decomposition(F, sigma, facs) if m else []
    mults = [P_.multiplicity(F, f, chi) for f in facs]
    # V-coordinates -> A-coordinates
    basisV = list(P.V.basis)

    def to_A(vec):
        return tuple(F.norm(sum(c * b[k] for c, b in zip(vec, basisV) if c)) for k in range(P.dim))

    comps = [Subspace.span(F, P.dim, [to_A(v) for v in C.basis]) for C in compsV]
    pairing = ["self_paired" if partner[i] == i else "isotropic_pair" for i in range(len(facs))]
    if m:
        checks["direct_sum"] = (sum(C.dim for C in compsV) == m
                                and rank(F, [v for C in compsV for v in C.basis]) == m)
        checks["invariant"] = all(C.contains(mat_vec(F, sigma, v)) for C in compsV for v in C.basis)
        checks["isotropic_pairs"] = all(
            bilinear(F, Q, u, v) == 0 for i, C in enumerate(compsV) if pairing[i] == "isotropic_pair"
            for u in C.basis for v in C.basis)
        checks["orthogonal"] = all(
            bilinear(F, Q, u, v) == 0
            for i, C in enumerate(compsV) for j, D in enumerate(compsV)
            if i != j and partner[i] != j for u in C.basis for v in D.basis)
        checks["partners_reflect"] = all(facs[partner[i]] == P_.reflect(F, facs[i]) for i in range(len(facs)))
        checks["layout_r_2s"] = all(partner[i] == i for i in range(r)) and all(
            partner[r + 2 * j] == r + 2 * j + 1 for j in range(s))
    blocks = [comps[i] for i in range(r)] + [comps[r + 2 * j] + comps[r + 2 * j + 1] for j in range(s)]
    subalgebras = [Subspace.span(F, P.dim, [P.one]) + Bk for Bk in blocks]
    A = P.algebra
    checks["subalgebras"] = all(is_subalgebra(A, S) for S in subalgebras)
    checks["subalgebra_norms_nondegenerate"] = all(
        inverse(F, [[P.q.polar(u, v) for v in S.basis] for u in S.basis]) is not None for S in subalgebras)
    factors = tuple((f, mlt, j) for f, mlt, j in zip(facs, mults, partner))
    return SigmaDecomposition(tuple(map(tuple, sigma)), factors, tuple(comps), tuple(pairing), r, s,
                              tuple(subalgebras), checks)


# -- centers -------------------------------------------------------------------

@dataclass(frozen=True)
class CenterReport:
    K: Subspace
    N: Subspace
    Z: Subspace
    branch: str  # B_V_zero | dim_2 | Z_is_unity_line

    def to_json(self) -> dict:
        return {"K": self.K.to_json(), "N": self.N.to_json(), "Z": self.Z.to_json(),
                "branch": self.branch}


def center_report(P: VidinliPresentation) -> CenterReport:
    F, n = P.field, P.dim
    c = centers(P.algebra)
    Bt_minus_B = mat_sub(F, transpose(P.B), [list(r) for r in P.B])
    K_form = Subspace.span(F, n, kernel(F, Bt_minus_B, n))
    if K_form != c.K:
        raise PropertyViolation("commutative center differs from {x : B(x, .) = B(., x)}")
    if c.N != c.Z:
        raise PropertyViolation("nucleus differs from center")
    whole = Subspace.whole(F, n)
    if is_zero(P.B_on_V):
        branch = "B_V_zero"
        ok = c.Z == whole
    elif n == 2:
        branch = "dim_2"
        ok = c.Z == whole
    else:
        branch = "Z_is_unity_line"
        ok = c.Z == Subspace.span(F, n, [P.one])
    if not ok:
        raise PropertyViolation(f"center trichotomy fails in branch {branch}")
    return CenterReport(c.K, c.N, c.Z, branch)


def corollary_checks(P: VidinliPresentation) -> dict:
    """A+ is Jordan, A- has vanishing double products, and
    flexible = commutative = Jordan = (B symmetric)."""
    from .algebra import double_products_vanish, identity_predicates, plus_minus_algebras
    plus, minus = plus_minus_algebras(P.algebra)
    ids = identity_predicates(P.algebra)
    sym = P.is_symmetric
    return {
        "plus_is_jordan": identity_predicates(plus).jordan,
        "minus_double_brackets_vanish": double_products_vanish(minus),
        "four_way_equivalence": ids.flexible == ids.commutative == ids.jordan == sym,
    }
