"""Recovering the norm of a conic algebra from its multiplication."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .errors import InputError, NotVidinli
from .field import Field
from .linalg import Subspace, bilinear, inverse, mat_mul, solve_linear, transpose


@dataclass(frozen=True)
class ConicCertificate:
    """Norm q of a conic algebra: Gram matrix of the polar form and the values q(e_i)."""

    field: Field
    q_gram: tuple
    q_diag: tuple
    valid: bool = True

    def value(self, x):
        F = self.field
        n = len(x)
        s = sum(x[i] * x[i] * self.q_diag[i] for i in range(n) if x[i])
        s += sum(x[i] * x[j] * self.q_gram[i][j]
                 for i in range(n) if x[i] for j in range(i + 1, n) if x[j])
        return F.norm(s)

    def polar(self, x, y):
        return bilinear(self.field, self.q_gram, x, y)


def _square_in_line(A: Algebra, x, one):
    """(a, b) with x^2 = a x + b 1, or None."""
    sol = solve_linear(A.field, transpose([x, one]), A.product(x, x))
    return sol


def conic_norm(A: Algebra) -> ConicCertificate:
    """The unique norm making A conic, valid in every characteristic.

    Squares of a basis adapted to the unity and of pairwise sums fix q and
    its polar form; the conic identity is then re-checked on basis vectors
    and pairwise sums, which determines a degree-2 identity.
    """
    F, n = A.field, A.dim
    one = A.one
    if one is None:
        raise InputError("conic norm requested for a non-unital algebra")
    W = [one] + Subspace.span(F, n, [one]).complement_in(Subspace.whole(F, n))
    qd = [F.one] + [None] * (n - 1)
    lin = [F(2)] + [None] * (n - 1)  # q(w_a, 1)
    for a in range(1, n):
        ab = _square_in_line(A, W[a], one)
        if ab is None:
            raise NotVidinli("not_conic", f"square of basis vector {a} escapes span{{1, x}}")
        lin[a], qd[a] = ab[0], F.neg(ab[1])
    G = [[F.zero] * n for _ in range(n)]
    for a in range(n):
        G[a][a] = F.norm(2 * qd[a])
        G[0][a] = G[a][0] = lin[a] if a else F(2)
    for a in range(1, n):
        for b in range(a + 1, n):
            s = tuple(F.norm(u + v) for u, v in zip(W[a], W[b]))
            ab = _square_in_line(A, s, one)
            if ab is None:
                raise NotVidinli("not_conic", f"square of a pairwise sum ({a}, {b}) escapes span{{1, x}}")
            G[a][b] = G[b][a] = F.norm(-ab[1] - qd[a] - qd[b])
    # back to standard coordinates: w = Tinv v
    T = transpose(W)
    Tinv = inverse(F, T)
    Gstd = mat_mul(F, mat_mul(F, transpose(Tinv), G), Tinv)
    wcert = ConicCertificate(F, tuple(map(tuple, G)), tuple(qd))
    diag = tuple(wcert.value(tuple(Tinv[r][i] for r in range(n))) for i in range(n))
    cert = ConicCertificate(F, tuple(map(tuple, Gstd)), diag)
    if not conic_identity_holds(A, cert):
        raise NotVidinli("not_conic", "x^2 - q(x,1)x + q(x)1 = 0 fails")
    return cert


def verification_set(F: Field, n: int):
    """Basis vectors and their pairwise sums."""
    for i in range(n):
        yield tuple(F.one if k == i else F.zero for k in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            yield tuple(F.one if k in (i, j) else F.zero for k in range(n))


def conic_identity_holds(A: Algebra, cert: ConicCertificate) -> bool:
    F = A.field
    one = A.one
    if cert.value(one) != F.one:
        return False
    for x in verification_set(F, A.dim):
        t = cert.polar(x, one)
        qx = cert.value(x)
        x2 = A.product(x, x)
        if any(F.norm(a - t * b + qx * c) for a, b, c in zip(x2, x, one)):
            return False
    return True


def scalar_multiple_of(F: Field, v, one):
    """c with v = c * one, or None."""
    k = next(i for i, x in enumerate(one) if x)
    c = F.div(v[k], one[k])
    if any(F.norm(a - c * b) for a, b in zip(v, one)):
        return None
    return c
