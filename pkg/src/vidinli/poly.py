"""Univariate polynomials, characteristic/minimal polynomials, factorization
over GF(p) and primary decomposition.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``()``).
"""
from __future__ import annotations

from itertools import product as cartesian

from .errors import InputError
from .field import Field
from .linalg import (Subspace, coerce_matrix, identity, kernel, mat_add, mat_mul,
                     mat_scale, mat_vec, solve_linear, transpose)


def trim(f) -> tuple:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly(F: Field, coeffs) -> tuple:
    return trim(F(c) for c in coeffs)


def deg(f) -> int:
    return len(f) - 1 if f else -1


def lc(f):
    return f[-1]


def padd(F, f, g):
    n = max(len(f), len(g))
    return trim(F.norm((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) for i in range(n))


def psub(F, f, g):
    n = max(len(f), len(g))
    return trim(F.norm((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) for i in range(n))


def pscale(F, c, f):
    return trim(F.norm(c * a) for a in f)


def pmul(F, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return trim(F.norm(x) for x in out)


def ppow(F, f, e):
    out = (F.one,)
    for _ in range(e):
        out = pmul(F, out, f)
    return out


def pdivmod(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [F.zero] * max(len(f) - len(g) + 1, 0)
    inv = F.inv(lc(g))
    dg = deg(g)
    while len(r) - 1 >= dg and r:
        c = F.norm(r[-1] * inv)
        s = len(r) - 1 - dg
        q[s] = c
        for i, b in enumerate(g):
            r[s + i] = F.norm(r[s + i] - c * b)
        r = list(trim(r))
    return trim(q), trim(r)


def pmod(F, f, g):
    return pdivmod(F, f, g)[1]


def monic(F, f):
    return pscale(F, F.inv(lc(f)), f) if f else ()


def pgcd(F, f, g):
    while g:
        f, g = g, pmod(F, f, g)
    return monic(F, f)


def plcm(F, f, g):
    if not f or not g:
        return ()
    return monic(F, pdivmod(F, pmul(F, f, g), pgcd(F, f, g))[0])


def pderiv(F, f):
    return trim(F.norm(i * a) for i, a in enumerate(f) if i)


def ppowmod(F, f, e, m):
    result = (F.one,)
    base = pmod(F, f, m)
    while e:
        if e & 1:
            result = pmod(F, pmul(F, result, base), m)
        base = pmod(F, pmul(F, base, base), m)
        e >>= 1
    return result


def reflect(F, f):
    """(-1)^deg f * f(-X); maps a monic polynomial to a monic polynomial."""
    d = deg(f)
    return trim(F.norm(a * (-1) ** (i + d)) for i, a in enumerate(f))


def peval_matrix(F, f, M):
    """f(M) by Horner's rule."""
    n = len(M)
    out = [[F.zero] * n for _ in range(n)]
    I = identity(F, n)
    for c in reversed(f):
        out = mat_add(F, mat_mul(F, out, M), mat_scale(F, c, I))
    return out


def to_str(f, var="X") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mon and c == 1:
            terms.append(mon)
        elif mon:
            terms.append(f"{c}*{mon}")
        else:
            terms.append(str(c))
    return " + ".join(terms)


# -- characteristic and minimal polynomials ----------------------------------

def _check_square(M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise InputError("characteristic polynomial of a non-square matrix")
    return n


def char_poly(F: Field, M) -> tuple:
    """Characteristic polynomial det(X I - M) via reduction to Hessenberg form."""
    H = coerce_matrix(F, M)
    n = _check_square(H)
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1] != 0), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for r in H:
                r[i], r[m] = r[m], r[i]
        t = F.inv(H[m][m - 1])
        for j in range(m + 1, n):
            u = F.norm(H[j][m - 1] * t)
            if u == 0:
                continue
            H[j] = [F.norm(a - u * b) for a, b in zip(H[j], H[m])]
            for r in H:
                r[m] = F.norm(r[m] + u * r[j])
    ps = [(F.one,)]
    for m in range(n):
        nxt = pmul(F, (F.neg(H[m][m]), F.one), ps[m])
        prod = F.one
        for i in range(m - 1, -1, -1):
            prod = F.norm(prod * H[i + 1][i])
            if prod == 0:
                break
            nxt = psub(F, nxt, pscale(F, F.norm(H[i][m] * prod), ps[i]))
        ps.append(nxt)
    return ps[n]


def local_min_poly(F: Field, M, v) -> tuple:
    """Monic generator of {f : f(M) v = 0}, from the Krylov sequence of ``v``."""
    if not any(v):
        return (F.one,)
    krylov = [tuple(v)]
    while True:
        w = mat_vec(F, M, krylov[-1])
        c = solve_linear(F, transpose(krylov), w)
        if c is not None:
            return trim([F.neg(x) for x in c] + [F.one])
        krylov.append(w)


def min_poly(F: Field, M) -> tuple:
    M = coerce_matrix(F, M)
    n = _check_square(M)
    if n == 0:
        return (F.one,)
    m = (F.one,)
    for i in range(n):
        e = tuple(F.one if k == i else F.zero for k in range(n))
        m = plcm(F, m, local_min_poly(F, M, e))
    return m


def char_min_poly(F: Field, M) -> tuple[tuple, tuple]:
    return char_poly(F, M), min_poly(F, M)


# -- factorization over GF(p) -------------------------------------------------

def _pth_root(F, f):
    p = F.p
    return trim(f[i] for i in range(0, len(f), p))


def squarefree_decomposition(F: Field, f) -> list[tuple[tuple, int]]:
    """Monic squarefree factors with multiplicities: f = lc * prod g_i^{m_i}."""
    if F.p is None:
        raise InputError("squarefree decomposition implemented over GF(p) only")
    f = monic(F, f)
    if deg(f) < 1:
        return []
    out: dict[int, tuple] = {}

    def merge(g, m):
        if deg(g) > 0:
            out[m] = pmul(F, out[m], g) if m in out else g

    i = 1
    c = pgcd(F, f, pderiv(F, f))
    w = pdivmod(F, f, c)[0]
    while deg(w) > 0:
        y = pgcd(F, w, c)
        merge(pdivmod(F, w, y)[0], i)
        w = y
        c = pdivmod(F, c, y)[0]
        i += 1
    if deg(c) > 0:
        for g, m in squarefree_decomposition(F, _pth_root(F, c)):
            merge(g, m * F.p)
    return sorted(((g, m) for m, g in out.items()), key=lambda t: t[1])


def berlekamp(F: Field, f) -> list[tuple]:
    """Split a monic squarefree polynomial over GF(p) into monic irreducibles."""
    f = monic(F, f)
    d = deg(f)
    if d <= 1:
        return [f] if d == 1 else []
    p = F.p
    Q = []
    xp = ppowmod(F, (F.zero, F.one), p, f)
    row = (F.one,)
    for _ in range(d):
        Q.append([row[k] if k < len(row) else F.zero for k in range(d)])
        row = pmod(F, pmul(F, row, xp), f)
    # g^p = g(X^p) = Q^T g
    QmI = [[F.norm(Q[j][i] - (1 if i == j else 0)) for j in range(d)] for i in range(d)]
    basis = kernel(F, QmI)
    k = len(basis)
    factors = [f]
    for g in basis:
        g = trim(g)
        if deg(g) < 1:
            continue
        for s in range(p):
            if len(factors) == k:
                break
            gs = psub(F, g, (s,))
            nxt = []
            for h in factors:
                if deg(h) <= 1:
                    nxt.append(h)
                    continue
                c = pgcd(F, h, gs)
                if 0 < deg(c) < deg(h):
                    nxt.extend([c, pdivmod(F, h, c)[0]])
                else:
                    nxt.append(h)
            factors = nxt
        if len(factors) == k:
            break
    return factors


def factor_over_prime_field(F: Field, f) -> list[tuple[tuple, int]]:
    """Irreducible monic factors of ``f`` with multiplicities, sorted by (degree, coefficients)."""
    if F.p is None:
        raise InputError("factorization over Q not provided; supply factors explicitly")
    f = poly(F, f)
    if not f:
        raise InputError("cannot factor the zero polynomial")
    out = []
    for g, m in squarefree_decomposition(F, f):
        out.extend((h, m) for h in berlekamp(F, g))
    return sorted(out, key=lambda t: (deg(t[0]), t[0]))


def is_irreducible_bruteforce(F: Field, f) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2 (small p only)."""
    f = poly(F, f)
    d = deg(f)
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for tail in cartesian(range(F.p), repeat=k):
            if not pmod(F, f, tuple(tail) + (F.one,)):
                return False
    return True


# -- primary decomposition ----------------------------------------------------

def multiplicity(F: Field, g, f) -> int:
    m = 0
    while f:
        q, r = pdivmod(F, f, g)
        if r:
            break
        f, m = q, m + 1
    return m


def primary_decomposition(F: Field, M, factors) -> list[Subspace]:
    """Bases of ker p_i(M)^{m_i}, m_i the multiplicity of p_i in the characteristic polynomial.

    ``factors`` must be the distinct monic irreducible factors; the product
    of p_i^{m_i} has to reproduce the characteristic polynomial.
    """
    M = coerce_matrix(F, M)
    n = _check_square(M)
    chi = char_poly(F, M)
    facs = [monic(F, poly(F, p)) for p in factors]
    if any(deg(p) < 1 for p in facs):
        raise InputError("factors must be nonconstant")
    mults = [multiplicity(F, p, chi) for p in facs]
    total = (F.one,)
    for p, m in zip(facs, mults):
        total = pmul(F, total, ppow(F, p, m))
    if total != chi:
        raise InputError("supplied factors do not reproduce the characteristic polynomial "
                         f"{to_str(chi)}")
    comps = []
    for p, m in zip(facs, mults):
        P = peval_matrix(F, ppow(F, p, m), M)
        comps.append(Subspace.span(F, n, kernel(F, P, n)))
    return comps
