"""Acceptance gate: eleven exact criteria, one pass/fail line each in the
terminal summary (see conftest).  Run alone with ``pytest tests/test_acceptance.py``."""
import random
import time
from functools import lru_cache
from itertools import combinations, product

import pytest

from vidinli.algebra import centers, is_homomorphism, is_ideal, iter_unital_isomorphisms, make_algebra, span_product
from vidinli.char2 import (all_presentations, center_char2, char2_norm, classify_dim2, iso_test_char2,
                           make_char2_presentation, twist, upsilon)
from vidinli.charnot2 import (center_report, corollary_checks, coskun_eden_example, count_automorphisms_small,
                              derivations_skew, from_bilinear_form, is_vidinli, lie_mult_algebra_report,
                              mult_algebra_report, radical, sigma_decompose, structure_report)
from vidinli.conic import conic_norm
from vidinli.errors import NotVidinli
from vidinli.field import GF, QQ
from vidinli.linalg import Subspace, inverse, mat_mul
from vidinli.operators import derivations_generic
from vidinli.poly import char_min_poly

GF2, GF3, GF5, GF7 = GF(2), GF(3), GF(5), GF(7)


def random_form(F, m, rng):
    """Random form on F^m, biased towards degenerate and symmetric shapes."""
    kind = rng.randrange(4)
    if kind == 0:  # low rank
        r = rng.randrange(m)
        X = [[F.random(rng) for _ in range(r)] for _ in range(m)]
        Y = [[F.random(rng) for _ in range(m)] for _ in range(r)]
        return mat_mul(F, X, Y) if r else [[F.zero] * m for _ in range(m)]
    B = [[F.random(rng) for _ in range(m)] for _ in range(m)]
    if kind == 1:  # symmetric
        B = [[B[min(i, j)][max(i, j)] for j in range(m)] for i in range(m)]
    return B


@lru_cache(maxsize=None)
def pool_round_trip():
    rng = random.Random(20240101)
    out = []
    for F in (GF5, QQ):
        for k in range(100):
            m = 1 + k % 5
            out.append((F, random_form(F, m, rng)))
    return out


@lru_cache(maxsize=None)
def pool_small_oracle():
    """GF(3) and GF(5) instances with dim A <= 4, small enough for exhaustive ideal enumeration."""
    rng = random.Random(7)
    out = [(F, B) for F, B in pool_round_trip() if F == GF5 and len(B) <= 3]
    for k in range(60):
        out.append((GF3, random_form(GF3, 1 + k % 3, rng)))
    out += [(GF5, [[-1]]), (GF3, [[-1]]), (GF3, [[1]]), (GF5, [[0, 1], [-1, 0]]), (GF3, [[0, 1], [-1, 0]])]
    return out


def timed(budget):
    class _T:
        def __enter__(self):
            self.t = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.t
            if exc[0] is None:
                assert self.elapsed < budget, f"runtime {self.elapsed:.1f}s exceeds {budget}s"
    return _T()


@lru_cache(maxsize=None)
def pool_derivations():
    rng = random.Random(3)
    return [(GF7, random_form(GF7, 1 + k % 5, rng)) for k in range(100)]


MULT_CASES = {
    (GF3, ((0, 1), (-1, 0))): "d",          # nonsymmetric
    (GF5, ((1, 0), (0, 1))): "d",           # symmetric, quotient dim 3
    (GF7, ((1, 0, 0), (0, 2, 0), (0, 0, 0))): "d",
    (GF3, ((0, 0), (0, 0))): "e",
    (GF5, ((1, 0), (0, 0))): "f",
    (QQ, ((-1, 0), (0, 0))): "f",
}


@lru_cache(maxsize=None)
def pool_operators():
    rng = random.Random(5)
    return [((GF5, GF7, QQ)[k % 3], random_form((GF5, GF7, QQ)[k % 3], 1 + k % 3, rng)) for k in range(30)]


def all_char_not2_instances():
    """Every presentation exercised by criteria 1-7."""
    out = pool_round_trip() + pool_small_oracle() + pool_derivations() + pool_operators()
    out += [(F, [list(r) for r in B]) for F, B in MULT_CASES]
    out += [(GF3, [list(e[:m]), list(e[m:])] if m == 2 else [list(e)])
            for m in (1, 2) for e in product(range(3), repeat=m * m)]
    out += [(F, [[0] * n] * n) for F in (GF5, GF7) for n in (1, 2, 3)]
    out += [(GF7, [[1, 0], [0, 1]]), (GF7, [[0, 1], [-1, 0]]), (GF5, [[1, 0], [0, 2]])]
    Ps = [from_bilinear_form(F, B) for F, B in out]
    Ps += [coskun_eden_example(n, QQ) for n in (1, 2, 3)]
    Ps += [coskun_eden_example(1, GF3), coskun_eden_example(2, GF5)]
    return Ps


def test_criterion_01_round_trip_construction():
    with timed(5):
        for F, B in pool_round_trip():
            P = from_bilinear_form(F, B)
            again = is_vidinli(P.algebra)
            assert again is not None
            assert again.B_on_V == [[F(x) for x in r] for r in B]


def test_criterion_02_radical_and_quotient():
    with timed(30):
        for F, B in pool_round_trip():
            P = from_bilinear_form(F, B)
            rad = radical(P)
            assert is_ideal(P.algebra, rad) and span_product(P.algebra, rad, rad).dim == 0
        n_oracle = 0
        for F, B in pool_small_oracle():
            P = from_bilinear_form(F, B)
            rep = structure_report(P, oracle=True, oracle_bound=625, with_dims=False)
            assert all(rep.checks.values()), rep.checks
            assert rep.oracle["quotient_class"] == rep.quotient_class
            n_oracle += 1
        assert n_oracle >= 100


def test_criterion_03_derivations():
    with timed(30):
        for F, B in pool_derivations():
            P = from_bilinear_form(F, B)
            assert derivations_skew(P) == derivations_generic(P.algebra)
        for n in (1, 2, 3):
            assert derivations_skew(from_bilinear_form(GF7, [[0] * n] * n)).dim == n * n
        assert derivations_skew(from_bilinear_form(GF7, [[1, 0], [0, 1]])).dim == 1
        assert derivations_skew(from_bilinear_form(GF7, [[0, 1], [-1, 0]])).dim == 3


def test_criterion_04_automorphisms_are_isometries():
    with timed(60):
        counts = {}
        for m in (1, 2):
            for entries in product(range(3), repeat=m * m):
                B = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
                res = count_automorphisms_small(from_bilinear_form(GF3, B))
                counts[(3, tuple(entries))] = res.automorphisms
                assert res.isometries == res.automorphisms
            zero = [[0] * m for _ in range(m)]
            for entries in product(range(2), repeat=m * m):
                phi = [list(entries[i * m:(i + 1) * m]) for i in range(m)]
                res = count_automorphisms_small(make_char2_presentation(GF2, [[zero[0]] * m] * m, phi))
                assert res.isometries == res.automorphisms
        assert counts[(3, (0, 1, 2, 0))] == 24


def test_criterion_05_multiplication_algebra():
    with timed(60):
        seen_cases = set()
        for (F, B), case in list(MULT_CASES.items()) + [((F, B), None) for F, B in pool_operators()]:
            P = from_bilinear_form(F, B)
            rep = mult_algebra_report(P)
            assert rep.match, (F, B)
            assert all(rep.checks.values()), rep.checks
            if case is not None:
                assert rep.case == case
            seen_cases.add((rep.case, rep.symmetric))
        assert {("d", False), ("d", True), ("e", True), ("f", True)} <= seen_cases
        assert mult_algebra_report(from_bilinear_form(GF3, [[0, 1], [-1, 0]])).computed.dim == 9
        assert mult_algebra_report(from_bilinear_form(GF3, [[0, 0], [0, 0]])).computed.dim == 3
        assert mult_algebra_report(from_bilinear_form(GF5, [[1, 0], [0, 0]])).computed.dim == 5


def test_criterion_06_lie_multiplication_algebra():
    """The worked dimensions 4, 1+n and 9, each at the field named by its example."""
    with timed(60):
        for F, B in pool_operators():
            assert lie_mult_algebra_report(from_bilinear_form(F, B)).match
        r4 = lie_mult_algebra_report(from_bilinear_form(GF7, [[1, 0], [0, 1]]))
        assert r4.symmetric and r4.match and r4.computed.dim == 4
        for n in (1, 2, 3):
            rn = lie_mult_algebra_report(from_bilinear_form(GF5, [[0] * n] * n))
            assert rn.match and rn.computed.dim == 1 + n
        r9_gf7 = lie_mult_algebra_report(from_bilinear_form(GF7, [[0, 1], [-1, 0]]))
        assert not r9_gf7.symmetric and r9_gf7.match and r9_gf7.computed.dim == 9
        r9 = lie_mult_algebra_report(from_bilinear_form(GF3, [[0, 1], [-1, 0]]))
        assert not r9.symmetric and r9.match
        assert r9.computed.dim == 9, (
            f"skew nondegenerate B on 2-dim V over GF(3): computed dim {r9.computed.dim}, "
            f"predicted dim {r9.predicted.dim}; id has trace 3 = 0 there")


def test_criterion_07_sigma_decomposition():
    with timed(10):
        for n in (1, 2, 3):
            P = coskun_eden_example(n, QQ)
            sigma = sigma_decompose(P, factors_override=[[1, 0, 1]])
            assert all(sigma.checks.values()), sigma.checks
            assert char_min_poly(QQ, sigma.sigma)[1] == (1, 0, 1)
            assert (sigma.r, sigma.s) == (1, 0)
        d3 = sigma_decompose(coskun_eden_example(1, GF3))
        assert d3.factors[0][0] == (1, 0, 1) and d3.pairing == ("self_paired",) and d3.r == 1
        assert all(d3.checks.values())
        d5 = sigma_decompose(coskun_eden_example(2, GF5))
        assert {f for f, _, _ in d5.factors} == {(2, 1), (3, 1)}
        assert d5.pairing == ("isotropic_pair", "isotropic_pair") and (d5.r, d5.s) == (0, 1)
        assert all(d5.checks.values()), d5.checks
        d0 = sigma_decompose(from_bilinear_form(GF5, [[1, 0], [0, 2]]))
        assert d0.factors == (((0, 1), 2, 0),) and d0.r == 1 and d0.s == 0


def test_criterion_08_corollaries():
    Ps = all_char_not2_instances()
    assert len(Ps) >= 400
    for P in Ps:
        assert all(corollary_checks(P).values()), P.B_on_V


@lru_cache(maxsize=None)
def random_char2_presentations():
    rng = random.Random(9)
    allp = list(all_presentations(GF2, 2))
    return [allp[rng.randrange(len(allp))] for _ in range(50)]


def unital_3dim_gf2():
    """All 4096 algebras on basis 1, e1, e2 over GF(2) with 1 as unity."""
    for c in product(product(range(2), repeat=3), repeat=4):
        t = [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], list(c[0]), list(c[1])],
             [[0, 0, 1], list(c[2]), list(c[3])]]
        yield make_algebra(GF2, t, 0)


def generic_vidinli(A):
    """Conic with every commutator on the unity line, tested without the char-2 shortcut."""
    try:
        conic_norm(A)
    except NotVidinli:
        return False
    line = Subspace.span(A.field, A.dim, [A.one])
    return all(line.contains(A.commutator(A.basis(i), A.basis(j))) for i in range(A.dim) for j in range(A.dim))


def test_criterion_09_characteristic_two():
    with timed(120):
        pres = random_char2_presentations()
        vidinli_count = 0
        for A in unital_3dim_gf2():
            if not generic_vidinli(A):
                continue
            vidinli_count += 1
            q = conic_norm(A)
            assert all(q.polar(A.basis(i), A.one) == 0 for i in range(3))
            assert char2_norm(A).qA1_zero
        assert vidinli_count == len(list(all_presentations(GF2, 2)))
        for P in pres:
            for f in product(range(2), repeat=2):
                Q = twist(P, f)
                assert twist(Q, f) == P
                U = upsilon(P, f, [[1, 0], [0, 1]])
                assert is_homomorphism(P.algebra, Q.algebra, U) and inverse(GF2, U) is not None
                assert iso_test_char2(P, Q) is not None
        agree = 0
        for P, Q in combinations(pres, 2):
            w = iso_test_char2(P, Q)
            brute = next(iter_unital_isomorphisms(P.algebra, Q.algebra), None)
            assert (w is None) == (brute is None)
            agree += 1
        assert agree == 50 * 49 // 2


def test_criterion_10_dimension_two():
    with timed(1):
        table = {
            "dual_numbers": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
            "split_FxF": [[[1, 0], [0, 1]], [[0, 1], [0, 1]]],
            "separable_quadratic": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]],
        }
        for tag, c in table.items():
            assert classify_dim2(make_algebra(GF2, c, 0)).tag == tag
        tags = {classify_dim2(make_algebra(GF2, [[[1, 0], [0, 1]], [[0, 1], [a, b]]], 0)).tag
                for a in range(2) for b in range(2)}
        assert tags == set(table) and "purely_inseparable" not in tags
        assert all(GF2.is_square(x) for x in GF2.elements())


def test_criterion_11_nucleus_equals_center():
    for P in all_char_not2_instances():
        rep = center_report(P)
        assert rep.N == rep.Z
    for P in random_char2_presentations():
        rep = center_char2(P.algebra)
        assert rep.N == rep.Z
    for c in product(range(2), repeat=2):
        A = make_algebra(GF2, [[[1, 0], [0, 1]], [[0, 1], list(c)]], 0)
        assert center_char2(A).Z == centers(A).Z and centers(A).Z.dim == 2


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
