"""Command-line front end.

Exit codes: 0 success, 1 input error (or a non-Vidinli algebra under
``verify``), 2 a structural property failed on the instance.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import poly as P_
from .algebra import (DEFAULT_ENUMERATION_BOUND, enumerate_ideals, identity_predicates,
                      is_ideal, iter_unital_isomorphisms)
from .errors import InputError, NotVidinli, PropertyViolation
from .field import Field
from .serialize import AlgebraFile, bilinear_file, make_report, read_algebra_file


@dataclass
class RunConfig:
    field: Field | None = None
    out: str | None = None
    format: str = "json"
    max_iso_dim: int = 4
    oracle: bool = False
    factors: list | None = None
    max_enum: int = DEFAULT_ENUMERATION_BOUND


class _NotVidinliExit(Exception):
    """verify found a non-Vidinli algebra: report it and exit 1."""


def _parse_factors(text: str | None):
    """``"1,0,1;2,1"`` -> [[1, 0, 1], [2, 1]] (coefficients lowest degree first)."""
    if not text:
        return None
    return [[c.strip() for c in part.split(",")] for part in text.split(";") if part.strip()]


def _dims_json(span) -> dict:
    return {"dim": span.dim, "basis": span.to_json()}


# -- command handlers: each returns (result, verification) -------------------------------

def cmd_verify(cfg: RunConfig, af: AlgebraFile):
    if af.char2:
        from .char2 import is_vidinli_char2
        A = af.algebra()
        norm = is_vidinli_char2(A)
        if norm is None:
            raise _NotVidinliExit({"vidinli": False, "reason": "not_conic_or_bracket"})
        F = A.field
        return ({"vidinli": True, "characteristic": 2, "dim": A.dim,
                 "q_values": [F.dump(x) for x in norm.q_values], "qA1_zero": norm.qA1_zero},
                {"qA1_zero": norm.qA1_zero or A.dim <= 2})
    try:
        P = af.vidinli()
    except NotVidinli as exc:
        raise _NotVidinliExit({"vidinli": False, "reason": exc.reason, "detail": exc.detail}) from None
    checks = {}
    if af.kind == "bilinear":
        from .charnot2 import presentation_of
        again = presentation_of(P.algebra)
        checks["round_trip_B"] = [list(r) for r in again.B_on_V] == [list(r) for r in af.matrix]
    res = {"vidinli": True, "characteristic": P.field.characteristic, "dim": P.dim}
    res.update(P.to_json())
    res["symmetric"] = P.is_symmetric
    return res, checks


def cmd_analyze(cfg: RunConfig, af: AlgebraFile):
    if af.char2:
        return _analyze_char2(cfg, af)
    from .charnot2 import center_report, corollary_checks, structure_report
    P = af.vidinli()
    if cfg.oracle:
        rep = structure_report(P, oracle=True, oracle_bound=cfg.max_enum)
    else:
        rep = structure_report(P)
    cent = center_report(P)
    cor = corollary_checks(P)
    res = rep.to_json()
    res["center"] = cent.to_json()
    res["corollaries"] = cor
    return res, {**rep.checks, **cor}


def _analyze_char2(cfg: RunConfig, af: AlgebraFile):
    from .char2 import center_char2, char2_norm, classify_dim2, extract_char2_presentation
    A = af.algebra()
    F = A.field
    norm = char2_norm(A)
    cent = center_char2(A)
    ids = identity_predicates(A)
    res = {"dim": A.dim, "q_values": [F.dump(x) for x in norm.q_values], "qA1_zero": norm.qA1_zero,
           "center": {"Z": cent.Z.to_json(), "N": cent.N.to_json(), "branch": cent.branch},
           "identities": asdict(ids)}
    checks = {"N_equals_Z": cent.N == cent.Z}
    if A.dim == 2:
        c = classify_dim2(A)
        res["dim2_class"] = {"tag": c.tag, "x": [F.dump(v) for v in c.x],
                             "min_poly": P_.to_str(c.min_poly)}
    if A.dim >= 3:
        res["presentation"] = extract_char2_presentation(A).to_json()
        checks["qA1_zero"] = norm.qA1_zero
    return res, checks


def cmd_derivations(cfg: RunConfig, af: AlgebraFile):
    from .operators import derivations_generic
    A = af.algebra()
    gen = derivations_generic(A)
    if af.char2:
        return {"generic": _dims_json(gen)}, {}
    from .charnot2 import derivations_skew
    skew = derivations_skew(af.vidinli())
    return ({"dim": skew.dim, "basis": skew.to_json(), "generic_dim": gen.dim},
            {"skew_equals_generic": skew == gen})


def cmd_multalg(cfg: RunConfig, af: AlgebraFile):
    if af.char2:
        from .operators import mult_algebra_closure
        return {"computed": _dims_json(mult_algebra_closure(af.algebra()))}, {}
    from .charnot2 import mult_algebra_report
    rep = mult_algebra_report(af.vidinli())
    return rep.to_json(), {"match": rep.match, **rep.checks}


def cmd_liemultalg(cfg: RunConfig, af: AlgebraFile):
    if af.char2:
        from .operators import lie_mult_algebra_closure
        return {"computed": _dims_json(lie_mult_algebra_closure(af.algebra()))}, {}
    from .charnot2 import lie_mult_algebra_report
    rep = lie_mult_algebra_report(af.vidinli())
    return rep.to_json(), {"match": rep.match}


def cmd_decompose(cfg: RunConfig, af: AlgebraFile):
    if af.char2:
        raise InputError("decompose needs characteristic not 2")
    from .charnot2 import sigma_decompose
    P = af.vidinli()
    d = sigma_decompose(P, cfg.factors)
    return d.to_json(P.field), dict(d.checks)


def cmd_centers(cfg: RunConfig, af: AlgebraFile):
    if af.char2:
        from .char2 import center_char2
        c = center_char2(af.algebra())
        return {"Z": c.Z.to_json(), "N": c.N.to_json(), "branch": c.branch}, {"N_equals_Z": c.N == c.Z}
    from .charnot2 import center_report
    c = center_report(af.vidinli())
    return c.to_json(), {"N_equals_Z": c.N == c.Z}


def cmd_iso(cfg: RunConfig, af: AlgebraFile, bf: AlgebraFile):
    if not (af.char2 and bf.char2):
        raise InputError("iso supports characteristic-2 presentations A(V, *, phi) over GF(2) only")
    from .char2 import iso_test_char2
    P, Q = af.char2_presentation(), bf.char2_presentation()
    w = iso_test_char2(P, Q, cfg.max_iso_dim)
    res = {"isomorphic": w is not None, "witness": None if w is None else w.to_json(P.field)}
    checks = {}
    if cfg.oracle:
        brute = next(iter_unital_isomorphisms(P.algebra, Q.algebra, cfg.max_enum), None)
        checks["oracle_agrees"] = (brute is not None) == (w is not None)
    return res, checks


def cmd_classify2(cfg: RunConfig, af: AlgebraFile):
    from .char2 import classify_dim2
    A = af.algebra()
    if not af.char2:
        raise InputError("classify2 needs a 2-dimensional algebra over GF(2)")
    c = classify_dim2(A)
    F = A.field
    return ({"tag": c.tag, "x": [F.dump(v) for v in c.x],
             "min_poly": [F.dump(v) for v in c.min_poly], "min_poly_text": P_.to_str(c.min_poly),
             "witness": None if c.witness is None else [F.dump(v) for v in c.witness]}, {})


def cmd_oracle_ideals(cfg: RunConfig, af: AlgebraFile):
    A = af.algebra()
    ideals = enumerate_ideals(A, cfg.max_enum, sums=True)
    res = {"count": len(ideals), "simple": len(ideals) == 2,
           "ideals": [I.to_json() for I in ideals]}
    return res, {"all_ideals": all(is_ideal(A, I) for I in ideals)}


HANDLERS = {
    "verify": cmd_verify, "analyze": cmd_analyze, "derivations": cmd_derivations,
    "multalg": cmd_multalg, "liemultalg": cmd_liemultalg, "decompose": cmd_decompose,
    "centers": cmd_centers, "classify2": cmd_classify2, "oracle-ideals": cmd_oracle_ideals,
}


# -- output ---------------------------------------------------------------------

def _compact(v) -> str:
    return json.dumps(v, separators=(",", ":"))


def render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{k}:")
            lines.extend(render_text(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {v if isinstance(v, (str, bool, int)) or v is None else _compact(v)}")
    return lines


def _emit(cfg: RunConfig, payload: dict):
    if cfg.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "\n".join(render_text(payload)) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=Field.parse, default=None,
                        help="ground field (Q or GF(p)); required when the file has none")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--max-iso-dim", type=int, default=4, help="largest dim V for iso searches")
    common.add_argument("--max-enum", type=int, default=DEFAULT_ENUMERATION_BOUND,
                        help="size bound for exhaustive enumerations")
    common.add_argument("--oracle", action="store_true", help="force finite-field cross-checks")
    common.add_argument("--factors", help="irreducible factors of the char poly of sigma, "
                                          "e.g. '1,0,1' for X^2+1; separate factors with ';'")

    p = argparse.ArgumentParser(prog="vidinli", description="Vidinli algebras over Q and GF(p).")
    sub = p.add_subparsers(dest="command", required=True)
    for name in HANDLERS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file")
    sp = sub.add_parser("iso", parents=[common], help="isomorphism test for two char-2 presentations")
    sp.add_argument("file")
    sp.add_argument("other")
    sp = sub.add_parser("example", parents=[common], help="write a named example algebra file")
    sp.add_argument("name", choices=("coskun-eden",))
    sp.add_argument("n", type=int)
    return p


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    cfg = RunConfig(args.field, args.out, args.format, args.max_iso_dim, args.oracle,
                    _parse_factors(args.factors), args.max_enum)
    try:
        if args.command == "example":
            from .charnot2 import coskun_eden_example
            from .field import QQ
            if args.n < 1:
                raise InputError("n must be at least 1")
            P = coskun_eden_example(args.n, cfg.field or QQ)
            payload = bilinear_file(P.field, P.B_on_V).to_json()
            _emit(cfg, payload)
            return 0
        af, digest = read_algebra_file(args.file, cfg.field)
        digests = {args.file: digest}
        if args.command == "iso":
            bf, d2 = read_algebra_file(args.other, cfg.field)
            digests[args.other] = d2
            result, checks = cmd_iso(cfg, af, bf)
        else:
            result, checks = HANDLERS[args.command](cfg, af)
    except _NotVidinliExit as exc:
        report = make_report(["vidinli", *argv], digests, exc.args[0], {})
        report["ok"] = False
        _emit(cfg, report)
        return 1
    except PropertyViolation as exc:
        print(f"vidinli: property violated: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"vidinli: error: {exc}", file=sys.stderr)
        return 1
    report = make_report(["vidinli", *argv], digests, result, checks)
    _emit(cfg, report)
    if not report["ok"]:
        failed = [k for k, v in checks.items() if not v]
        print(f"vidinli: property violated: {', '.join(failed)}", file=sys.stderr)
        return 2
    return 0


def main(argv: list[str] | None = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
