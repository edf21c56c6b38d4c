"""JSON algebra files and report files.

An algebra file is ``{"field": ..., "presentation": ...}`` where the
presentation is one of

* ``{"kind": "bilinear", "matrix": B}``: the form B on V (characteristic not 2),
* ``{"kind": "char2", "phi": phi, "star": star}``: A(V, *, phi) over GF(2),
* ``{"kind": "structure", "constants": c, "unit_index": u}``: raw structure constants.

Scalars follow :meth:`Field.dump`: ``"a/b"`` strings over Q, integers over GF(p).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .algebra import Algebra, make_algebra
from .errors import InputError
from .field import Field

KINDS = ("bilinear", "char2", "structure")


def _scalars(F: Field, data, depth: int, where: str):
    """Load a ``depth``-fold nested list of scalars, reporting the offending path."""
    if depth == 0:
        try:
            return F.load(data)
        except InputError as exc:
            raise InputError(f"{where}: {exc}") from None
    if not isinstance(data, list):
        raise InputError(f"{where}: expected a list, got {type(data).__name__}")
    return tuple(_scalars(F, x, depth - 1, f"{where}[{i}]") for i, x in enumerate(data))


def _dump(F: Field, data):
    if isinstance(data, (list, tuple)):
        return [_dump(F, x) for x in data]
    return F.dump(data)


@dataclass(frozen=True)
class AlgebraFile:
    field: Field
    kind: str
    matrix: tuple | None = None  # bilinear
    phi: tuple | None = None  # char2
    star: tuple | None = None  # char2
    constants: tuple | None = None  # structure
    unit_index: int | None = None  # structure

    def to_json(self) -> dict:
        F = self.field
        if self.kind == "bilinear":
            pres = {"kind": "bilinear", "matrix": _dump(F, self.matrix)}
        elif self.kind == "char2":
            pres = {"kind": "char2", "phi": _dump(F, self.phi), "star": _dump(F, self.star)}
        else:
            pres = {"kind": "structure", "constants": _dump(F, self.constants)}
            if self.unit_index is not None:
                pres["unit_index"] = self.unit_index
        return {"field": F.describe(), "presentation": pres}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @property
    def char2(self) -> bool:
        return self.field.characteristic == 2

    def algebra(self) -> Algebra:
        if self.kind == "bilinear":
            return self.vidinli().algebra
        if self.kind == "char2":
            return self.char2_presentation().algebra
        return make_algebra(self.field, self.constants, self.unit_index)

    def vidinli(self):
        """The char-not-2 presentation (raises :class:`NotVidinli` for structure input that fails)."""
        from .charnot2 import from_bilinear_form, presentation_of
        if self.kind == "bilinear":
            return from_bilinear_form(self.field, self.matrix)
        if self.kind == "structure":
            return presentation_of(self.algebra())
        raise InputError("a char2 presentation has no characteristic-not-2 form")

    def char2_presentation(self):
        from .char2 import extract_char2_presentation, make_char2_presentation
        if self.kind == "char2":
            return make_char2_presentation(self.field, self.star, self.phi)
        if self.kind == "structure":
            return extract_char2_presentation(self.algebra())
        raise InputError("a bilinear presentation needs characteristic not 2")


def algebra_file_from_json(d, default_field: Field | None = None) -> AlgebraFile:
    if not isinstance(d, dict):
        raise InputError("top level: expected an object with 'field' and 'presentation'")
    extra = set(d) - {"field", "presentation"}
    if extra:
        raise InputError(f"top level: unknown keys {sorted(extra)}")
    if "field" in d:
        F = Field.from_description(d["field"])
        if default_field is not None and default_field != F:
            raise InputError(f"field: file says {F}, --field says {default_field}")
    elif default_field is not None:
        F = default_field
    else:
        raise InputError("field: missing (add it to the file or pass --field)")
    pres = d.get("presentation")
    if not isinstance(pres, dict) or "kind" not in pres:
        raise InputError("presentation: expected an object with a 'kind'")
    kind = pres["kind"]
    if kind not in KINDS:
        raise InputError(f"presentation.kind: expected one of {KINDS}, got {kind!r}")
    allowed = {"bilinear": {"kind", "matrix"}, "char2": {"kind", "phi", "star"},
               "structure": {"kind", "constants", "unit_index"}}[kind]
    extra = set(pres) - allowed
    if extra:
        raise InputError(f"presentation: keys {sorted(extra)} do not belong to kind {kind!r}")

    def need(key):
        if key not in pres:
            raise InputError(f"presentation.{key}: missing")
        return pres[key]

    if kind == "bilinear":
        if F.characteristic == 2:
            raise InputError("presentation.kind: 'bilinear' needs characteristic not 2; "
                             "over GF(2) use the 'char2' presentation with phi and star")
        return AlgebraFile(F, kind, matrix=_scalars(F, need("matrix"), 2, "presentation.matrix"))
    if kind == "char2":
        if F.characteristic != 2:
            raise InputError("presentation.kind: 'char2' needs field GF(2)")
        return AlgebraFile(F, kind, phi=_scalars(F, need("phi"), 2, "presentation.phi"),
                           star=_scalars(F, need("star"), 3, "presentation.star"))
    u = pres.get("unit_index")
    if u is not None and (isinstance(u, bool) or not isinstance(u, int)):
        raise InputError(f"presentation.unit_index: expected an integer, got {u!r}")
    return AlgebraFile(F, kind, constants=_scalars(F, need("constants"), 3, "presentation.constants"),
                       unit_index=u)


def loads_algebra_file(text: str, default_field: Field | None = None) -> AlgebraFile:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return algebra_file_from_json(d, default_field)


def read_algebra_file(path, default_field: Field | None = None) -> tuple[AlgebraFile, str]:
    """Parse ``path``; returns the file and the sha256 of its bytes."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        af = loads_algebra_file(raw.decode("utf-8"), default_field)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None
    return af, hashlib.sha256(raw).hexdigest()


def bilinear_file(F: Field, B) -> AlgebraFile:
    return AlgebraFile(F, "bilinear", matrix=tuple(tuple(F(x) for x in r) for r in B))


def char2_file(P) -> AlgebraFile:
    return AlgebraFile(P.field, "char2", phi=P.phi, star=P.star)


def structure_file(A: Algebra) -> AlgebraFile:
    return AlgebraFile(A.field, "structure", constants=A.constants, unit_index=A.unit_index)


def subspace_from_json(F: Field, ambient: int, rows):
    from .linalg import Subspace
    return Subspace.span(F, ambient, [_scalars(F, r, 1, "basis") for r in rows])


def make_report(command: list[str], digests: dict, result: dict, verification: dict) -> dict:
    return {"command": list(command), "input_sha256": dict(digests), "result": result,
            "verification": dict(verification), "ok": all(bool(v) for v in verification.values())}


def reverify_report(report: dict, af: AlgebraFile) -> dict:
    """Recheck every subspace claimed in a reloaded report against its defining property."""
    from .algebra import centers, is_ideal, is_subalgebra, span_product
    A = af.algebra()
    F, n = A.field, A.dim
    res = report["result"]
    out = {}
    if "rad_basis" in res:
        rad = subspace_from_json(F, n, res["rad_basis"])
        S = subspace_from_json(F, n, res["complement_S"])
        out["rad_is_ideal"] = is_ideal(A, rad)
        out["rad_squares_to_zero"] = span_product(A, rad, rad).dim == 0
        out["S_unital_subalgebra"] = is_subalgebra(A, S) and S.contains(A.one)
        out["S_plus_rad_is_A"] = S.dim + rad.dim == n and (S + rad).dim == n
    if "Z" in res and "N" in res:
        c = centers(A)
        for key, sub in (("K", c.K), ("N", c.N), ("Z", c.Z)):
            if key in res:
                out[f"{key}_matches"] = subspace_from_json(F, n, res[key]) == sub
    if "components" in res:
        from .algebra import is_subalgebra as sub_ok
        comps = [subspace_from_json(F, n, C) for C in res["components"]]
        total = sum(C.dim for C in comps)
        out["components_direct"] = total == (sum(comps[1:], comps[0]).dim if comps else 0)
        out["subalgebras"] = all(sub_ok(A, subspace_from_json(F, n, S)) for S in res.get("subalgebras", []))
    return out
