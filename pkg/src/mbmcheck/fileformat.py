"""JSON structure files: the data model, validation, and canonical serialization.

A file holds a field, a grade group with its bicharacter, named atomic
objects, named matrices between object expressions, named structures built
from those matrices, and a list of check requests::

    {
      "version": 1,
      "field": "rational",
      "grades": {"moduli": [2]},
      "bicharacter": [["1", "1"], ["1", "-1"]],
      "objects": {"A": {"basis": ["x", "y"], "grades": [[0], [1]]}},
      "morphisms": {"e": {"dom": "A", "cod": "I", "matrix": [["1", "0"]]}},
      "structures": {"R": {"kind": "regular", "object": "A", "t1": "t1", ...}},
      "checks": [{"structure": "R", "check": "regular"}]
    }

An object expression is a dot-separated word in object names, with ``I``
for the unit.  Matrices are row-major with rows indexed by the codomain.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field as dc_field

from .exactcore.context import GradedContext, context_from_table
from .exactcore.errors import MbmError, ShapeError
from .exactcore.fields import Field, field_from_spec
from .exactcore.graded import GradedObject, GradeGroup, make_object, tensor_obj, unit_object
from .exactcore.morphism import LinearMap, Morphism

FORMAT_VERSION = 1

STRUCTURE_KINDS = {
    "fusion": ("t", "e"),
    "mbm": ("t1", "t2", "e"),
    "regular": ("t1", "t2", "t3", "t4", "e"),
    "bimonoid": ("m", "u", "d", "e"),
    "comodule": ("v1", "v3"),
    "module": ("q1", "q4"),
}
OVER_KINDS = ("comodule", "module")


class FileFormatError(MbmError):
    """An input file that cannot be read; ``location`` is a dotted path into it."""

    def __init__(self, location, message):
        super().__init__(f"{location}: {message}")
        self.location = location


@dataclass
class MorphismEntry:
    dom: str
    cod: str
    map: Morphism


@dataclass
class StructureFile:
    field: Field
    group: GradeGroup
    bicharacter: list
    objects: dict
    morphisms: dict
    structures: dict
    checks: list = dc_field(default_factory=list)
    version: int = FORMAT_VERSION

    # -- resolution ----------------------------------------------------------

    def context(self) -> GradedContext:
        return context_from_table(self.group.moduli, self.bicharacter, self.field, name="file")

    def object(self, expr: str, where="object") -> GradedObject:
        parts = [p for p in str(expr).split(".")]
        out = []
        for p in parts:
            if p == "I":
                continue
            if p not in self.objects:
                raise FileFormatError(where, f"unknown object {p!r} in expression {expr!r}")
            out.append(self.objects[p])
        if not out:
            return unit_object(self.group)
        return tensor_obj(*out)

    def morphism(self, name, where="morphism") -> Morphism:
        if name not in self.morphisms:
            raise FileFormatError(where, f"dangling morphism name {name!r}")
        return self.morphisms[name].map

    def structure(self, name):
        """Build the library object for a named structure."""
        from .builders import Bimonoid
        from .mbm import MultiplierBimonoid, RegularMultiplierBimonoid
        from .fusion import CounitalFusion
        from .repcat import RegComodule, RegModule

        if name not in self.structures:
            raise FileFormatError("structures", f"unknown structure {name!r}")
        spec = self.structures[name]
        where = f"structures.{name}"
        kind = spec["kind"]
        X = self.object(spec["object"], where + ".object")
        maps = {k: self.morphism(spec[k], f"{where}.{k}") for k in STRUCTURE_KINDS[kind]}
        if kind in OVER_KINDS:
            R = self.structure(spec["over"])
            if not isinstance(R, RegularMultiplierBimonoid):
                raise FileFormatError(where + ".over", f"{spec['over']!r} is not a regular structure")
            cls = RegComodule if kind == "comodule" else RegModule
            return cls(R, X, *maps.values())
        ctx = self.context()
        if kind == "fusion":
            return CounitalFusion(ctx, X, maps["t"], maps["e"])
        if kind == "mbm":
            return MultiplierBimonoid(ctx, X, maps["t1"], maps["t2"], maps["e"])
        if kind == "regular":
            return RegularMultiplierBimonoid(ctx, X, *maps.values())
        return Bimonoid(ctx, X, *maps.values())

    def structure_hash(self, name) -> str:
        """Content hash of a structure: scalars, grades and matrices, not names."""
        spec = self.structures[name]
        payload = {
            "field": self.field.name,
            "moduli": list(self.group.moduli),
            "bicharacter": self.bicharacter,
            "kind": spec["kind"],
            "object": _object_json(self.object(spec["object"]), keys=True),
            "maps": {k: _matrix_json(self.morphism(spec[k]), self.field)
                     for k in STRUCTURE_KINDS[spec["kind"]]},
        }
        if spec["kind"] in OVER_KINDS:
            payload["over"] = self.structure_hash(spec["over"])
        return _sha256(payload)

    # -- serialization -------------------------------------------------------

    def to_dict(self):
        return {
            "version": self.version,
            "field": self.field.name,
            "grades": {"moduli": list(self.group.moduli)},
            "bicharacter": [list(row) for row in self.bicharacter],
            "objects": {n: _object_json(X) for n, X in self.objects.items()},
            "morphisms": {
                n: {"dom": m.dom, "cod": m.cod, "matrix": _matrix_json(m.map, self.field)}
                for n, m in self.morphisms.items()
            },
            "structures": {n: dict(s) for n, s in self.structures.items()},
            "checks": [dict(c) for c in self.checks],
        }

    def dumps(self) -> str:
        return dumps(self.to_dict())

    def content_hash(self) -> str:
        return _sha256(self.to_dict())


def dumps(doc) -> str:
    """Canonical text: sorted keys, two-space indent, flat lists on one line."""
    return _dump(doc, 0) + "\n"


def _dump(x, depth):
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_dump(x[k], depth + 1)}"
                 for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, (list, tuple)):
        if not any(isinstance(v, (dict, list, tuple)) for v in x):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in x) + "]"
        return "[\n" + ",\n".join(inner + _dump(v, depth + 1) for v in x) + "\n" + pad + "]"
    return json.dumps(x, ensure_ascii=False)


def _sha256(doc) -> str:
    text = json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _object_json(X: GradedObject, keys=False):
    basis = [".".join(k) for k in X.keys] if keys else [k[0] for k in X.keys]
    return {"basis": basis, "grades": [list(g) for g in X.grades]}


def _matrix_json(f: LinearMap, fld: Field):
    return [[fld.format(v) for v in row] for row in f.materialize().rows()]


# -- parsing -------------------------------------------------------------------


def _require(cond, where, message):
    if not cond:
        raise FileFormatError(where, message)


def _parse_scalar(fld, v, where):
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise FileFormatError(where, f"scalar must be a string or integer, got {v!r}")
    try:
        return fld.normalize(fld.parse(str(v)))
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(where, str(exc)) from None


def from_dict(doc) -> StructureFile:
    _require(isinstance(doc, dict), "$", "top level must be a JSON object")
    known = {"version", "field", "grades", "bicharacter", "objects", "morphisms", "structures", "checks"}
    extra = sorted(set(doc) - known)
    _require(not extra, "$", f"unknown top-level keys {extra}")
    for key in ("version", "field", "objects", "morphisms", "structures"):
        _require(key in doc, "$", f"missing key {key!r}")
    _require(doc["version"] == FORMAT_VERSION, "version",
             f"unsupported version {doc['version']!r}, expected {FORMAT_VERSION}")
    try:
        fld = field_from_spec(doc["field"])
    except (ValueError, TypeError, AttributeError) as exc:
        raise FileFormatError("field", str(exc)) from None

    grades = doc.get("grades", {"moduli": []})
    _require(isinstance(grades, dict) and isinstance(grades.get("moduli"), list), "grades",
             "expected {\"moduli\": [...]}")
    try:
        group = GradeGroup(grades["moduli"])
    except (ValueError, TypeError) as exc:
        raise FileFormatError("grades.moduli", str(exc)) from None
    n = group.order()
    table = doc.get("bicharacter", [["1"]] if n == 1 else None)
    _require(isinstance(table, list) and len(table) == n
             and all(isinstance(r, list) and len(r) == n for r in table),
             "bicharacter", f"expected a {n}x{n} table indexed by the group elements")
    table = [[fld.format(_parse_scalar(fld, v, f"bicharacter[{i}][{j}]")) for j, v in enumerate(row)]
             for i, row in enumerate(table)]
    try:
        context_from_table(group.moduli, table, fld)
    except (ShapeError, ValueError, ZeroDivisionError) as exc:
        raise FileFormatError("bicharacter", str(exc)) from None

    objects = {}
    _require(isinstance(doc["objects"], dict), "objects", "expected a mapping")
    for name, spec in doc["objects"].items():
        where = f"objects.{name}"
        _require(name and name != "I" and "." not in name, where, "object names must be nonempty, not I, without dots")
        _require(isinstance(spec, dict) and isinstance(spec.get("basis"), list), where, "expected {basis, grades}")
        basis = spec["basis"]
        gr = spec.get("grades", [group.zero] * len(basis))
        _require(isinstance(gr, list) and len(gr) == len(basis), where + ".grades", "one grade per basis element")
        try:
            objects[name] = make_object(basis, [tuple(g) if isinstance(g, list) else g for g in gr], group, name)
        except (ShapeError, TypeError) as exc:
            raise FileFormatError(where, str(exc)) from None

    sf = StructureFile(fld, group, table, objects, {}, {}, [])
    _require(isinstance(doc["morphisms"], dict), "morphisms", "expected a mapping")
    for name, spec in doc["morphisms"].items():
        where = f"morphisms.{name}"
        _require(isinstance(spec, dict) and {"dom", "cod", "matrix"} <= set(spec), where,
                 "expected {dom, cod, matrix}")
        dom = sf.object(spec["dom"], where + ".dom")
        cod = sf.object(spec["cod"], where + ".cod")
        rows = spec["matrix"]
        _require(isinstance(rows, list) and len(rows) == cod.dim, where + ".matrix",
                 f"expected {cod.dim} rows (the codomain dimension)")
        parsed = []
        for r, row in enumerate(rows):
            _require(isinstance(row, list) and len(row) == dom.dim, f"{where}.matrix[{r}]",
                     f"expected {dom.dim} entries (the domain dimension)")
            parsed.append([_parse_scalar(fld, v, f"{where}.matrix[{r}][{c}]") for c, v in enumerate(row)])
        sf.morphisms[name] = MorphismEntry(_canonical_expr(spec["dom"]), _canonical_expr(spec["cod"]),
                                           Morphism.from_rows(dom, cod, parsed, fld))

    _require(isinstance(doc["structures"], dict), "structures", "expected a mapping")
    for name, spec in doc["structures"].items():
        where = f"structures.{name}"
        _require(isinstance(spec, dict) and spec.get("kind") in STRUCTURE_KINDS, where + ".kind",
                 f"kind must be one of {sorted(STRUCTURE_KINDS)}")
        kind = spec["kind"]
        needed = {"kind", "object", *STRUCTURE_KINDS[kind]} | ({"over"} if kind in OVER_KINDS else set())
        missing = sorted(needed - set(spec))
        _require(not missing, where, f"missing fields {missing}")
        extra = sorted(set(spec) - needed)
        _require(not extra, where, f"unknown fields {extra}")
        sf.structures[name] = {k: (_canonical_expr(v) if k == "object" else v) for k, v in spec.items()}
    for name, spec in sf.structures.items():
        if spec["kind"] in OVER_KINDS:
            over = spec["over"]
            _require(over in sf.structures and sf.structures[over]["kind"] == "regular",
                     f"structures.{name}.over", f"{over!r} is not a regular structure in this file")
        _validate_shapes(sf, name)

    for i, req in enumerate(doc.get("checks", [])):
        where = f"checks[{i}]"
        _require(isinstance(req, dict) and set(req) == {"structure", "check"}, where,
                 "expected {structure, check}")
        _require(req["structure"] in sf.structures, where + ".structure",
                 f"unknown structure {req['structure']!r}")
        kind = sf.structures[req["structure"]]["kind"]
        _require(req["check"] in CHECKS[kind], where + ".check",
                 f"check {req['check']!r} does not apply to a {kind}; choose from {sorted(CHECKS[kind])}")
        sf.checks.append({"structure": req["structure"], "check": req["check"]})
    return sf


def _canonical_expr(expr):
    if not isinstance(expr, str) or not expr:
        raise FileFormatError("expression", f"bad object expression {expr!r}")
    parts = [p for p in expr.split(".") if p != "I"]
    return ".".join(parts) if parts else "I"


def _validate_shapes(sf: StructureFile, name):
    spec = sf.structures[name]
    where = f"structures.{name}"
    kind = spec["kind"]
    X = spec["object"]
    if kind in OVER_KINDS:
        A = sf.structures[spec["over"]]["object"]
        XA, AX = f"{X}.{A}", f"{A}.{X}"
        expected = {"v1": (XA, XA), "v3": (XA, XA), "q1": (AX, AX), "q4": (XA, XA)}
    else:
        XX = f"{X}.{X}"
        expected = {"t": (XX, XX), "t1": (XX, XX), "t2": (XX, XX), "t3": (XX, XX), "t4": (XX, XX),
                    "e": (X, "I"), "m": (XX, X), "u": ("I", X), "d": (X, XX)}
    for slot in STRUCTURE_KINDS[kind]:
        ref = spec[slot]
        f = sf.morphism(ref, f"{where}.{slot}")
        dom, cod = (sf.object(e, f"{where}.{slot}") for e in expected[slot])
        if f.dom != dom or f.cod != cod:
            raise FileFormatError(f"{where}.{slot}",
                                  f"morphism {ref!r} has shape {f.dom.dim}->{f.cod.dim}, "
                                  f"expected {dom.dim}->{cod.dim} ({expected[slot][0]} -> {expected[slot][1]})")


def loads(text: str) -> StructureFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_dict(doc)


def load(path) -> StructureFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FileFormatError(str(path), exc.strerror or str(exc)) from None
    return loads(text)


# -- building files from library objects ----------------------------------------


class FileBuilder:
    """Accumulate named objects and morphisms into a StructureFile."""

    def __init__(self, ctx: GradedContext):
        self.ctx = ctx
        self.sf = StructureFile(ctx.field, ctx.group, ctx.chi.dense(), {}, {}, {}, [])

    def add_object(self, name, X: GradedObject):
        if any(len(k) != 1 for k in X.keys):
            raise ShapeError(f"object {name!r} must be atomic to be declared")
        old = self.sf.objects.get(name)
        if old is not None and old != X:
            raise ShapeError(f"object name {name!r} already used for a different object")
        self.sf.objects[name] = X.renamed(name)
        return name

    def expr(self, X: GradedObject):
        """An expression for X as a product of declared objects."""
        if X.dim == 1 and X.keys[0] == ():
            return "I"
        width = len(X.keys[0])
        options = []
        for j in range(width):
            labels = list(dict.fromkeys(k[j] for k in X.keys))
            options.append([(n, Y) for n, Y in self.sf.objects.items()
                            if [k[0] for k in Y.keys] == labels])
        for combo in itertools.product(*options):
            if tensor_obj(*[Y for _, Y in combo]) == X:
                return ".".join(n for n, _ in combo)
        raise ShapeError(f"cannot express {X!r} in declared objects")

    def add_morphism(self, name, f: LinearMap, dom=None, cod=None):
        f = f.materialize()
        self.sf.morphisms[name] = MorphismEntry(dom or self.expr(f.dom), cod or self.expr(f.cod), f)
        return name

    def add_structure(self, name, kind, obj_expr, over=None, **slots):
        spec = {"kind": kind, "object": obj_expr, **slots}
        if over is not None:
            spec["over"] = over
        self.sf.structures[name] = spec
        return name

    def request(self, structure, *checks):
        for c in checks:
            self.sf.checks.append({"structure": structure, "check": c})

    def build(self) -> StructureFile:
        # round trip through the parser so the result is validated
        return from_dict(self.sf.to_dict())


CHECKS = {
    "fusion": ("fusion", "derived", "short-fusion"),
    "mbm": ("mbm", "a12", "nondegenerate", "nondeg-equivalences", "multiplier-bialgebra"),
    "regular": ("regular", "nondegenerate", "transforms", "determination", "split-epi",
                "bicomonad", "bimonad", "minimality"),
    "bimonoid": ("bimonoid", "regular"),
    "comodule": ("comodule", "induced"),
    "module": ("module", "induced"),
}

__all__ = [
    "CHECKS",
    "FORMAT_VERSION",
    "FileBuilder",
    "FileFormatError",
    "MorphismEntry",
    "STRUCTURE_KINDS",
    "StructureFile",
    "dumps",
    "from_dict",
    "load",
    "loads",
]
