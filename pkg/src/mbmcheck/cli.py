"""Command line front end: check structure files, derive them, tensor
(co)modules, run probe suites, and emit the catalog.

Exit codes: 0 when every requested axiom check passes, 1 when some axiom
check fails, 2 when the input cannot be used (parse or validation errors,
refused constructions, mismatched files).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .builders import (
    CATALOG_BIMONOIDS,
    CATALOG_SEMIGROUPS,
    SemigroupTable,
    check_bimonoid,
    catalog_bimonoid,
    dual_of_finite_monoid,
    from_bimonoid,
    from_semigroup,
    semigroup_bimonoid,
    semigroup_table,
)
from .exactcore.errors import InconsistentSystem, MbmError, NotSurjective, Refused, ShapeError
from .exactcore.fields import field_from_spec
from .fileformat import FileBuilder, FileFormatError, dumps, load
from .functorial import (
    DEFAULT_PROBES,
    ProbeSet,
    check_induced_comodule,
    check_induced_module,
    check_multiplier_bicomonad,
    check_multiplier_bimonad,
    check_split_epi_hypotheses,
)
from .fusion import check_derived_properties, check_fusion, check_short_fusion
from .mbm import (
    check_a12,
    check_mbm,
    check_mbm_nondeg_equivalences,
    check_minimality_diagrams,
    check_multiplier_bialgebra,
    check_nondegenerate,
    check_regular,
    determine_t3,
    determine_t4,
    transform_regular,
)
from .repcat import (
    check_comodule,
    check_module,
    module_from_action_vec,
    tensor_comodules,
    tensor_modules,
)
from .report import INFORMATIONAL, CheckReport, fact, skipped

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

DEFAULT_CHECKS = {
    "regular": ("regular", "nondegenerate", "transforms", "determination"),
    "bimonoid": ("bimonoid",),
    "comodule": ("comodule",),
    "module": ("module",),
}


class InputError(Exception):
    """Anything that should end the run with exit code 2."""


# -- individual checks -----------------------------------------------------------


def _nondegeneracy_report(ctx, m):
    nd = check_nondegenerate(ctx, m)
    rep = CheckReport("non-degeneracy of the multiplication")
    rep.add(fact("left-nondegenerate", "nondegenerate", nd.left, INFORMATIONAL, data={"rank": nd.left_rank}))
    rep.add(fact("right-nondegenerate", "nondegenerate", nd.right, INFORMATIONAL, data={"rank": nd.right_rank}))
    return rep


def _transforms_report(R):
    base = check_regular(R).passed
    rep = CheckReport("verdict preserved by rev, bar and their composite")
    for variant in ("rev", "bar", "barrev"):
        sub = check_regular(transform_regular(R, variant))
        rep.add(fact(f"{variant}-verdict-preserved", "transform-regular", sub.passed == base,
                     data={"original": base, "transformed": sub.passed,
                           "failing": [e.name for e in sub.failures()]}))
    return rep


def _determination_report(R):
    nd = check_nondegenerate(R.ctx, R.m)
    rep = CheckReport("t3 and t4 determined by t1 and t2")
    if not (nd.left and nd.right):
        rep.add(skipped("determination", "determination", "multiplication is degenerate"))
        return rep
    for name, solve, stored in (("t3", determine_t3, R.t3), ("t4", determine_t4, R.t4)):
        try:
            X, nullity = solve(R)
        except InconsistentSystem:
            rep.add(fact(f"{name}-solvable", "determination", False))
            continue
        rep.add(fact(f"{name}-reproduced", "determination", X == stored.materialize(),
                     data={"nullity": nullity}))
        rep.add(fact(f"{name}-unique", "determination", nullity == 0, data={"nullity": nullity}))
    return rep


def _probes(R, opts):
    try:
        return ProbeSet.from_spec(R, opts.get("probes") or DEFAULT_PROBES, opts.get("seed", 0))
    except ValueError as exc:
        raise InputError(f"--probes: {exc}") from None


def run_check(sf, name, check, opts) -> CheckReport:
    obj = sf.structure(name)
    kind = sf.structures[name]["kind"]
    par = opts.get("parallel", 1)
    try:
        if kind == "fusion":
            return {"fusion": check_fusion, "derived": check_derived_properties,
                    "short-fusion": check_short_fusion}[check](obj)
        if kind == "mbm":
            if check == "nondegenerate":
                return _nondegeneracy_report(obj.ctx, obj.m)
            return {"mbm": check_mbm, "a12": check_a12,
                    "nondeg-equivalences": check_mbm_nondeg_equivalences,
                    "multiplier-bialgebra": check_multiplier_bialgebra}[check](obj)
        if kind == "regular":
            if check == "nondegenerate":
                return _nondegeneracy_report(obj.ctx, obj.m)
            if check == "bicomonad":
                return check_multiplier_bicomonad(obj, _probes(obj, opts), par)
            if check == "bimonad":
                return check_multiplier_bimonad(obj, _probes(obj, opts), par)
            return {"regular": check_regular, "transforms": _transforms_report,
                    "determination": _determination_report, "split-epi": check_split_epi_hypotheses,
                    "minimality": check_minimality_diagrams}[check](obj)
        if kind == "bimonoid":
            if check == "regular":
                return check_regular(from_bimonoid(obj))
            return check_bimonoid(obj)
        if kind == "comodule":
            if check == "induced":
                return check_induced_comodule(obj, _probes(obj.R, opts), par)
            return check_comodule(obj)
        if check == "induced":
            return check_induced_module(obj, _probes(obj.R, opts), par)
        return check_module(obj)
    except Refused as exc:
        rep = CheckReport(f"{check} on {name}")
        rep.add(skipped("refused", check, str(exc)))
        return rep


def _requests(sf, opts):
    reqs = [dict(r) for r in sf.checks]
    if opts.get("informational"):
        for n, s in sf.structures.items():
            if s["kind"] == "regular" and {"structure": n, "check": "minimality"} not in reqs:
                reqs.append({"structure": n, "check": "minimality"})
    return reqs


def build_report(sf, raw: bytes, reqs, opts) -> dict:
    """The machine report: deterministic for fixed inputs and options."""
    def one(req):
        return req, run_check(sf, req["structure"], req["check"], opts)

    par = max(1, int(opts.get("parallel", 1)))
    if par > 1 and len(reqs) > 1:
        with ThreadPoolExecutor(max_workers=par) as pool:
            results = list(pool.map(one, reqs))
    else:
        results = [one(r) for r in reqs]
    out = []
    for req, rep in results:
        body = rep.to_json()
        out.append({"structure": req["structure"], "check": req["check"], **body})
    return {
        "tool": "mbmcheck",
        "tool_version": __version__,
        "input_sha256": hashlib.sha256(raw).hexdigest(),
        "options": {
            "probes": opts.get("probes") or DEFAULT_PROBES,
            "seed": opts.get("seed", 0),
            "informational": bool(opts.get("informational")),
        },
        "results": out,
        "verdict": "pass" if all(r["verdict"] == "pass" for r in out) else "fail",
    }


def render_text(report: dict) -> str:
    lines = []
    for res in report["results"]:
        lines.append(f"[{res['structure']}] {res['check']}: {res['title']}: {res['verdict'].upper()}")
        for e in res["entries"]:
            tag = "" if e["severity"] == "axiom" else f" [{e['severity']}]"
            lines.append(f"  {e['verdict'].upper():7s} {e['name']}{tag}")
            w = e.get("witness")
            if w and e["verdict"] == "fail":
                if isinstance(w, dict) and "basis" in w:
                    lines.append(f"          at {w['basis']}: lhs={w['lhs']} rhs={w['rhs']}")
                else:
                    lines.append(f"          witness: {w}")
            if e["verdict"] == "fail" and "data" in e and "rank" in e["data"]:
                lines.append(f"          rank {e['data']['rank']}")
    lines.append(f"overall: {report['verdict'].upper()}")
    return "\n".join(lines) + "\n"


def _emit_report(report, args):
    if getattr(args, "out", None):
        Path(args.out).write_text(dumps(report), encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write(render_text(report))
    return EXIT_PASS if report["verdict"] == "pass" else EXIT_FAIL


def _opts(args):
    return {"probes": args.probes, "seed": args.seed, "parallel": args.parallel,
            "informational": args.informational}


def _read(path):
    sf = load(path)
    return sf, Path(path).read_bytes()


def cmd_check(args):
    sf, raw = _read(args.file)
    opts = _opts(args)
    return _emit_report(build_report(sf, raw, _requests(sf, opts), opts), args)


def cmd_probe(args):
    sf, raw = _read(args.file)
    opts = _opts(args)
    names = [args.structure] if args.structure else [
        n for n, s in sf.structures.items() if s["kind"] == "regular"]
    if not names:
        raise InputError("file defines no regular structure to probe")
    for n in names:
        if n not in sf.structures or sf.structures[n]["kind"] != "regular":
            raise InputError(f"{n!r} is not a regular structure")
    reqs = [{"structure": n, "check": c} for n in names for c in ("bicomonad", "bimonad")]
    for n in names:
        _probes(sf.structure(n), opts)
    return _emit_report(build_report(sf, raw, reqs, opts), args)


# -- derivation -----------------------------------------------------------------


def _write_file(sf, out):
    text = sf.dumps()
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def _fill_regular(fb, R, name="R", checks=None, with_reps=False):
    fb.add_object("A", R.A)
    for k, f in R.morphisms().items():
        fb.add_morphism(k, f)
    fb.add_structure(name, "regular", "A", t1="t1", t2="t2", t3="t3", t4="t4", e="e")
    fb.request(name, *(checks or DEFAULT_CHECKS["regular"]))
    if with_reps:
        fb.add_morphism("id_A", R.ctx.identity(R.A))
        fb.add_structure("unit-comodule", "comodule", "I", over=name, v1="id_A", v3="id_A")
        fb.add_structure("regular-comodule", "comodule", "A", over=name, v1="t1", v3="t3")
        fb.add_structure("unit-module", "module", "I", over=name, q1="id_A", q4="id_A")
        fb.add_structure("regular-module", "module", "A", over=name, q1="t1", q4="t4")
        for s in ("unit-comodule", "regular-comodule"):
            fb.request(s, "comodule")
        for s in ("unit-module", "regular-module"):
            fb.request(s, "module")
    return fb


def regular_file(R, with_reps=False):
    """A structure file holding a regular structure, optionally with (co)modules."""
    return _fill_regular(FileBuilder(R.ctx), R, with_reps=with_reps).build()


def bimonoid_file(B, with_reps=False):
    """The bimonoid itself and the regular structure derived from it."""
    fb = FileBuilder(B.ctx)
    fb.add_object("A", B.A)
    for k in ("m", "u", "d"):
        fb.add_morphism(k, getattr(B, k))
    fb.add_structure("B", "bimonoid", "A", m="m", u="u", d="d", e="e")
    fb.request("B", *DEFAULT_CHECKS["bimonoid"])
    return _fill_regular(fb, from_bimonoid(B), with_reps=with_reps).build()


def _table_arg(args):
    if args.table_file:
        try:
            doc = json.loads(Path(args.table_file).read_text(encoding="utf-8"))
            return SemigroupTable.from_rows(doc["labels"], doc["rows"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{args.table_file}: cannot read table ({exc})") from None
    if not args.table:
        raise InputError("give --table NAME or --table-file PATH")
    return semigroup_table(args.table)


def catalog_file(name, field_spec="rational", with_reps=False):
    fld = field_from_spec(field_spec)
    if name.startswith("semigroup-"):
        return regular_file(from_semigroup(semigroup_table(name[10:]), fld), with_reps=with_reps)
    return bimonoid_file(catalog_bimonoid(name, fld), with_reps=with_reps)


def cmd_derive(args):
    fld = field_from_spec(args.field)
    kind = args.kind
    if kind == "semigroup":
        sf = regular_file(from_semigroup(_table_arg(args), fld), with_reps=args.with_reps)
    elif kind == "dual-monoid":
        sf = bimonoid_file(dual_of_finite_monoid(_table_arg(args), fld), with_reps=args.with_reps)
    elif kind == "bimonoid":
        if args.name:
            B = catalog_bimonoid(args.name, fld)
        else:
            B = semigroup_bimonoid(_table_arg(args), fld)
        sf = bimonoid_file(B, with_reps=args.with_reps)
    else:
        sf = _module_from_action(args)
    return _write_file(sf, args.out)


def _module_from_action(args):
    if not args.file or not args.action:
        raise InputError("module-from-action needs FILE and --action NAME")
    sf, _ = _read(args.file)
    over = args.over or _unique(sf, "regular", "--over")
    R = sf.structure(over)
    entry = sf.morphisms.get(args.action)
    if entry is None:
        raise InputError(f"--action: dangling morphism name {args.action!r}")
    Q = entry.map.cod
    M = module_from_action_vec(R, Q, entry.map)
    name = args.name
    if name in sf.structures:
        raise InputError(f"structure name {name!r} already used")
    fb = FileBuilder(R.ctx)
    fb.sf = sf
    fb.add_morphism(f"{name}_q1", M.q1)
    fb.add_morphism(f"{name}_q4", M.q4)
    fb.add_structure(name, "module", entry.cod, over=over, q1=f"{name}_q1", q4=f"{name}_q4")
    fb.request(name, "module")
    return fb.build()


# -- tensor products ------------------------------------------------------------


def _unique(sf, kind, flag):
    names = [n for n, s in sf.structures.items() if s["kind"] == kind]
    if len(names) != 1:
        raise InputError(f"expected exactly one {kind} structure, found {len(names)}; use {flag}")
    return names[0]


def cmd_tensor(args):
    kind = args.kind
    sf1, _ = _read(args.file1)
    sf2, _ = _read(args.file2)
    left = args.left or _unique(sf1, kind, "--left")
    right = args.right or _unique(sf2, kind, "--right")
    for sf, n, flag in ((sf1, left, "--left"), (sf2, right, "--right")):
        if n not in sf.structures or sf.structures[n]["kind"] != kind:
            raise InputError(f"{flag}: {n!r} is not a {kind} structure")
    over1, over2 = sf1.structures[left]["over"], sf2.structures[right]["over"]
    if sf1.structure_hash(over1) != sf2.structure_hash(over2):
        raise InputError("the two files are over different regular structures (content hash mismatch)")
    X1, X2 = sf1.structure(left), sf2.structure(right)
    R = X1.R
    X2 = X2.replace(R=R)
    product = tensor_comodules(X1, X2) if kind == "comodule" else tensor_modules(X1, X2)

    fb = FileBuilder(R.ctx)
    ospec = sf1.structures[over1]
    for n in sf1.objects:
        fb.add_object(n, sf1.objects[n])
    for k in ("t1", "t2", "t3", "t4", "e"):
        fb.add_morphism(ospec[k], sf1.morphism(ospec[k]),
                        sf1.morphisms[ospec[k]].dom, sf1.morphisms[ospec[k]].cod)
    fb.add_structure(over1, "regular", ospec["object"], **{k: ospec[k] for k in ("t1", "t2", "t3", "t4", "e")})
    for n, X in sf2.objects.items():
        if n in fb.sf.objects and fb.sf.objects[n] != X:
            n = f"{n}_r"
        if n not in fb.sf.objects:
            fb.add_object(n, X)
    obj_expr = fb.expr(product.V if kind == "comodule" else product.Q)
    slots = ("v1", "v3") if kind == "comodule" else ("q1", "q4")
    for s in slots:
        fb.add_morphism(f"product_{s}", getattr(product, s))
    fb.add_structure("product", kind, obj_expr, over=over1, **{s: f"product_{s}" for s in slots})
    fb.request("product", kind)
    return _write_file(fb.build(), args.out)


# -- catalog --------------------------------------------------------------------


def catalog_listing():
    return [f"semigroup-{s}" for s in CATALOG_SEMIGROUPS] + list(CATALOG_BIMONOIDS)


def cmd_catalog(args):
    names = catalog_listing()
    if args.emit:
        if args.emit not in names:
            raise InputError(f"unknown catalog entry {args.emit!r}; known: {', '.join(names)}")
        return _write_file(catalog_file(args.emit, args.field, args.with_reps), args.out)
    if args.dir:
        d = Path(args.dir)
        d.mkdir(parents=True, exist_ok=True)
        for n in names:
            (d / f"{n}.json").write_text(catalog_file(n, args.field, args.with_reps).dumps(), encoding="utf-8")
        return EXIT_PASS
    sys.stdout.write("\n".join(names) + "\n")
    return EXIT_PASS


# -- argument parsing -------------------------------------------------------------


def _add_run_flags(p):
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--format", choices=("text", "json"), default="text", help="standard output format")
    p.add_argument("--probes", default=None, help=f"probe objects, default {DEFAULT_PROBES}")
    p.add_argument("--seed", type=int, default=0, help="seed for probe morphisms")
    p.add_argument("--parallel", type=int, default=1, help="worker threads")
    p.add_argument("--informational", action="store_true",
                   help="also run the optional diagrams that are not axioms")


def make_parser():
    ap = argparse.ArgumentParser(prog="mbmcheck", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"mbmcheck {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the check requests of a structure file")
    p.add_argument("file")
    _add_run_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("probe", help="run the functor-level probe suites")
    p.add_argument("file")
    p.add_argument("--structure", help="regular structure to probe (default: all)")
    _add_run_flags(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("derive", help="build a structure file")
    p.add_argument("kind", choices=("semigroup", "bimonoid", "dual-monoid", "module-from-action"))
    p.add_argument("file", nargs="?", help="input file (module-from-action)")
    p.add_argument("--table", help="named multiplication table")
    p.add_argument("--table-file", help='JSON {"labels": [...], "rows": [[...]]}')
    p.add_argument("--name", help="catalog bimonoid name (bimonoid) or module name (module-from-action)")
    p.add_argument("--action", help="morphism A.Q -> Q (module-from-action)")
    p.add_argument("--over", help="regular structure the module lives over")
    p.add_argument("--field", default="rational")
    p.add_argument("--with-reps", action="store_true", help="add unit and regular (co)modules")
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("tensor", help="tensor two (co)modules over the same structure")
    p.add_argument("kind", choices=("comodule", "module"))
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("catalog", help="list or emit the built-in catalog")
    p.add_argument("--emit", metavar="NAME")
    p.add_argument("--dir", help="write every catalog file into this directory")
    p.add_argument("--field", default="rational")
    p.add_argument("--with-reps", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    if getattr(args, "kind", None) == "module-from-action" and not args.name:
        args.name = "M"
    try:
        return args.func(args)
    except (FileFormatError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except Refused as exc:
        msg = f"refused: {exc}"
        if exc.witness is not None:
            msg += f" (witness: {exc.witness})"
        print(msg, file=sys.stderr)
    except (ShapeError, NotSurjective, InconsistentSystem, MbmError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
