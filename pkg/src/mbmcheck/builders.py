"""Concrete instances: bimonoids, semigroup spans, duals of finite monoids.

Everything here is constructed from multiplication tables and formulas,
never typed in as matrices, so golden files written from these builders give
an independent second path to the same numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields as dc_fields, replace

from .exactcore.context import Bicharacter, BraidedContext, GradedContext, super_vec, vec
from .exactcore.errors import Refused
from .exactcore.fields import QQ
from .exactcore.graded import GradeGroup, GradedObject, make_object
from .exactcore.morphism import LinearMap, Morphism, seq
from .fusion import expect_shape
from .mbm import RegularMultiplierBimonoid, check_nondegenerate, check_regular
from .report import CheckReport, compare


@dataclass(frozen=True)
class Bimonoid:
    ctx: BraidedContext
    A: GradedObject
    m: LinearMap
    u: LinearMap
    d: LinearMap
    e: LinearMap


def check_bimonoid(B: Bimonoid) -> CheckReport:
    ctx, A = B.ctx, B.A
    AA, I = ctx.tensor_obj(A, A), ctx.unit
    expect_shape(B.m, AA, A, "multiplication m")
    expect_shape(B.u, I, A, "unit u")
    expect_shape(B.d, A, AA, "comultiplication d")
    expect_shape(B.e, A, I, "counit e")
    T = ctx.tensor
    m, u, d, e = B.m, B.u, B.d, B.e
    one = ctx.identity(A)
    b = ctx.braiding(A, A)
    rep = CheckReport(f"bimonoid in {ctx.flavor}")
    rep.add(compare("associativity", "bimonoid-associative", seq(T(m, A), m), seq(T(A, m), m)))
    rep.add(compare("unit-left", "bimonoid-unital", seq(T(u, A), m), one))
    rep.add(compare("unit-right", "bimonoid-unital", seq(T(A, u), m), one))
    rep.add(compare("coassociativity", "bimonoid-coassociative", seq(d, T(d, A)), seq(d, T(A, d))))
    rep.add(compare("counit-left", "bimonoid-counital", seq(d, T(e, A)), one))
    rep.add(compare("counit-right", "bimonoid-counital", seq(d, T(A, e)), one))
    rep.add(compare("comultiplication-multiplicative", "bimonoid-compatible",
                    seq(m, d), seq(T(d, d), T(A, b, A), T(m, m))))
    rep.add(compare("counit-multiplicative", "bimonoid-compatible", seq(m, e), T(e, e)))
    rep.add(compare("comultiplication-unital", "bimonoid-compatible", seq(u, d), T(u, u)))
    rep.add(compare("counit-unital", "bimonoid-compatible", seq(u, e), ctx.identity(I)))
    return rep


def from_bimonoid(B: Bimonoid) -> RegularMultiplierBimonoid:
    rep = check_bimonoid(B)
    if not rep.passed:
        raise Refused("not a bimonoid", data={"failing": [e.name for e in rep.failures()]})
    ctx, A, m, d = B.ctx, B.A, B.m, B.d
    T = ctx.tensor
    bi = ctx.braiding_inv(A, A)
    t1 = seq(T(d, A), T(A, m)).materialize()
    t2 = seq(T(A, d), T(m, A)).materialize()
    t3 = seq(T(d, A), T(A, bi), T(A, m)).materialize()
    t4 = seq(T(A, d), T(bi, A), T(m, A)).materialize()
    return RegularMultiplierBimonoid(ctx, A, t1, t2, t3, t4, B.e)


# -- multiplication tables ---------------------------------------------------


@dataclass(frozen=True)
class SemigroupTable:
    """Labels and a total operation ``op[(a, b)] = ab``."""

    labels: tuple
    op: dict

    @classmethod
    def from_rows(cls, labels, rows):
        labels = tuple(labels)
        if len(rows) != len(labels) or any(len(r) != len(labels) for r in rows):
            raise Refused("operation table must be square with one row per element")
        op = {}
        for a, row in zip(labels, rows):
            for b, c in zip(labels, row):
                if c not in labels:
                    raise Refused(f"product {a}*{b} = {c!r} is not an element")
                op[(a, b)] = c
        return cls(labels, op)

    def mul(self, a, b):
        return self.op[(a, b)]

    def rows(self):
        return [[self.op[(a, b)] for b in self.labels] for a in self.labels]

    def associativity_failure(self):
        for a, b, c in itertools.product(self.labels, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return (a, b, c)
        return None

    def unit(self):
        for g in self.labels:
            if all(self.mul(g, a) == a == self.mul(a, g) for a in self.labels):
                return g
        return None


def _table(labels, fn):
    return SemigroupTable(tuple(labels), {(a, b): fn(a, b) for a in labels for b in labels})


def cyclic_group(n):
    labels = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return SemigroupTable(tuple(labels), {
        (labels[i], labels[j]): labels[(i + j) % n] for i in range(n) for j in range(n)
    })


SEMIGROUPS = {
    "leftzero2": lambda: _table(["x", "y"], lambda a, b: a),
    "rightzero2": lambda: _table(["x", "y"], lambda a, b: b),
    "zero3": lambda: _table(["z", "a", "b"], lambda a, b: "z"),
    "z2": lambda: cyclic_group(2),
    "z3": lambda: cyclic_group(3),
    "semilattice2": lambda: _table(["1", "0"], lambda a, b: "1" if a == b == "1" else "0"),
    "trivial": lambda: _table(["1"], lambda a, b: "1"),
}


def semigroup_table(name) -> SemigroupTable:
    try:
        return SEMIGROUPS[name]()
    except KeyError:
        raise Refused(f"unknown table {name!r}; known: {', '.join(sorted(SEMIGROUPS))}") from None


def _require_associative(T: SemigroupTable):
    bad = T.associativity_failure()
    if bad:
        a, b, c = bad
        raise Refused(f"operation is not associative at ({a},{b},{c})", witness=list(bad))


def from_semigroup(T: SemigroupTable, field=QQ) -> RegularMultiplierBimonoid:
    """The linear span of a semigroup with its four multiplier maps."""
    _require_associative(T)
    ctx = vec(field)
    A = make_object(T.labels, name="A")
    AA = ctx.tensor_obj(A, A)
    mul = T.mul

    def basis_map(fn):
        return Morphism.from_function(AA, AA, field, lambda k: {fn(k[0], k[1]): 1})

    t1 = basis_map(lambda a, b: (a, mul(a, b)))
    t2 = basis_map(lambda a, b: (mul(a, b), b))
    t3 = basis_map(lambda a, b: (a, mul(b, a)))
    t4 = basis_map(lambda a, b: (mul(b, a), b))
    e = Morphism.from_function(A, ctx.unit, field, lambda k: {(): 1})
    return RegularMultiplierBimonoid(ctx, A, t1, t2, t3, t4, e)


def semigroup_bimonoid(T: SemigroupTable, field=QQ) -> Bimonoid:
    """Span of a monoid with the diagonal comultiplication a -> a (x) a."""
    _require_associative(T)
    unit = T.unit()
    if unit is None:
        raise Refused("table has no two-sided unit")
    ctx = vec(field)
    A = make_object(T.labels, name="A")
    AA, I = ctx.tensor_obj(A, A), ctx.unit
    m = Morphism.from_function(AA, A, field, lambda k: {(T.mul(k[0], k[1]),): 1})
    u = Morphism.from_function(I, A, field, lambda k: {(unit,): 1})
    d = Morphism.from_function(A, AA, field, lambda k: {k + k: 1})
    e = Morphism.from_function(A, I, field, lambda k: {(): 1})
    return Bimonoid(ctx, A, m, u, d, e)


def dual_of_finite_monoid(T: SemigroupTable, field=QQ) -> Bimonoid:
    """Functions on a finite monoid: pointwise product, convolution coproduct."""
    _require_associative(T)
    unit = T.unit()
    if unit is None:
        raise Refused("table has no two-sided unit")
    ctx = vec(field)
    name = {g: f"d_{g}" for g in T.labels}
    A = make_object([name[g] for g in T.labels], name="A")
    AA, I = ctx.tensor_obj(A, A), ctx.unit
    back = {v: g for g, v in name.items()}

    def mult(k):
        return {k[:1]: 1} if k[0] == k[1] else {}

    def comult(k):
        g = back[k[0]]
        return {(name[h], name[c]): 1 for h in T.labels for c in T.labels if T.mul(h, c) == g}

    m = Morphism.from_function(AA, A, field, mult)
    u = Morphism.from_function(I, A, field, lambda k: {(name[g],): 1 for g in T.labels})
    d = Morphism.from_function(A, AA, field, comult)
    e = Morphism.from_function(A, I, field, lambda k: {(): 1} if back[k[0]] == unit else {})
    return Bimonoid(ctx, A, m, u, d, e)


def exterior_line(field=QQ, braided=True) -> Bimonoid:
    """k[x]/(x^2) with x odd and primitive.

    With ``braided=False`` the same data is placed in Z_2-graded spaces with
    the trivial braiding, where the comultiplication stops being multiplicative.
    """
    if braided:
        ctx = super_vec(field)
    else:
        g = GradeGroup((2,))
        ctx = GradedContext(Bicharacter.from_function(g, field, lambda a, b: 1), name="z2-trivial")
    A = make_object(["1", "x"], [(0,), (1,)], ctx.group, name="A")
    AA, I = ctx.tensor_obj(A, A), ctx.unit
    prod = {("1", "1"): "1", ("1", "x"): "x", ("x", "1"): "x"}
    m = Morphism.from_function(AA, A, field, lambda k: {(prod[k],): 1} if k in prod else {})
    u = Morphism.from_function(I, A, field, lambda k: {("1",): 1})
    d = Morphism.from_function(A, AA, field, lambda k: {("1", "1"): 1} if k == ("1",)
                               else {("x", "1"): 1, ("1", "x"): 1})
    e = Morphism.from_function(A, I, field, lambda k: {(): 1} if k == ("1",) else {})
    return Bimonoid(ctx, A, m, u, d, e)


# -- catalog ---------------------------------------------------------------


CATALOG_SEMIGROUPS = ("leftzero2", "rightzero2", "zero3", "z2", "z3", "semilattice2")
CATALOG_BIMONOIDS = ("group-z2", "group-z3", "dual-z2", "dual-z3", "dual-semilattice2", "lambda")


def catalog_bimonoid(name, field=QQ) -> Bimonoid:
    if name.startswith("group-"):
        return semigroup_bimonoid(semigroup_table(name[6:]), field)
    if name.startswith("dual-"):
        return dual_of_finite_monoid(semigroup_table(name[5:]), field)
    if name == "lambda":
        return exterior_line(field)
    raise Refused(f"unknown bimonoid {name!r}")


def catalog_instance(name, field=QQ) -> RegularMultiplierBimonoid:
    """``semigroup-<table>`` or one of the bimonoid names, as a regular structure."""
    if name.startswith("semigroup-"):
        return from_semigroup(semigroup_table(name[10:]), field)
    return from_bimonoid(catalog_bimonoid(name, field))


def catalog_names():
    return [f"semigroup-{s}" for s in CATALOG_SEMIGROUPS] + list(CATALOG_BIMONOIDS)


def catalog(field=QQ):
    return {name: catalog_instance(name, field) for name in catalog_names()}


# -- mutation harness --------------------------------------------------------


def mutation_sites(structure, names=None):
    """Every (morphism name, row, column) of the chosen constituent maps."""
    out = []
    for f in dc_fields(structure):
        val = getattr(structure, f.name)
        if isinstance(val, LinearMap) and (names is None or f.name in names):
            for c in range(val.dom.dim):
                for r in range(val.cod.dim):
                    out.append((f.name, r, c))
    return out


def mutate(structure, site, delta=1):
    """Copy of ``structure`` with one matrix entry shifted by ``delta``."""
    name, row, col = site
    own = {f.name for f in dc_fields(structure)}
    f = getattr(structure, name, None) if name in own else None
    if not isinstance(f, LinearMap):
        raise IndexError(f"{type(structure).__name__} has no morphism named {name!r}")
    return replace(structure, **{name: f.materialize().mutated(row, col, delta)})


# -- search ---------------------------------------------------------------------


def enumerate_semigroups(n):
    """All associative operations on ``range(n)`` by backtracking."""
    cells = [(a, b) for a in range(n) for b in range(n)]
    op = {}

    def consistent():
        for a, b, c in itertools.product(range(n), repeat=3):
            ab = op.get((a, b))
            bc = op.get((b, c))
            if ab is None or bc is None:
                continue
            lhs, rhs = op.get((ab, c)), op.get((a, bc))
            if lhs is not None and rhs is not None and lhs != rhs:
                return False
        return True

    def rec(k):
        if k == len(cells):
            yield dict(op)
            return
        for v in range(n):
            op[cells[k]] = v
            if consistent():
                yield from rec(k + 1)
            del op[cells[k]]

    for table in rec(0):
        labels = tuple(f"s{i}" for i in range(n))
        yield SemigroupTable(labels, {(labels[a], labels[b]): labels[c] for (a, b), c in table.items()})


def search_nonunital_nondegenerate(max_order=3, field=QQ):
    """Non-unital semigroups whose span has a non-degenerate multiplication.

    Returns ``(examined, findings)``; each finding records the table and
    whether the induced structure passes the regular axioms.
    """
    examined, findings = 0, []
    for n in range(1, max_order + 1):
        for T in enumerate_semigroups(n):
            examined += 1
            if T.unit() is not None:
                continue
            R = from_semigroup(T, field)
            nd = check_nondegenerate(R.ctx, R.m)
            if nd.left and nd.right:
                findings.append({"table": T.rows(), "regular": check_regular(R).passed})
    return examined, findings


def quantum_line(ctx=None) -> Bimonoid:
    """k[x]/(x^n) with x primitive of degree 1 in a Z_n-graded context.

    Needs q = chi(1,1) to be a primitive n-th root of unity; the coproduct
    uses Gaussian binomials in q.  With the default Z_3 context over F_7 the
    braiding is not symmetric, which separates b from its inverse.
    """
    from .exactcore.context import z3_context

    ctx = ctx or z3_context()
    if len(ctx.group.moduli) != 1:
        raise Refused("quantum line needs a cyclic grading group")
    n = ctx.group.moduli[0]
    fld = ctx.field
    q = ctx.chi((1,), (1,))
    powers = [fld.normalize(q**k) for k in range(n + 1)]
    if powers[n] != 1 or any(p == 1 for p in powers[1:n]):
        raise Refused("chi(1,1) must be a primitive root of unity of the group order")

    def qint(k):
        return fld.normalize(sum(powers[:k]))

    def qbinom(a, k):
        num = den = 1
        for i in range(k):
            num = fld.normalize(num * qint(a - i))
            den = fld.normalize(den * qint(i + 1))
        return fld.div(num, den)

    labels = ["1"] + [f"x{k}" if k > 1 else "x" for k in range(1, n)]
    A = make_object(labels, [(k,) for k in range(n)], ctx.group, name="A")
    AA, I = ctx.tensor_obj(A, A), ctx.unit
    deg = {(s,): k for k, s in enumerate(labels)}
    m = Morphism.from_function(
        AA, A, fld,
        lambda k: {(labels[deg[k[:1]] + deg[k[1:]]],): 1} if deg[k[:1]] + deg[k[1:]] < n else {},
    )
    u = Morphism.from_function(I, A, fld, lambda k: {("1",): 1})
    d = Morphism.from_function(
        A, AA, fld,
        lambda k: {(labels[j], labels[deg[k] - j]): qbinom(deg[k], j) for j in range(deg[k] + 1)},
    )
    e = Morphism.from_function(A, I, fld, lambda k: {(): 1} if k == ("1",) else {})
    return Bimonoid(ctx, A, m, u, d, e)
