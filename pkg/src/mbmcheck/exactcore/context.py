"""Braided monoidal contexts: graded vector spaces with a bicharacter braiding.

A :class:`BraidedContext` provides the tensor product of objects and maps,
the braiding and its inverse.  :func:`rev` and :func:`bar` wrap a context
lazily to give the reversed category (tensor factors swapped) and the
category with the inverse braiding.  Generic diagram code only ever talks to
a context, so one transcription of a diagram serves every flavor.
"""

from __future__ import annotations

import itertools
import random

from .errors import Refused, ShapeError
from .fields import QQ, GF
from .graded import TRIVIAL, GradeGroup, GradedObject, tensor_obj, unit_object
from .morphism import LinearMap, Morphism, Whiskered, identity, seq


class Bicharacter:
    """chi: G x G -> k^x given as a full table ``{(g, h): scalar}``."""

    def __init__(self, group: GradeGroup, field, table, validate=True):
        self.group = group
        self.field = field
        self.table = {
            (group.normalize(g), group.normalize(h)): field.normalize(v)
            for (g, h), v in dict(table).items()
        }
        if validate:
            problems = self.problems()
            if problems:
                raise ShapeError("not a bicharacter: " + "; ".join(problems[:3]))

    @classmethod
    def from_function(cls, group, field, fn):
        els = group.elements()
        return cls(group, field, {(g, h): fn(g, h) for g in els for h in els})

    def __call__(self, g, h):
        return self.table[(g, h)]

    def problems(self):
        out = []
        els = self.group.elements()
        add = self.group.add
        zero = self.group.zero
        norm = self.field.normalize
        for g in els:
            for h in els:
                if (g, h) not in self.table:
                    out.append(f"missing entry {g},{h}")
                    continue
                if self.table[(g, h)] == 0:
                    out.append(f"zero entry at {g},{h}")
        if out:
            return out
        for g in els:
            if self.table[(zero, g)] != 1 or self.table[(g, zero)] != 1:
                out.append(f"chi(0,{g}) or chi({g},0) is not 1")
            for g2 in els:
                for h in els:
                    if self.table[(add(g, g2), h)] != norm(self.table[(g, h)] * self.table[(g2, h)]):
                        out.append(f"not additive in the first slot at {g},{g2},{h}")
                    if self.table[(h, add(g, g2))] != norm(self.table[(h, g)] * self.table[(h, g2)]):
                        out.append(f"not additive in the second slot at {h},{g},{g2}")
        return out

    def is_symmetric(self):
        norm = self.field.normalize
        return all(norm(self.table[(g, h)] * self.table[(h, g)]) == 1 for (g, h) in self.table)

    def dense(self):
        els = self.group.elements()
        return [[self.field.format(self.table[(g, h)]) for h in els] for g in els]


class BraidedContext:
    """Interface; see :class:`GradedContext`, :class:`Reversed`, :class:`Barred`."""

    group: GradeGroup
    field: object
    chi: Bicharacter

    # -- to be provided by subclasses
    def tensor_obj(self, *objs) -> GradedObject:
        raise NotImplementedError

    def tensor(self, *items) -> LinearMap:
        raise NotImplementedError

    def braiding(self, X, Y) -> LinearMap:
        raise NotImplementedError

    def braiding_inv(self, X, Y) -> LinearMap:
        raise NotImplementedError

    # -- shared
    @property
    def unit(self) -> GradedObject:
        return unit_object(self.group)

    def identity(self, X) -> Morphism:
        return identity(X, self.field)

    @property
    def reversed_parity(self) -> bool:
        return False

    @property
    def barred_parity(self) -> bool:
        return False

    def check_object(self, X):
        if X.group != self.group:
            raise ShapeError(f"object over {X.group} used in a context over {self.group}")


class GradedContext(BraidedContext):
    """Graded vector spaces with braiding x(x)y -> chi(|x|,|y|) y(x)x."""

    def __init__(self, chi: Bicharacter, name="base"):
        self.chi = chi
        self.group = chi.group
        self.field = chi.field
        self.name = name
        self._braid_cache = {}

    @property
    def flavor(self):
        return "base"

    @property
    def base(self):
        return self

    def braid_coefficient(self, x_key, x_grade, y_key, y_grade):
        """Scalar picked up when ``x`` passes over ``y``; a hook for tests."""
        return self.chi(x_grade, y_grade)

    def tensor_obj(self, *objs):
        if not objs:
            return self.unit
        for X in objs:
            self.check_object(X)
        return tensor_obj(*objs)

    def tensor(self, *items):
        objs = []
        for it in items:
            if isinstance(it, GradedObject):
                objs.append((it, it))
            elif isinstance(it, LinearMap):
                if it.field != self.field:
                    raise ShapeError("map over a different field")
                objs.append((it.dom, it.cod))
            else:
                raise TypeError(f"cannot tensor {it!r}")
        for d, c in objs:
            self.check_object(d)
            self.check_object(c)
        maps = [k for k, it in enumerate(items) if isinstance(it, LinearMap)]
        if not maps:
            return self.identity(self.tensor_obj(*[d for d, _ in objs]))
        steps = []
        for k in maps:
            left = self.tensor_obj(*[c for _, c in objs[:k]])
            right = self.tensor_obj(*[d for d, _ in objs[k + 1:]])
            steps.append(Whiskered(left, items[k], right))
        return seq(*steps)

    def _build(self, X, Y, inverse):
        self.check_object(X)
        self.check_object(Y)
        nx, ny = X.dim, Y.dim
        div = self.field.div
        cols = []
        if not inverse:
            # X(x)Y -> Y(x)X
            for a in range(nx):
                for c in range(ny):
                    k = self.braid_coefficient(X.keys[a], X.grades[a], Y.keys[c], Y.grades[c])
                    cols.append({c * nx + a: self.field.normalize(k)})
            return Morphism(tensor_obj(X, Y), tensor_obj(Y, X), self.field, cols, trusted=True)
        # Y(x)X -> X(x)Y
        for c in range(ny):
            for a in range(nx):
                k = self.braid_coefficient(X.keys[a], X.grades[a], Y.keys[c], Y.grades[c])
                cols.append({a * ny + c: div(1, k)})
        return Morphism(tensor_obj(Y, X), tensor_obj(X, Y), self.field, cols, trusted=True)

    def braiding(self, X, Y):
        key = (X, Y, False)
        out = self._braid_cache.get(key)
        if out is None:
            out = self._braid_cache[key] = self._build(X, Y, False)
        return out

    def braiding_inv(self, X, Y):
        key = (X, Y, True)
        out = self._braid_cache.get(key)
        if out is None:
            out = self._braid_cache[key] = self._build(X, Y, True)
        return out

    def _key(self):
        return (type(self), self.field, self.group, tuple(sorted(self.chi.table.items())))

    def __eq__(self, other):
        return isinstance(other, GradedContext) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<context {self.name} over {self.field.name}, {self.group}>"


class _Adapter(BraidedContext):
    def __init__(self, inner: BraidedContext):
        self.inner = inner
        self.group = inner.group
        self.field = inner.field
        self.chi = inner.chi

    @property
    def base(self):
        return self.inner.base

    def __eq__(self, other):
        return type(other) is type(self) and other.inner == self.inner

    def __hash__(self):
        return hash((type(self), self.inner))

    def __repr__(self):
        return f"<context {self.flavor} over {self.field.name}>"


class Reversed(_Adapter):
    """X (x)' Y = Y (x) X, with braiding b'_{X,Y} = b_{Y,X}."""

    @property
    def flavor(self):
        return f"rev({self.inner.flavor})"

    @property
    def reversed_parity(self):
        return not self.inner.reversed_parity

    @property
    def barred_parity(self):
        return self.inner.barred_parity

    def tensor_obj(self, *objs):
        return self.inner.tensor_obj(*reversed(objs))

    def tensor(self, *items):
        return self.inner.tensor(*reversed(items))

    def braiding(self, X, Y):
        return self.inner.braiding(Y, X)

    def braiding_inv(self, X, Y):
        return self.inner.braiding_inv(Y, X)


class Barred(_Adapter):
    """Same tensor product, braiding b'_{X,Y} = (b_{Y,X})^{-1}."""

    @property
    def flavor(self):
        return f"bar({self.inner.flavor})"

    @property
    def reversed_parity(self):
        return self.inner.reversed_parity

    @property
    def barred_parity(self):
        return not self.inner.barred_parity

    def tensor_obj(self, *objs):
        return self.inner.tensor_obj(*objs)

    def tensor(self, *items):
        return self.inner.tensor(*items)

    def braiding(self, X, Y):
        return self.inner.braiding_inv(Y, X)

    def braiding_inv(self, X, Y):
        return self.inner.braiding(Y, X)


def rev(ctx: BraidedContext) -> BraidedContext:
    return Reversed(ctx)


def bar(ctx: BraidedContext) -> BraidedContext:
    return Barred(ctx)


def unwrap_reversed(ctx: BraidedContext) -> BraidedContext:
    """A context with the same braiding data but no net reversal.

    ``ctx`` must have odd reversal parity; the result D satisfies
    ``rev(D) == ctx`` operation by operation (rev and bar commute).
    """
    if not ctx.reversed_parity:
        raise ValueError("context is not reversed")
    base = ctx.base
    return bar(base) if ctx.barred_parity else base


# -- built-in contexts -------------------------------------------------------


def vec(field=QQ) -> GradedContext:
    """Plain vector spaces with the symmetric swap."""
    return GradedContext(Bicharacter(TRIVIAL, field, {((), ()): 1}), name="vec")


def super_vec(field=QQ) -> GradedContext:
    """Z_2-graded spaces with the Koszul sign; needs characteristic != 2."""
    if field.characteristic == 2:
        raise Refused("super vector spaces need a field of characteristic other than 2")
    g = GradeGroup((2,))
    chi = Bicharacter.from_function(g, field, lambda a, b: -1 if a[0] * b[0] % 2 else 1)
    return GradedContext(chi, name="super")


def z3_context(field=None) -> GradedContext:
    """Z_3 grading with chi(g,h) = 2^(gh) over F_7, where 2 has order 3.

    The braiding is not symmetric: b_{Y,X} b_{X,Y} = 4^(gh) on nonzero degrees.
    """
    field = field or GF(7)
    if field.characteristic == 0 or pow(2, 3, field.characteristic) != 1:
        raise Refused("chi(g,h) = 2^(gh) is a bicharacter on Z_3 only when 2 has order dividing 3")
    g = GradeGroup((3,))
    chi = Bicharacter.from_function(g, field, lambda a, b: pow(2, a[0] * b[0], field.characteristic))
    return GradedContext(chi, name="z3")


def klein_context(field=QQ) -> GradedContext:
    """Z_2 x Z_2 grading with the non-symmetric chi((a1,a2),(b1,b2)) = (-1)^(a1 b2)."""
    if field.characteristic == 2:
        raise Refused("the Klein bicharacter needs characteristic other than 2")
    g = GradeGroup((2, 2))
    chi = Bicharacter.from_function(g, field, lambda a, b: -1 if a[0] * b[1] % 2 else 1)
    return GradedContext(chi, name="klein")


def context_from_table(moduli, table, field, name="custom") -> GradedContext:
    """Context from a dense bicharacter table indexed by ``group.elements()``."""
    group = GradeGroup(moduli)
    els = group.elements()
    if len(table) != len(els) or any(len(row) != len(els) for row in table):
        raise ShapeError(f"bicharacter table must be {len(els)}x{len(els)}")
    entries = {(g, h): field.parse(str(table[i][j])) for i, g in enumerate(els) for j, h in enumerate(els)}
    return GradedContext(Bicharacter(group, field, entries), name=name)


# -- probes ------------------------------------------------------------------


def probe_objects(ctx: BraidedContext, dims=(1, 2, 3)):
    """Small objects cycling through the group elements, one per dimension."""
    els = ctx.group.elements()
    out = []
    for n, d in enumerate(dims):
        labels = [f"p{n}_{i}" for i in range(d)]
        grades = [els[(n + i) % len(els)] for i in range(d)]
        out.append(GradedObject([(s,) for s in labels], grades, ctx.group, f"P{n}"))
    return out


def random_homogeneous(X, Y, field, rng: random.Random, lo=-2, hi=2):
    """Grade-preserving map with small random integer entries."""
    cols = []
    for c in range(X.dim):
        col = {}
        for r in range(Y.dim):
            if X.grades[c] == Y.grades[r]:
                v = field.normalize(rng.randint(lo, hi))
                if v:
                    col[r] = v
        cols.append(col)
    return Morphism(X, Y, field, cols, trusted=True)


def probe_maps(objs, field, seed=0, extra=()):
    """One seeded homogeneous map for every ordered pair of probe objects."""
    rng = random.Random(seed)
    out = [random_homogeneous(X, Y, field, rng) for X in objs for Y in objs]
    out.extend(extra)
    return out


def check_coherence(ctx: BraidedContext, probes, seed=0, maps=None):
    """Invertibility, both hexagons and naturality of the braiding on probes."""
    from ..report import CheckReport, compare

    probes = list(probes)
    if len(probes) < 2:
        raise ValueError("check_coherence needs at least two probe objects")
    rep = CheckReport(f"coherence of {getattr(ctx, 'flavor', ctx)}")
    T = ctx.tensor
    names = {id(P): (P.name or f"P{i}") for i, P in enumerate(probes)}
    for X, Y in itertools.product(probes, repeat=2):
        tag = f"{names[id(X)]},{names[id(Y)]}"
        b, bi = ctx.braiding(X, Y), ctx.braiding_inv(X, Y)
        rep.add(compare(f"inverse-after-braiding[{tag}]", "braiding-invertible",
                        seq(b, bi), ctx.identity(ctx.tensor_obj(X, Y))))
        rep.add(compare(f"braiding-after-inverse[{tag}]", "braiding-invertible",
                        seq(bi, b), ctx.identity(ctx.tensor_obj(Y, X))))
    for X, Y, Z in itertools.product(probes, repeat=3):
        tag = f"{names[id(X)]},{names[id(Y)]},{names[id(Z)]}"
        rep.add(compare(
            f"hexagon-left[{tag}]", "hexagon",
            ctx.braiding(X, ctx.tensor_obj(Y, Z)),
            seq(T(ctx.braiding(X, Y), Z), T(Y, ctx.braiding(X, Z))),
        ))
        rep.add(compare(
            f"hexagon-right[{tag}]", "hexagon",
            ctx.braiding(ctx.tensor_obj(X, Y), Z),
            seq(T(X, ctx.braiding(Y, Z)), T(ctx.braiding(X, Z), Y)),
        ))
    if maps is None:
        maps = probe_maps(probes, ctx.field, seed)
    for n, f in enumerate(maps):
        for Y in probes:
            tag = f"map{n},{names.get(id(Y), Y.name)}"
            rep.add(compare(
                f"naturality-first[{tag}]", "braiding-natural",
                seq(T(f, Y), ctx.braiding(f.cod, Y)),
                seq(ctx.braiding(f.dom, Y), T(Y, f)),
            ))
            rep.add(compare(
                f"naturality-second[{tag}]", "braiding-natural",
                seq(T(Y, f), ctx.braiding(Y, f.cod)),
                seq(ctx.braiding(Y, f.dom), T(f, Y)),
            ))
    return rep


def contexts_agree(c1: BraidedContext, c2: BraidedContext, probes) -> bool:
    """Entrywise agreement of tensor objects, braidings and inverses on probes."""
    for X, Y in itertools.product(probes, repeat=2):
        if c1.tensor_obj(X, Y) != c2.tensor_obj(X, Y):
            return False
        if c1.braiding(X, Y).materialize() != c2.braiding(X, Y).materialize():
            return False
        if c1.braiding_inv(X, Y).materialize() != c2.braiding_inv(X, Y).materialize():
            return False
    for f in probe_maps(probes, c1.field, 1):
        for Y in probes:
            if c1.tensor(f, Y).materialize() != c2.tensor(f, Y).materialize():
                return False
    return True
