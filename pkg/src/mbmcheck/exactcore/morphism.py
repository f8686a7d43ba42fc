"""Linear maps between graded objects, stored and evaluated column by column.

Every map exposes ``dom``, ``cod``, ``field``, ``column(i)`` (a sparse dict
``row -> scalar`` for the image of the i-th domain basis vector) and
``apply(vec)``.  :class:`Morphism` holds its columns explicitly; the other
classes are lazy views used to transcribe diagrams without building the
large Kronecker matrices up front.

Matrices follow the usual convention: rows index the codomain, columns the
domain, and ``compose(g, f)`` is the product ``g f``.  :func:`seq` composes
in diagrammatic order instead (first argument applied first), which is how
diagram legs are written throughout the package.
"""

from __future__ import annotations

from .errors import ShapeError
from .graded import GradedObject, key_str, tensor_obj


def _clean(acc, field):
    norm = field.normalize
    out = {}
    for r, v in acc.items():
        v = norm(v)
        if v:
            out[r] = v
    return out


class LinearMap:
    dom: GradedObject
    cod: GradedObject

    def column(self, i):
        raise NotImplementedError

    def columns(self):
        return [self.column(i) for i in range(self.dom.dim)]

    def apply(self, vec):
        acc = {}
        for j, a in vec.items():
            for r, b in self.column(j).items():
                acc[r] = acc.get(r, 0) + a * b
        return _clean(acc, self.field)

    def materialize(self) -> "Morphism":
        return Morphism(self.dom, self.cod, self.field, self.columns(), trusted=True)

    def __repr__(self):
        return f"<{type(self).__name__} {self.dom.dim}->{self.cod.dim}>"


class Morphism(LinearMap):
    """An explicit matrix with graded domain and codomain."""

    __slots__ = ("dom", "cod", "field", "cols")

    def __init__(self, dom, cod, field, cols, trusted=False):
        if len(cols) != dom.dim:
            raise ShapeError(f"expected {dom.dim} columns, got {len(cols)}")
        if not trusted:
            cleaned = []
            for col in cols:
                col = _clean(col, field)
                if any(not 0 <= r < cod.dim for r in col):
                    raise ShapeError("column entry outside the codomain")
                cleaned.append(col)
            cols = cleaned
        self.dom = dom
        self.cod = cod
        self.field = field
        self.cols = tuple(cols)

    def column(self, i):
        return self.cols[i]

    def columns(self):
        return list(self.cols)

    def materialize(self):
        return self

    def entry(self, r, c):
        return self.cols[c].get(r, 0)

    def rows(self):
        out = [[0] * self.dom.dim for _ in range(self.cod.dim)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    @classmethod
    def from_rows(cls, dom, cod, rows, field):
        rows = [list(r) for r in rows]
        if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
            raise ShapeError(
                f"matrix shape {len(rows)}x{len(rows[0]) if rows else 0} "
                f"does not match {cod.dim}x{dom.dim}"
            )
        cols = [{} for _ in range(dom.dim)]
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                v = field.normalize(v)
                if v:
                    cols[c][r] = v
        return cls(dom, cod, field, cols, trusted=True)

    @classmethod
    def from_function(cls, dom, cod, field, fn):
        """``fn(key)`` returns a dict or pair list ``codomain key -> scalar``."""
        cols = []
        for k in dom.keys:
            image = fn(k)
            items = image.items() if isinstance(image, dict) else image
            acc = {}
            for ck, v in items:
                r = cod.index(ck)
                acc[r] = acc.get(r, 0) + v
            cols.append(acc)
        return cls(dom, cod, field, cols)

    def mutated(self, row, col, delta=1):
        if not (0 <= row < self.cod.dim and 0 <= col < self.dom.dim):
            raise IndexError(f"site ({row},{col}) outside a {self.cod.dim}x{self.dom.dim} matrix")
        cols = [dict(c) for c in self.cols]
        cols[col][row] = cols[col].get(row, 0) + delta
        return Morphism(self.dom, self.cod, self.field, cols)

    def with_objects(self, dom, cod):
        """Same matrix viewed between relabeled objects of equal dimension."""
        if dom.dim != self.dom.dim or cod.dim != self.cod.dim:
            raise ShapeError("relabeling must preserve dimensions")
        return Morphism(dom, cod, self.field, self.cols, trusted=True)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        other = other.materialize()
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.field == other.field
            and self.cols == other.cols
        )

    __hash__ = None


class _Lazy(LinearMap):
    def __init__(self):
        self._cache = {}

    def column(self, i):
        col = self._cache.get(i)
        if col is None:
            col = self._compute(i)
            self._cache[i] = col
        return col


class Whiskered(_Lazy):
    """``1_L (x) f (x) 1_R`` without forming the Kronecker product."""

    def __init__(self, left: GradedObject, f: LinearMap, right: GradedObject):
        super().__init__()
        self.left, self.f, self.right = left, f, right
        self.field = f.field
        self.dom = tensor_obj(left, f.dom, right)
        self.cod = tensor_obj(left, f.cod, right)
        self._fd, self._fc, self._r = f.dom.dim, f.cod.dim, right.dim

    def _compute(self, i):
        fd, fc, r = self._fd, self._fc, self._r
        a, rest = divmod(i, fd * r)
        j, c = divmod(rest, r)
        base = a * fc * r + c
        return {base + row * r: v for row, v in self.f.column(j).items()}


class Composite(_Lazy):
    """Diagrammatic composite: ``maps[0]`` first, ``maps[-1]`` last."""

    def __init__(self, maps):
        super().__init__()
        maps = list(maps)
        if not maps:
            raise ShapeError("empty composite")
        for f, g in zip(maps, maps[1:]):
            if f.cod != g.dom:
                raise ShapeError(
                    f"cannot compose: codomain {f.cod!r} does not match domain {g.dom!r}"
                )
            if f.field != g.field:
                raise ShapeError("cannot compose maps over different fields")
        self.maps = maps
        self.field = maps[0].field
        self.dom = maps[0].dom
        self.cod = maps[-1].cod

    def _compute(self, i):
        vec = self.maps[0].column(i)
        for g in self.maps[1:]:
            vec = g.apply(vec)
        return vec


def seq(*maps) -> LinearMap:
    """Compose in diagram order, lazily."""
    if len(maps) == 1:
        return maps[0]
    return Composite(maps)


def compose(g: LinearMap, f: LinearMap) -> Morphism:
    """The matrix product ``g f`` (``f`` applied first)."""
    return Composite([f, g]).materialize()


def identity(X: GradedObject, field) -> Morphism:
    return Morphism(X, X, field, [{i: 1} for i in range(X.dim)], trusted=True)


def zero_map(X: GradedObject, Y: GradedObject, field) -> Morphism:
    return Morphism(X, Y, field, [{} for _ in range(X.dim)], trusted=True)


def tensor_mor(f: LinearMap, g: LinearMap) -> Morphism:
    """Kronecker product in the left-major index order of :func:`tensor_obj`."""
    if f.field != g.field:
        raise ShapeError("cannot tensor maps over different fields")
    if f.dom.group != g.dom.group:
        raise ShapeError("cannot tensor maps over different grade groups")
    gd, gc = g.dom.dim, g.cod.dim
    gcols = g.columns()
    cols = []
    for i in range(f.dom.dim):
        fcol = f.column(i)
        for j in range(gd):
            gcol = gcols[j]
            cols.append({r * gc + s: a * b for r, a in fcol.items() for s, b in gcol.items()})
    return Morphism(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), f.field, cols)


def add(f: LinearMap, g: LinearMap, scale_g=1) -> Morphism:
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeError("cannot add maps with different objects")
    cols = []
    for i in range(f.dom.dim):
        acc = dict(f.column(i))
        for r, v in g.column(i).items():
            acc[r] = acc.get(r, 0) + scale_g * v
        cols.append(acc)
    return Morphism(f.dom, f.cod, f.field, cols)


def first_difference(lhs: LinearMap, rhs: LinearMap):
    """Index of the first domain basis vector where the maps differ, else None."""
    if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
        raise ShapeError(
            f"diagram legs have different shapes: {lhs.dom.dim}->{lhs.cod.dim} "
            f"vs {rhs.dom.dim}->{rhs.cod.dim}"
        )
    for i in range(lhs.dom.dim):
        if lhs.column(i) != rhs.column(i):
            return i
    return None


def is_homogeneous(f: LinearMap) -> bool:
    """True when every nonzero entry preserves the grade."""
    dg, cg = f.dom.grades, f.cod.grades
    return all(cg[r] == dg[i] for i in range(f.dom.dim) for r in f.column(i))


def vector_labels(vec, obj: GradedObject, field):
    """Sparse vector rendered as ``{basis label: scalar string}``."""
    return {key_str(obj.keys[r]): field.format(v) for r, v in sorted(vec.items())}
