"""Graded based objects and their strict tensor product.

A basis element is keyed by a tuple of atomic labels.  An object declared by
hand has keys ``("x",), ("y",), ...``; the tensor product concatenates keys,
and the unit object has the single key ``()``.  Concatenation is strictly
associative and ``()`` is a strict unit, so associators and unitors are
identities on the nose.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import ShapeError


class GradeGroup:
    """The finite abelian group Z_{n1} x ... x Z_{nk}; elements are int tuples."""

    __slots__ = ("moduli",)

    def __init__(self, moduli=()):
        moduli = tuple(int(n) for n in moduli)
        if any(n < 1 for n in moduli):
            raise ValueError(f"grade moduli must be positive, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    def __setattr__(self, key, value):
        raise AttributeError("GradeGroup is immutable")

    @property
    def zero(self):
        return (0,) * len(self.moduli)

    def normalize(self, g):
        if isinstance(g, int):
            g = (g,)
        g = tuple(g)
        if len(g) != len(self.moduli):
            raise ShapeError(f"grade {g} does not belong to Z{self.moduli}")
        return tuple(a % n for a, n in zip(g, self.moduli))

    def add(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.moduli))

    def elements(self):
        return [tuple(e) for e in itertools.product(*(range(n) for n in self.moduli))]

    def order(self):
        out = 1
        for n in self.moduli:
            out *= n
        return out

    def __eq__(self, other):
        return isinstance(other, GradeGroup) and other.moduli == self.moduli

    def __hash__(self):
        return hash(("GradeGroup", self.moduli))

    def __repr__(self):
        if not self.moduli:
            return "GradeGroup(trivial)"
        return "GradeGroup(" + " x ".join(f"Z{n}" for n in self.moduli) + ")"


TRIVIAL = GradeGroup(())


def key_str(key) -> str:
    """Human-readable form of a basis key: ``('x','y') -> 'x.y'``, ``() -> 'I'``."""
    return ".".join(key) if key else "I"


class GradedObject:
    """A finite ordered basis with one grade per basis element.

    Equality looks at keys, grades and the grade group only; ``name`` is a
    display hint.
    """

    __slots__ = ("keys", "grades", "group", "name", "_index", "_hash")

    def __init__(self, keys, grades, group=TRIVIAL, name=None):
        keys = tuple(tuple(k) for k in keys)
        grades = tuple(group.normalize(g) for g in grades)
        if len(keys) != len(grades):
            raise ShapeError("one grade per basis element is required")
        index = {k: i for i, k in enumerate(keys)}
        if len(index) != len(keys):
            raise ShapeError(f"duplicate basis labels in {[key_str(k) for k in keys]}")
        object.__setattr__(self, "keys", keys)
        object.__setattr__(self, "grades", grades)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_hash", hash((keys, grades, group)))

    def __setattr__(self, key, value):
        raise AttributeError("GradedObject is immutable")

    @property
    def dim(self) -> int:
        return len(self.keys)

    @property
    def labels(self):
        return [key_str(k) for k in self.keys]

    def index(self, key) -> int:
        if isinstance(key, str):
            key = tuple(key.split(".")) if key != "I" else ()
        return self._index[tuple(key)]

    def label(self, i) -> str:
        return key_str(self.keys[i])

    def renamed(self, name):
        return GradedObject(self.keys, self.grades, self.group, name)

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, GradedObject)
            and self._hash == other._hash
            and self.keys == other.keys
            and self.grades == other.grades
            and self.group == other.group
        )

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.keys)

    def __repr__(self):
        tag = self.name or "obj"
        return f"<{tag} dim={self.dim} {self.labels[:6]}{'...' if self.dim > 6 else ''}>"


def make_object(labels, grades=None, group=TRIVIAL, name=None) -> GradedObject:
    """Build an object from atomic label strings, grades default to zero."""
    labels = list(labels)
    for s in labels:
        if not isinstance(s, str) or not s or "." in s or s == "I":
            raise ShapeError(f"bad atomic basis label {s!r}")
    if grades is None:
        grades = [group.zero] * len(labels)
    return GradedObject([(s,) for s in labels], grades, group, name)


@lru_cache(maxsize=None)
def unit_object(group=TRIVIAL) -> GradedObject:
    return GradedObject([()], [group.zero], group, "I")


@lru_cache(maxsize=4096)
def _tensor2(X: GradedObject, Y: GradedObject) -> GradedObject:
    if X.group != Y.group:
        raise ShapeError(f"cannot tensor objects over {X.group} and {Y.group}")
    if X.dim == 1 and X.keys[0] == ():
        return Y
    if Y.dim == 1 and Y.keys[0] == ():
        return X
    add = X.group.add
    keys = [kx + ky for kx in X.keys for ky in Y.keys]
    grades = [add(gx, gy) for gx in X.grades for gy in Y.grades]
    name = None
    if X.name and Y.name:
        name = f"{X.name}.{Y.name}"
    return GradedObject(keys, grades, X.group, name)


def tensor_obj(*objs: GradedObject) -> GradedObject:
    """Left-major tensor product; with no arguments there is no group to pick."""
    if not objs:
        raise ShapeError("tensor_obj needs at least one object")
    out = objs[0]
    for Y in objs[1:]:
        out = _tensor2(out, Y)
    return out
