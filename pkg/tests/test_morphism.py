import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbmcheck.exactcore import (
    QQ,
    Morphism,
    ShapeError,
    compose,
    identity,
    make_object,
    seq,
    tensor_mor,
    tensor_obj,
    unit_object,
    vec,
)
from mbmcheck.exactcore.context import random_homogeneous


def obj(n, prefix="x"):
    return make_object([f"{prefix}{i}" for i in range(n)])


def rand_map(X, Y, seed):
    return random_homogeneous(X, Y, QQ, random.Random(seed), -3, 3)


def test_unit_is_strict():
    X = obj(3)
    I = unit_object()
    assert tensor_obj(I, X) == X
    assert tensor_obj(X, I) == X
    assert tensor_obj(I, I) == I


def test_tensor_keys_concatenate_left_major():
    X, Y = obj(2, "a"), obj(3, "b")
    XY = tensor_obj(X, Y)
    assert XY.labels[:4] == ["a0.b0", "a0.b1", "a0.b2", "a1.b0"]
    assert XY.index("a1.b2") == 5


def test_labels_are_validated():
    with pytest.raises(ShapeError):
        make_object(["a.b"])
    with pytest.raises(ShapeError):
        make_object(["I"])
    with pytest.raises(ShapeError):
        make_object(["a", "a"])


def test_from_rows_shape_mismatch():
    with pytest.raises(ShapeError):
        Morphism.from_rows(obj(2), obj(2), [["1", "0"]], QQ)


def test_seq_rejects_mismatched_codomain():
    f = rand_map(obj(2), obj(3), 1)
    with pytest.raises(ShapeError):
        seq(f, f).materialize()


def test_mutated_changes_one_entry():
    f = identity(obj(2), QQ)
    g = f.mutated(0, 1, 5)
    assert g.entry(0, 1) == 5 and g.entry(0, 0) == 1
    assert g != f


def test_whiskering_matches_kronecker():
    ctx = vec()
    X, Y, Z = obj(2, "a"), obj(3, "b"), obj(2, "c")
    f = rand_map(Y, Y, 7)
    lazy = ctx.tensor(X, f, Z).materialize()
    dense = tensor_mor(tensor_mor(identity(X, QQ), f), identity(Z, QQ))
    assert lazy == dense


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**6))
def test_composition_is_associative(a, b, c, seed):
    X, Y, Z, W = obj(a, "p"), obj(b, "q"), obj(c, "r"), obj(2, "s")
    f, g, h = rand_map(X, Y, seed), rand_map(Y, Z, seed + 1), rand_map(Z, W, seed + 2)
    assert seq(seq(f, g), h).materialize() == seq(f, seq(g, h)).materialize()
    assert compose(h, compose(g, f)) == seq(f, g, h).materialize()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**6))
def test_interchange_law(a, b, seed):
    ctx = vec()
    X, Y, U, V = obj(a, "p"), obj(b, "q"), obj(2, "u"), obj(2, "v")
    f, g = rand_map(X, Y, seed), rand_map(U, V, seed + 1)
    assert seq(ctx.tensor(f, U), ctx.tensor(Y, g)).materialize() == \
        seq(ctx.tensor(X, g), ctx.tensor(f, V)).materialize()
    assert ctx.tensor(f, g).materialize() == tensor_mor(f, g)


def test_identity_functoriality():
    # id_2 (x) id_3 = id_6
    X, Y = obj(2, "a"), obj(3, "b")
    assert tensor_mor(identity(X, QQ), identity(Y, QQ)) == identity(tensor_obj(X, Y), QQ)
