import pytest

from mbmcheck.builders import from_semigroup, semigroup_table
from mbmcheck.exactcore import bar, rev, seq
from mbmcheck.fusion import (
    CounitalFusion,
    check_comodule_fusion,
    check_derived_properties,
    check_fusion,
    check_module_fusion,
    check_short_fusion,
    derived_multiplication,
)


def fusions(R):
    """Each t_i as a counital fusion morphism in the category where it lives."""
    return {
        "t1": CounitalFusion(R.ctx, R.A, R.t1, R.e),
        "t2": CounitalFusion(rev(R.ctx), R.A, R.t2, R.e),
        "t3": CounitalFusion(bar(R.ctx), R.A, R.t3, R.e),
        "t4": CounitalFusion(bar(rev(R.ctx)), R.A, R.t4, R.e),
    }


def test_every_fusion_morphism_and_its_consequences(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        for which, cf in fusions(R).items():
            for check in (check_fusion, check_derived_properties, check_short_fusion):
                rep = check(cf)
                assert rep.passed, (name, which, check.__name__, rep.failures())


def test_short_fusion_handedness(catalog):
    fs = fusions(catalog["group-z3"])
    assert check_short_fusion(fs["t1"]).names() == ["short-fusion-left"]
    assert check_short_fusion(fs["t2"]).names() == ["short-fusion-right"]


def test_all_four_multiplications_agree(catalog):
    # m from t1 and from t2; m b^-1 from t3 and t4
    for name, R in catalog.items():
        fs = fusions(R)
        m = derived_multiplication(fs["t1"])
        assert derived_multiplication(fs["t2"]) == m, name
        assert derived_multiplication(fs["t3"]) == R.m_bar, name
        assert derived_multiplication(fs["t4"]) == R.m_bar, name


@pytest.mark.parametrize("table", ["leftzero2", "zero3", "z3", "semilattice2"])
def test_derived_multiplication_is_the_table(table):
    T = semigroup_table(table)
    R = from_semigroup(T)
    m = R.m
    for i, a in enumerate(T.labels):
        for j, b in enumerate(T.labels):
            col = m.column(i * len(T.labels) + j)
            assert col == {T.labels.index(T.mul(a, b)): 1}


def test_fusion_detects_a_corrupted_t(catalog):
    R = catalog["semigroup-z2"]
    bad = CounitalFusion(R.ctx, R.A, R.t1.mutated(1, 0, 1), R.e)
    rep = check_fusion(bad)
    assert not rep.passed
    w = rep.failures()[0]
    assert w.witness is not None
    assert w.lhs.column(w.witness.index) != w.rhs.column(w.witness.index)


def test_regular_coaction_and_action_are_fusion_modules(catalog):
    R = catalog["dual-z3"]
    cf = fusions(R)["t1"]
    assert check_comodule_fusion(cf, R.A, R.t1).passed
    assert check_module_fusion(cf, R.A, R.t1).passed
    unit = R.ctx.unit
    one = R.ctx.identity(R.A)
    assert check_comodule_fusion(cf, unit, one).passed


def test_module_split_epi_fails_for_zero_semigroup(catalog):
    R = catalog["semigroup-zero3"]
    rep = check_module_fusion(fusions(R)["t1"], R.A, R.t1)
    ent = rep.entry("module-counit-split-epi")
    assert not ent.passed and ent.data["rank"] == 1


def test_counit_sees_derived_multiplication(catalog):
    R = catalog["group-z2"]
    T = R.ctx.tensor
    assert seq(R.m, R.e).materialize() == T(R.e, R.e).materialize()
