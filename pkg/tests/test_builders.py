import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbmcheck.builders import (
    CATALOG_SEMIGROUPS,
    SemigroupTable,
    catalog_bimonoid,
    check_bimonoid,
    dual_of_finite_monoid,
    enumerate_semigroups,
    exterior_line,
    from_bimonoid,
    from_semigroup,
    mutate,
    mutation_sites,
    quantum_line,
    search_nonunital_nondegenerate,
    semigroup_bimonoid,
    semigroup_table,
)
from mbmcheck.exactcore import GF, Refused, context_from_table
from mbmcheck.mbm import check_regular


def formula_images(T, rule):
    """Expected image key of each basis pair a.b, straight from the formulas."""
    mul = T.mul
    rules = {
        "t1": lambda a, b: (a, mul(a, b)),
        "t2": lambda a, b: (mul(a, b), b),
    }
    return {(a, b): rules[rule](a, b) for a in T.labels for b in T.labels}


@pytest.mark.parametrize("table", CATALOG_SEMIGROUPS)
@pytest.mark.parametrize("rule", ["t1", "t2"])
def test_semigroup_maps_follow_formulas(table, rule):
    T = semigroup_table(table)
    R = from_semigroup(T)
    f = getattr(R, rule)
    AA = f.dom
    for (a, b), image in formula_images(T, rule).items():
        col = f.column(AA.index((a, b)))
        assert col == {AA.index(image): 1}


def test_nonassociative_table_is_refused():
    T = SemigroupTable.from_rows(["a", "b"], [["b", "a"], ["a", "a"]])
    assert T.associativity_failure() is not None
    with pytest.raises(Refused) as info:
        from_semigroup(T)
    assert info.value.witness == list(T.associativity_failure())


def test_table_shape_is_checked():
    with pytest.raises(Refused):
        SemigroupTable.from_rows(["a", "b"], [["a", "b"]])
    with pytest.raises(Refused):
        SemigroupTable.from_rows(["a"], [["c"]])
    with pytest.raises(Refused):
        semigroup_table("no-such-table")


def test_unitless_tables_have_no_bimonoid():
    with pytest.raises(Refused):
        semigroup_bimonoid(semigroup_table("leftzero2"))
    with pytest.raises(Refused):
        dual_of_finite_monoid(semigroup_table("zero3"))


def test_semigroup_counts_match_known_sequence():
    # labelled associative operations on 1, 2, 3 points: 1, 8, 113
    assert [sum(1 for _ in enumerate_semigroups(n)) for n in (1, 2, 3)] == [1, 8, 113]


def test_search_for_nonunital_nondegenerate_examples():
    examined, findings = search_nonunital_nondegenerate(3)
    assert examined == 122
    assert findings, "order three has non-unital semigroups with non-degenerate span"
    for f in findings:
        assert f["regular"]
        rows = f["table"]
        T = SemigroupTable.from_rows([f"s{i}" for i in range(len(rows))], rows)
        assert T.unit() is None


@given(st.sampled_from(["z2", "z3", "semilattice2"]), st.data())
@settings(max_examples=20, deadline=None)
def test_random_enumerated_semigroups_are_regular(_, data):
    T = data.draw(st.sampled_from(list(enumerate_semigroups(2))))
    assert check_regular(from_semigroup(T)).passed


def test_catalog_bimonoids_pass():
    for name in ("group-z2", "group-z3", "dual-z2", "dual-z3", "dual-semilattice2", "lambda"):
        rep = check_bimonoid(catalog_bimonoid(name))
        assert rep.passed, name
        assert len(rep.entries) == 10


def test_exterior_line_needs_the_sign():
    B = exterior_line(braided=False)
    rep = check_bimonoid(B)
    assert [e.name for e in rep.failures()] == ["comultiplication-multiplicative"]
    with pytest.raises(Refused):
        from_bimonoid(B)


def test_bimonoid_maps_over_finite_field():
    R = from_bimonoid(catalog_bimonoid("dual-z3", GF(5)))
    assert check_regular(R).passed


def test_quantum_line_requires_primitive_root():
    # chi(1,1) = 1 is not primitive
    trivial = context_from_table((3,), [["1"] * 3] * 3, GF(7))
    with pytest.raises(Refused):
        quantum_line(trivial)
    Q = quantum_line()
    assert check_bimonoid(Q).passed


def test_mutation_sites_and_mutate(catalog):
    R = catalog["semigroup-z2"]
    sites = mutation_sites(R)
    assert len(sites) == 4 * 16 + 2
    assert len(mutation_sites(R, ["e"])) == 2
    bad = mutate(R, ("t2", 3, 0), delta=2)
    assert bad.t2.entry(3, 0) == R.t2.entry(3, 0) + 2
    assert bad.t1 is R.t1
    with pytest.raises(IndexError):
        mutate(R, ("m", 0, 0))
