import pytest

from mbmcheck.builders import catalog_bimonoid, mutate, mutation_sites
from mbmcheck.exactcore import GradedContext, make_object, seq
from mbmcheck.functorial import (
    ProbeSet,
    build_G2s,
    build_T2s,
    check_bicomonad_from_bimonoid,
    check_induced_comodule,
    check_induced_module,
    check_multiplier_bicomonad,
    check_multiplier_bimonad,
    check_split_epi_hypotheses,
    induce_G_comodule,
    induce_T_module,
)
from mbmcheck.mbm import check_regular
from mbmcheck.repcat import regular_comodule, regular_module, unit_comodule


def small(R):
    return ProbeSet.from_spec(R, "I,A")


def failing(rep, prefix):
    return [e.name for e in rep.failures() if e.name.startswith(prefix)]


def test_specialisations_at_the_unit(catalog, qline):
    for name, R in [("group-z3", catalog["group-z3"]), ("qline", qline)]:
        I, A = R.ctx.unit, R.A
        b = R.ctx.braiding(A, A)
        g = build_G2s(R, I, I)
        assert g["G2_check"] == R.t1, name
        assert g["G2_hat"] == seq(b, R.t3).materialize(), name
        t = build_T2s(R, I, I)
        assert t["T2_hat"] == R.t1, name
        assert t["T2_check"] == seq(b, R.t4).materialize(), name
        assert build_T2s(R, I, I)["mu"] == R.m, name


def test_diagonals_agree_for_z2_at_A(catalog):
    R = catalog["group-z2"]
    g = build_G2s(R, R.A, R.A)
    assert g["G2"] == g["G2_via_hat"]
    t = build_T2s(R, R.A, R.A)
    assert t["mu"] == t["mu_via_check"]


def test_catalog_passes_the_functor_checks(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        P = small(R)
        assert check_multiplier_bicomonad(R, P).passed, name
        assert check_multiplier_bimonad(R, P).passed, name


def test_default_probes_on_a_nonsymmetric_example(qline):
    rep = check_multiplier_bimonad(qline, parallel=2)
    assert rep.passed
    # dim 3 carriers put some AA triples over the budget
    assert all(e.data["reason"] for e in rep.entries if e.skipped)


def test_probe_subset_gives_subset_of_entries(catalog):
    R = catalog["dual-z2"]
    few = check_multiplier_bicomonad(R, small(R)).names()
    many = check_multiplier_bicomonad(R).names()
    assert set(few) < set(many)


def test_probe_spec_errors(catalog):
    R = catalog["group-z2"]
    for bad in ("", "I,B", "A,A", "I,AB"):
        with pytest.raises(ValueError):
            ProbeSet.from_spec(R, bad)


def test_budget_skips_large_tuples(catalog):
    R = catalog["semigroup-z3"]
    P = ProbeSet.from_spec(R, "I,A,AA", budget=81)
    rep = check_multiplier_bimonad(R, P)
    skips = [e for e in rep.entries if e.skipped]
    assert skips and all("budget" in e.data["reason"] for e in skips)
    assert rep.passed


def test_parallel_matches_serial(catalog):
    R = catalog["semigroup-z2"]
    a = check_multiplier_bimonad(R, small(R)).to_json()
    b = check_multiplier_bimonad(R, small(R), parallel=4).to_json()
    assert a == b


def first_mutant(R, names, predicate):
    for site in mutation_sites(R, names):
        M = mutate(R, site)
        if predicate(M):
            return site, M
    return None, None


def test_broken_t3_breaks_the_diagonal(catalog):
    R = catalog["group-z2"]
    site, M = first_mutant(R, ["t3"], lambda M: not check_regular(M).passed)
    rep = check_multiplier_bicomonad(M, small(M))
    assert failing(rep, "diagonals-agree"), site


def test_broken_t4_breaks_the_multiplication(catalog):
    R = catalog["group-z2"]
    site, M = first_mutant(R, ["t4"], lambda M: not check_regular(M).passed)
    rep = check_multiplier_bimonad(M, small(M))
    assert failing(rep, "multiplications-agree"), site


def test_axiom_B_mutant_breaks_compatibility(catalog):
    R = catalog["dual-z2"]

    def breaks_B(M):
        rep = check_regular(M)
        return not rep.entry("axiom-B").passed
    site, M = first_mutant(R, ["t1", "t4"], breaks_B)
    assert site is not None
    rep = check_multiplier_bimonad(M, small(M))
    assert failing(rep, "hat-check-compatibility"), site


class Skewed(GradedContext):
    def braid_coefficient(self, x_key, x_grade, y_key, y_grade):
        return 3 if y_key and y_key[-1] == "g" else 1


def test_corrupted_braiding_breaks_naturality(catalog):
    R = catalog["group-z2"]
    bad = R.replace(ctx=Skewed(R.ctx.chi))
    rep = check_multiplier_bicomonad(bad, small(bad))
    assert failing(rep, "G-check-natural") or failing(rep, "G-hat-natural")


def test_induced_coactions_and_actions(catalog):
    R = catalog["dual-z3"]
    I = R.ctx.unit
    C = regular_comodule(R)
    b = R.ctx.braiding(R.A, R.A)
    assert induce_G_comodule(C, I) == (C.v1, seq(b, C.v3).materialize())
    M = regular_module(R)
    assert induce_T_module(M, I) == (M.q1, seq(b, M.q4).materialize())
    for X in (C, unit_comodule(R)):
        assert check_induced_comodule(X, small(R)).passed
    assert check_induced_module(M, small(R)).passed


def test_broken_coaction_is_caught(catalog):
    R = catalog["group-z2"]
    C = regular_comodule(R)
    bad = C.replace(v1=C.v1.mutated(0, 1, 1))
    rep = check_induced_comodule(bad, small(R))
    assert failing(rep, "v-check")


def test_split_epi_hypotheses(catalog):
    assert check_split_epi_hypotheses(catalog["semigroup-z2"]).passed
    rep = check_split_epi_hypotheses(catalog["semigroup-zero3"])
    assert {e.name for e in rep.failures()} == {"t1-composite-split-epi", "t4-composite-split-epi"}
    rep = check_induced_module(regular_module(catalog["semigroup-zero3"]), small(catalog["semigroup-zero3"]))
    assert failing(rep, "action-split-epi")


def test_bicomonad_from_a_bimonoid():
    for name in ("group-z2", "dual-z3", "lambda"):
        B = catalog_bimonoid(name)
        rep = check_bicomonad_from_bimonoid(B)
        assert rep.passed, name
        assert rep.entries


def test_probes_must_share_the_grading(catalog):
    R = catalog["lambda"]
    P = ProbeSet(("X",), (make_object(["x"]),))
    with pytest.raises(ValueError):
        P.validate(R)
