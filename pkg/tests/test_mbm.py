import pytest
import sympy

from mbmcheck.builders import mutate
from mbmcheck.exactcore import Refused, ShapeError
from mbmcheck.mbm import (
    check_a12,
    check_mbm,
    check_mbm_nondeg_equivalences,
    check_minimality_diagrams,
    check_multiplier_bialgebra,
    check_nondegenerate,
    check_regular,
    check_regular_nondeg_sufficiency,
    curried_slices,
    determine_t3,
    determine_t4,
    transform_regular,
)
from mbmcheck.report import INFORMATIONAL

EXPECTED_NONDEG = {
    "semigroup-leftzero2": (True, False),
    "semigroup-rightzero2": (False, True),
    "semigroup-zero3": (False, False),
}
DEGENERATE = set(EXPECTED_NONDEG)


def test_catalog_is_regular(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        rep = check_regular(R)
        assert rep.passed, (name, [e.name for e in rep.failures()])
        assert len(rep.entries) == 2 * 6 + 5


def test_quantum_line_braiding_is_not_symmetric(qline):
    A = qline.A
    assert qline.ctx.braiding(A, A).materialize() != qline.ctx.braiding_inv(A, A).materialize()


def test_shape_errors_are_raised(catalog):
    R = catalog["semigroup-z2"]
    with pytest.raises(ShapeError):
        check_regular(R.replace(e=R.t1))


def sympy_slice_rank(m, side):
    """Rank of a -> m(a.-) or a -> m(-.a), built from the dense matrix."""
    n = m.cod.dim
    M = sympy.Matrix(m.rows())
    vecs = []
    for a in range(n):
        cols = [a * n + o if side == "left" else o * n + a for o in range(n)]
        vecs.append(list(M[:, cols]))
    return sympy.Matrix(vecs).rank()


def test_nondegeneracy_against_rank_oracle(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        nd = check_nondegenerate(R.ctx, R.m)
        n = R.A.dim
        if name != "qline":
            assert (nd.left_rank, nd.right_rank) == (sympy_slice_rank(R.m, "left"), sympy_slice_rank(R.m, "right"))
        assert (nd.left, nd.right) == (nd.left_rank == n, nd.right_rank == n)
        assert (nd.left, nd.right) == EXPECTED_NONDEG.get(name, (True, True)), name


def test_curried_slices_shape(catalog):
    R = catalog["semigroup-z3"]
    assert len(curried_slices(R.m, "left")) == 9
    with pytest.raises(ValueError):
        curried_slices(R.t1, "left")


def test_a12_and_mbm(catalog):
    for name, R in catalog.items():
        assert check_mbm(R.mbm).passed, name
        assert check_mbm(R.bar_mbm).passed, name
        assert check_a12(R.mbm).passed, name


def test_equivalent_forms_under_nondegeneracy(catalog):
    for name, R in catalog.items():
        if name in DEGENERATE:
            with pytest.raises(Refused):
                check_mbm_nondeg_equivalences(R.mbm)
            with pytest.raises(Refused):
                check_regular_nondeg_sufficiency(R)
            continue
        assert check_mbm_nondeg_equivalences(R.mbm).passed, name
        assert check_regular_nondeg_sufficiency(R).passed, name


def test_equivalence_facts_hold_on_mutants(catalog):
    # hypotheses break or all forms flip together; the facts never fail
    R = catalog["group-z2"]
    for site in [("t1", 0, 0), ("t1", 3, 1), ("t2", 2, 2)]:
        rep = check_mbm_nondeg_equivalences(mutate(R, site).mbm)
        for e in rep.entries:
            if e.name.startswith("uniform-"):
                assert e.passed, (site, e.data)


@pytest.mark.parametrize("variant", ["rev", "bar", "barrev"])
def test_transforms_preserve_verdict(catalog, variant):
    for name, R in catalog.items():
        assert check_regular(transform_regular(R, variant)).passed, name
    bad = mutate(catalog["dual-z2"], ("t3", 1, 2))
    assert not check_regular(bad).passed
    assert not check_regular(transform_regular(bad, variant)).passed


def test_transform_rejects_unknown_variant(catalog):
    with pytest.raises(ValueError):
        transform_regular(catalog["group-z2"], "sideways")


def test_multiplier_bialgebra(catalog):
    for name, R in catalog.items():
        if name == "lambda":
            with pytest.raises(Refused):
                check_multiplier_bialgebra(R.mbm)
            continue
        rep = check_multiplier_bialgebra(R.mbm)
        if name in DEGENERATE:
            assert not rep.passed
            assert all(e.anchor == "bialgebra-axiom-b" for e in rep.failures()), name
        else:
            assert rep.passed, name
    left = check_multiplier_bialgebra(catalog["semigroup-leftzero2"].mbm)
    assert {e.name for e in left.failures()} == {"b-t1-composite-surjective", "b-nondegenerate-right"}


def test_determination_is_unique_when_nondegenerate(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        if name in DEGENERATE:
            continue
        t3, k3 = determine_t3(R)
        t4, k4 = determine_t4(R)
        assert (k3, k4) == (0, 0), name
        assert t3 == R.t3 and t4 == R.t4, name


def test_determination_is_loose_when_degenerate(catalog):
    _, k = determine_t4(catalog["semigroup-leftzero2"])
    assert k > 0
    _, k = determine_t3(catalog["semigroup-rightzero2"])
    assert k > 0


def test_minimality_is_informational(catalog):
    for R in catalog.values():
        rep = check_minimality_diagrams(R)
        assert all(e.severity == INFORMATIONAL for e in rep.entries)
        assert rep.passed
