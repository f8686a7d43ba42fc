import itertools

import pytest

from mbmcheck.exactcore import InconsistentSystem, Morphism, NotSurjective, Refused, make_object, zero_map
from mbmcheck.repcat import (
    check_comodule,
    check_comodule_morphism,
    check_module,
    check_module_morphism,
    module_action,
    module_from_action_vec,
    regular_comodule,
    regular_module,
    solve_companion_action,
    solve_companion_coaction,
    split_epi_hypotheses,
    tensor_comodules,
    tensor_modules,
    unit_comodule,
    unit_module,
)

DEGENERATE = {"semigroup-leftzero2", "semigroup-rightzero2", "semigroup-zero3"}
NO_MODULE_TENSOR = {"semigroup-leftzero2", "semigroup-zero3"}


def comodules(R):
    return {"unit": unit_comodule(R), "regular": regular_comodule(R)}


def modules(R):
    return {"unit": unit_module(R), "regular": regular_module(R)}


def same_comodule(C1, C2):
    return C1.V == C2.V and C1.v1 == C2.v1 and C1.v3 == C2.v3


def same_module(M1, M2):
    return M1.Q == M2.Q and M1.q1 == M2.q1 and M1.q4 == M2.q4


def test_unit_and_regular_comodules(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        for which, C in comodules(R).items():
            assert check_comodule(C).passed, (name, which)


def test_unit_and_regular_modules(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        for which, M in modules(R).items():
            rep = check_module(M)
            if name == "semigroup-zero3" and which == "regular":
                assert {e.name for e in rep.failures()} == {
                    "q1/module-counit-split-epi", "q4/module-counit-split-epi", "diagonal-split-epi"}
            else:
                assert rep.passed, (name, which, rep.failures())


def test_comodule_tensor_products(catalog):
    for name, R in catalog.items():
        base = comodules(R)
        base["regular2"] = tensor_comodules(base["regular"], base["regular"])
        for (n1, C1), (n2, C2) in itertools.product(base.items(), repeat=2):
            if R.A.dim ** 3 > 27 and "regular2" in (n1, n2):
                continue
            assert check_comodule(tensor_comodules(C1, C2)).passed, (name, n1, n2)
        U, C = base["unit"], base["regular"]
        assert same_comodule(tensor_comodules(U, C), C)
        assert same_comodule(tensor_comodules(C, U), C)
        left = tensor_comodules(tensor_comodules(C, C), C)
        right = tensor_comodules(C, tensor_comodules(C, C))
        assert same_comodule(left, right), name


def test_module_tensor_products(catalog):
    for name, R in catalog.items():
        base = modules(R)
        if name in NO_MODULE_TENSOR:
            assert not split_epi_hypotheses(R).passed
            with pytest.raises(Refused):
                tensor_modules(base["unit"], base["regular"])
            continue
        for (n1, M1), (n2, M2) in itertools.product(base.items(), repeat=2):
            assert check_module(tensor_modules(M1, M2)).passed, (name, n1, n2)
        U, M = base["unit"], base["regular"]
        assert same_module(tensor_modules(U, M), M)
        assert same_module(tensor_modules(M, U), M)
        left = tensor_modules(tensor_modules(M, M), M)
        right = tensor_modules(M, tensor_modules(M, M))
        assert same_module(left, right), name


def test_tensoring_across_bases_is_refused(catalog):
    C1 = regular_comodule(catalog["group-z2"])
    C2 = regular_comodule(catalog["group-z3"])
    with pytest.raises(Refused):
        tensor_comodules(C1, C2)
    with pytest.raises(Refused):
        tensor_modules(regular_module(catalog["group-z2"]), regular_module(catalog["dual-z2"]))


def test_companions_are_determined(catalog, qline):
    for name, R in [*catalog.items(), ("qline", qline)]:
        if name in DEGENERATE:
            with pytest.raises(Refused):
                solve_companion_coaction(R, R.A, R.t1)
            continue
        cs = list(comodules(R).values())
        if R.A.dim == 2:
            cs.append(tensor_comodules(cs[1], cs[1]))
        for C in cs:
            v3, k = solve_companion_coaction(R, C.V, C.v1)
            assert k == 0 and v3 == C.v3, name
        for M in modules(R).values():
            q1, k = solve_companion_action(R, M.Q, M.q4)
            assert k == 0 and q1 == M.q1, name


def test_comodule_morphisms(catalog):
    # swapping 1 and g moves the grading of the group span
    R = catalog["group-z2"]
    C = regular_comodule(R)
    one = R.ctx.identity(R.A)
    assert check_comodule_morphism(C, C, one).passed
    assert check_comodule_morphism(C, C, zero_map(R.A, R.A, R.field)).passed
    swap = Morphism.from_rows(R.A, R.A, [[0, 1], [1, 0]], R.field)
    assert not check_comodule_morphism(C, C, swap).passed
    M = regular_module(R)
    assert check_module_morphism(M, M, one).passed
    # right multiplication by g commutes with the action; a projection does not
    assert check_module_morphism(M, M, swap).passed
    project = Morphism.from_rows(R.A, R.A, [[1, 0], [0, 0]], R.field)
    assert not check_module_morphism(M, M, project).passed


def sign_action(R):
    """g acts by -1 on a line: the non-trivial character of Z_2."""
    Q = make_object(["v"], name="Q")
    AQ = R.ctx.tensor_obj(R.A, Q)
    sign = {"1": 1, "g": -1}
    return Q, Morphism.from_function(AQ, Q, R.field, lambda k: {("v",): sign[k[0]]})


def module_set(R):
    out = [unit_module(R), regular_module(R)]
    out.append(tensor_modules(out[1], out[1]))
    return out


@pytest.mark.parametrize("name", ["group-z2", "group-z3", "semigroup-z2", "semigroup-z3"])
def test_action_round_trip(catalog, name):
    R = catalog[name]
    mods = module_set(R)
    if R.A.labels == ("1", "g"):
        Q, q = sign_action(R)
        mods.append(module_from_action_vec(R, Q, q))
    for M in mods:
        assert check_module(M).passed
        q = module_action(M)
        back = module_from_action_vec(R, M.Q, q)
        assert same_module(back, M)
        assert module_action(back) == q


def test_bad_actions_are_refused(catalog):
    R = catalog["group-z2"]
    Q = make_object(["v"], name="Q")
    AQ = R.ctx.tensor_obj(R.A, Q)
    doubling = Morphism.from_function(AQ, Q, R.field, lambda k: {("v",): 2})
    with pytest.raises(Refused):
        module_from_action_vec(R, Q, doubling)
    zero = zero_map(AQ, Q, R.field)
    with pytest.raises((Refused, NotSurjective, InconsistentSystem)):
        module_from_action_vec(R, Q, zero)
    with pytest.raises(Refused):
        module_from_action_vec(catalog["lambda"], catalog["lambda"].A, catalog["lambda"].m)
