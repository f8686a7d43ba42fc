"""Comodules and modules over a regular multiplier bimonoid.

A comodule is an object V with two coactions ``v1, v3: V.A -> V.A``; a module
is an object Q with actions ``q1: A.Q -> A.Q`` and ``q4: Q.A -> Q.A``.  Both
come with morphism checks, tensor products, unit objects and, when the
multiplication is non-degenerate, a way of recovering one structure map
from the other.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .exactcore.context import bar, rev
from .exactcore.errors import Refused
from .exactcore.graded import GradedObject
from .exactcore.linalg import rank, solve_for_morphism, solve_through_epi
from .exactcore.morphism import LinearMap, seq
from .fusion import CounitalFusion, check_comodule_fusion, check_module_fusion, expect_shape, split_epi_entry
from .mbm import RegularMultiplierBimonoid, check_nondegenerate
from .report import CheckReport, compare


@dataclass(frozen=True)
class RegComodule:
    R: RegularMultiplierBimonoid
    V: GradedObject
    v1: LinearMap
    v3: LinearMap

    def replace(self, **kw):
        return replace(self, **kw)


@dataclass(frozen=True)
class RegModule:
    R: RegularMultiplierBimonoid
    Q: GradedObject
    q1: LinearMap
    q4: LinearMap

    def replace(self, **kw):
        return replace(self, **kw)


def _same_base(R1, R2):
    if R1 is R2:
        return True
    return R1 == R2


# -- comodules ---------------------------------------------------------------


def _validate_comodule(C: RegComodule):
    VA = C.R.ctx.tensor_obj(C.V, C.R.A)
    expect_shape(C.v1, VA, VA, "coaction v1")
    expect_shape(C.v3, VA, VA, "coaction v3")


def comodule_compatibility_legs(R, V, v1, v3):
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    bav = ctx.braiding(A, V)
    m = R.m
    return (seq(T(A, v1), T(bav, A), T(V, m)), seq(T(bav, A), T(v3, A), T(V, m)))


def check_comodule(C: RegComodule) -> CheckReport:
    _validate_comodule(C)
    R = C.R
    rep = CheckReport(f"comodule over a regular multiplier bimonoid in {R.ctx.flavor}")
    rep.extend(check_comodule_fusion(CounitalFusion(R.ctx, R.A, R.t1, R.e), C.V, C.v1), prefix="v1")
    rep.extend(check_comodule_fusion(CounitalFusion(bar(R.ctx), R.A, R.t3, R.e), C.V, C.v3), prefix="v3")
    rep.add(compare("coaction-compatibility", "comodule-compatibility",
                    *comodule_compatibility_legs(R, C.V, C.v1, C.v3)))
    return rep


def unit_comodule(R: RegularMultiplierBimonoid) -> RegComodule:
    one = R.ctx.identity(R.A)
    return RegComodule(R, R.ctx.unit, one, one)


def regular_comodule(R: RegularMultiplierBimonoid) -> RegComodule:
    return RegComodule(R, R.A, R.t1, R.t3)


def tensor_comodules(C1: RegComodule, C2: RegComodule) -> RegComodule:
    """The coactions on V.W built from those on V and W."""
    if not _same_base(C1.R, C2.R):
        raise Refused("comodules live over different regular multiplier bimonoids")
    R = C1.R
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    V, W = C1.V, C2.V
    v1, v3, w1, w3 = C1.v1, C1.v3, C2.v1, C2.v3
    bvw, bvwi = ctx.braiding(V, W), ctx.braiding_inv(V, W)
    baw, bawi = ctx.braiding(A, W), ctx.braiding_inv(A, W)
    x1 = seq(T(V, w1), T(bvw, A), T(W, v1), T(bvwi, A)).materialize()
    x3 = seq(T(V, bawi), T(v3, W), T(V, baw), T(V, w3)).materialize()
    return RegComodule(R, ctx.tensor_obj(V, W), x1, x3)


def check_comodule_morphism(C1: RegComodule, C2: RegComodule, f: LinearMap) -> CheckReport:
    R = C1.R
    if not _same_base(R, C2.R):
        raise Refused("comodules live over different regular multiplier bimonoids")
    expect_shape(f, C1.V, C2.V, "comodule morphism")
    T, A = R.ctx.tensor, R.A
    rep = CheckReport("morphism of comodules")
    rep.add(compare("intertwines-v1", "comodule-morphism", seq(T(f, A), C2.v1), seq(C1.v1, T(f, A))))
    rep.add(compare("intertwines-v3", "comodule-morphism", seq(T(f, A), C2.v3), seq(C1.v3, T(f, A))))
    return rep


def _require_nondegenerate(R):
    nd = check_nondegenerate(R.ctx, R.m)
    if not (nd.left and nd.right):
        raise Refused("multiplication is degenerate; the companion is not determined",
                      data=nd._asdict())


def solve_companion_coaction(R: RegularMultiplierBimonoid, V: GradedObject, v1: LinearMap):
    """Recover v3 from v1 through the compatibility square.  ``(v3, nullity)``."""
    _require_nondegenerate(R)
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    VA = ctx.tensor_obj(V, A)
    expect_shape(v1, VA, VA, "coaction v1")
    bav, bavi = ctx.braiding(A, V), ctx.braiding_inv(A, V)
    m = R.m
    rhs = seq(T(bavi, A), T(A, v1), T(bav, A), T(V, m))
    return solve_for_morphism(VA, VA, ctx.field, lambda X: seq(T(X, A), T(V, m)), rhs)


# -- modules -----------------------------------------------------------------


def _validate_module(M: RegModule):
    ctx = M.R.ctx
    AQ, QA = ctx.tensor_obj(M.R.A, M.Q), ctx.tensor_obj(M.Q, M.R.A)
    expect_shape(M.q1, AQ, AQ, "action q1")
    expect_shape(M.q4, QA, QA, "action q4")


def module_action(M: RegModule) -> LinearMap:
    """The associative action q = (e.1) q1 : A.Q -> Q."""
    return seq(M.q1, M.R.ctx.tensor(M.R.e, M.Q)).materialize()


def check_module(M: RegModule) -> CheckReport:
    _validate_module(M)
    R, Q = M.R, M.Q
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    rep = CheckReport(f"module over a regular multiplier bimonoid in {ctx.flavor}")
    rep.extend(check_module_fusion(CounitalFusion(ctx, A, R.t1, R.e), Q, M.q1), prefix="q1")
    rep.extend(check_module_fusion(CounitalFusion(bar(rev(ctx)), A, R.t4, R.e), Q, M.q4), prefix="q4")
    rep.add(compare("q1-commutes-with-t4", "module-compatibility",
                    seq(T(A, M.q1), T(R.t4, Q)), seq(T(R.t4, Q), T(A, M.q1))))
    rep.add(compare("q4-commutes-with-t1", "module-compatibility",
                    seq(T(M.q4, A), T(Q, R.t1)), seq(T(Q, R.t1), T(M.q4, A))))
    diag1 = seq(M.q1, T(R.e, Q))
    diag2 = seq(ctx.braiding(A, Q), M.q4, T(Q, R.e))
    rep.add(compare("diagonal-agrees", "module-diagonal", diag1, diag2))
    rep.add(split_epi_entry("diagonal-split-epi", "module-diagonal", diag1))
    return rep


def unit_module(R: RegularMultiplierBimonoid) -> RegModule:
    one = R.ctx.identity(R.A)
    return RegModule(R, R.ctx.unit, one, one)


def regular_module(R: RegularMultiplierBimonoid) -> RegModule:
    return RegModule(R, R.A, R.t1, R.t4)


def split_epi_hypotheses(R: RegularMultiplierBimonoid) -> CheckReport:
    """Ranks of e and of the composite under which modules tensor."""
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    bi = ctx.braiding_inv(A, A)
    m = R.m
    k1 = seq(T(A, R.t1), T(bi, A), T(m, A))
    k2 = seq(T(R.t4, A), T(A, m))
    rep = CheckReport("split epimorphism hypotheses for tensoring modules")
    rep.add(split_epi_entry("counit-split-epi", "tensor-hypothesis", R.e))
    rep.add(compare("composites-agree", "tensor-hypothesis", k1, k2))
    rep.add(split_epi_entry("t1-composite-split-epi", "tensor-hypothesis", k1))
    rep.add(split_epi_entry("t4-composite-split-epi", "tensor-hypothesis", k2))
    return rep


def tensor_modules(M1: RegModule, M2: RegModule) -> RegModule:
    """The actions on P.Q built from those on P and Q."""
    if not _same_base(M1.R, M2.R):
        raise Refused("modules live over different regular multiplier bimonoids")
    R = M1.R
    hyp = split_epi_hypotheses(R)
    if not hyp.passed:
        raise Refused(
            "split epimorphism hypotheses fail",
            data={e.name: e.data for e in hyp.entries if not e.passed},
        )
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    P, Q = M1.Q, M2.Q
    p1, p4, q1, q4 = M1.q1, M1.q4, M2.q1, M2.q4
    bqp, bqpi = ctx.braiding(Q, P), ctx.braiding_inv(Q, P)
    baq, baqi = ctx.braiding(A, Q), ctx.braiding_inv(A, Q)
    x1 = seq(T(A, bqpi), T(q1, P), T(A, bqp), T(p1, Q)).materialize()
    x4 = seq(T(P, baqi), T(p4, Q), T(P, baq), T(P, q4)).materialize()
    return RegModule(R, ctx.tensor_obj(P, Q), x1, x4)


def check_module_morphism(M1: RegModule, M2: RegModule, f: LinearMap) -> CheckReport:
    R = M1.R
    if not _same_base(R, M2.R):
        raise Refused("modules live over different regular multiplier bimonoids")
    expect_shape(f, M1.Q, M2.Q, "module morphism")
    T, A = R.ctx.tensor, R.A
    rep = CheckReport("morphism of modules")
    rep.add(compare("intertwines-q1", "module-morphism", seq(M1.q1, T(A, f)), seq(T(A, f), M2.q1)))
    rep.add(compare("intertwines-q4", "module-morphism", seq(M1.q4, T(f, A)), seq(T(f, A), M2.q4)))
    return rep


def solve_companion_action(R: RegularMultiplierBimonoid, Q: GradedObject, q4: LinearMap):
    """Recover q1 from q4 through the barred multiplication.  ``(q1, nullity)``."""
    _require_nondegenerate(R)
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    AQ, QA = ctx.tensor_obj(A, Q), ctx.tensor_obj(Q, A)
    expect_shape(q4, QA, QA, "action q4")
    m_bar = R.m_bar
    rhs = seq(T(R.t4, Q), T(A, seq(ctx.braiding(A, Q), q4)), T(A, Q, R.e))
    return solve_for_morphism(AQ, AQ, ctx.field, lambda X: seq(T(A, X), T(m_bar, Q)), rhs)


def module_from_action_vec(R: RegularMultiplierBimonoid, Q: GradedObject, q: LinearMap) -> RegModule:
    """Rebuild (q1, q4) from an associative surjective action ``q: A.Q -> Q``.

    Only for ungraded vector spaces.  Raises NotSurjective, Refused or
    InconsistentSystem (with a kernel vector) when the action does not come
    from a module.
    """
    ctx, A = R.ctx, R.A
    if ctx.group.order() != 1:
        raise Refused("the action correspondence is stated for ungraded vector spaces")
    T = ctx.tensor
    expect_shape(q, ctx.tensor_obj(A, Q), Q, "action q")
    _require_nondegenerate(R)
    m = R.m
    assoc = compare("action-associative", "module-action", seq(T(m, Q), q), seq(T(A, q), q))
    if not assoc.passed:
        raise Refused("action is not associative", witness=assoc.witness)
    r = rank(q)
    if r < Q.dim:
        raise Refused(f"action is not surjective (rank {r} < {Q.dim})", data={"rank": r})
    p1 = T(A, q)
    q1 = solve_through_epi(seq(T(R.t1, Q), p1), p1)
    qb = seq(ctx.braiding(Q, A), q)
    p4 = T(qb, A)
    q4 = solve_through_epi(seq(T(Q, R.t4), p4), p4)
    return RegModule(R, Q, q1, q4)


__all__ = [
    "RegComodule",
    "RegModule",
    "check_comodule",
    "check_comodule_morphism",
    "check_module",
    "check_module_morphism",
    "comodule_compatibility_legs",
    "module_action",
    "module_from_action_vec",
    "regular_comodule",
    "regular_module",
    "solve_companion_action",
    "solve_companion_coaction",
    "split_epi_hypotheses",
    "tensor_comodules",
    "tensor_modules",
    "unit_comodule",
    "unit_module",
]
