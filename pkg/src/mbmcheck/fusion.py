"""Counital fusion morphisms, their multiplication, and (co)modules over them.

Every diagram is written once against ``cf.ctx``; checking ``t2`` of a
multiplier bimonoid amounts to running the same code in ``rev(ctx)``, ``t3``
in ``bar(ctx)`` and ``t4`` in ``bar(rev(ctx))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactcore.context import BraidedContext, unwrap_reversed
from .exactcore.errors import ShapeError
from .exactcore.graded import GradedObject
from .exactcore.linalg import rank, right_inverse
from .exactcore.morphism import LinearMap, seq
from .report import CheckReport, compare, fact, matrix_strings


@dataclass(frozen=True)
class CounitalFusion:
    ctx: BraidedContext
    A: GradedObject
    t: LinearMap
    e: LinearMap

    @property
    def AA(self):
        return self.ctx.tensor_obj(self.A, self.A)


def expect_shape(f: LinearMap, dom, cod, what):
    if f.dom != dom or f.cod != cod:
        raise ShapeError(
            f"{what} should map dim {dom.dim} to dim {cod.dim}, "
            f"got {f.dom.dim} -> {f.cod.dim} (or mismatched grades)"
        )


def _validate(cf: CounitalFusion):
    expect_shape(cf.t, cf.AA, cf.AA, "t")
    expect_shape(cf.e, cf.A, cf.ctx.unit, "counit e")


def fusion_legs(ctx, A, t):
    T = ctx.tensor
    b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
    lhs = seq(T(A, t), T(b, A), T(A, t), T(bi, A), T(t, A))
    rhs = seq(T(t, A), T(A, t))
    return lhs, rhs


def counit_legs(ctx, A, t, e):
    return seq(t, ctx.tensor(A, e)), ctx.tensor(A, e)


def check_fusion(cf: CounitalFusion) -> CheckReport:
    _validate(cf)
    rep = CheckReport(f"counital fusion morphism in {cf.ctx.flavor}")
    rep.add(compare("fusion-equation", "fusion-equation", *fusion_legs(cf.ctx, cf.A, cf.t)))
    rep.add(compare("counitality", "fusion-counitality", *counit_legs(cf.ctx, cf.A, cf.t, cf.e)))
    return rep


def derived_multiplication(cf: CounitalFusion) -> LinearMap:
    """m = (e (x) 1) t, materialized."""
    _validate(cf)
    return seq(cf.t, cf.ctx.tensor(cf.e, cf.A)).materialize()


def check_derived_properties(cf: CounitalFusion) -> CheckReport:
    _validate(cf)
    ctx, A, t, e = cf.ctx, cf.A, cf.t, cf.e
    T = ctx.tensor
    m = derived_multiplication(cf)
    b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
    rep = CheckReport(f"consequences of the fusion equation in {ctx.flavor}")
    rep.add(compare("associativity", "derived-multiplication-associative",
                    seq(T(m, A), m), seq(T(A, m), m)))
    rep.add(compare("t-commutes-with-right-multiplication", "derived-t-right-linear",
                    seq(T(t, A), T(A, m)), seq(T(A, m), t)))
    rep.add(compare("t-intertwines-left-multiplication", "derived-t-left-linear",
                    seq(T(A, t), T(b, A), T(A, t), T(bi, A), T(m, A)), seq(T(m, A), t)))
    rep.add(compare("counit-multiplicative", "derived-counit-multiplicative",
                    seq(m, e), T(e, e)))
    return rep


def check_short_fusion(cf: CounitalFusion) -> CheckReport:
    """The short fusion equation, left-handed or right-handed by flavor."""
    _validate(cf)
    m = derived_multiplication(cf)
    rep = CheckReport(f"short fusion equation in {cf.ctx.flavor}")
    A, t = cf.A, cf.t
    if not cf.ctx.reversed_parity:
        ctx = cf.ctx
        T = ctx.tensor
        b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
        lhs = seq(T(A, t), T(b, A), T(A, t), T(bi, A), T(m, A))
        rhs = seq(T(m, A), t)
        rep.add(compare("short-fusion-left", "short-fusion", lhs, rhs))
    else:
        # written in the underlying non-reversed category
        D = unwrap_reversed(cf.ctx)
        T = D.tensor
        b, bi = D.braiding(A, A), D.braiding_inv(A, A)
        lhs = seq(T(t, A), T(A, b), T(t, A), T(A, bi), T(A, m))
        rhs = seq(T(A, m), t)
        rep.add(compare("short-fusion-right", "short-fusion", lhs, rhs))
    return rep


def comodule_legs(ctx, A, t, V, v):
    T = ctx.tensor
    bva, bvai = ctx.braiding(V, A), ctx.braiding_inv(V, A)
    lhs = seq(T(V, t), T(bva, A), T(A, v), T(bvai, A), T(v, A))
    rhs = seq(T(v, A), T(V, t))
    return lhs, rhs


def check_comodule_fusion(cf: CounitalFusion, V: GradedObject, v: LinearMap) -> CheckReport:
    _validate(cf)
    ctx, A = cf.ctx, cf.A
    VA = ctx.tensor_obj(V, A)
    expect_shape(v, VA, VA, "coaction v")
    rep = CheckReport(f"comodule over a fusion morphism in {ctx.flavor}")
    rep.add(compare("comodule-fusion", "comodule-fusion", *comodule_legs(ctx, A, cf.t, V, v)))
    rep.add(compare("comodule-counitality", "comodule-counitality",
                    seq(v, ctx.tensor(V, cf.e)), ctx.tensor(V, cf.e)))
    return rep


def module_legs(ctx, A, t, Q, q):
    T = ctx.tensor
    b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
    lhs = seq(T(A, q), T(b, Q), T(A, q), T(bi, Q), T(t, Q))
    rhs = seq(T(t, Q), T(A, q))
    return lhs, rhs


def split_epi_entry(name, anchor, f: LinearMap, severity="axiom"):
    """Surjectivity by rank, with a constructed section stored as data."""
    r = rank(f)
    data = {"rank": r, "codomain_dim": f.cod.dim}
    if r == f.cod.dim:
        data["section"] = matrix_strings(right_inverse(f))
    return fact(name, anchor, r == f.cod.dim, severity, data=data)


def check_module_fusion(cf: CounitalFusion, Q: GradedObject, q: LinearMap) -> CheckReport:
    _validate(cf)
    ctx, A = cf.ctx, cf.A
    AQ = ctx.tensor_obj(A, Q)
    expect_shape(q, AQ, AQ, "action q")
    rep = CheckReport(f"module over a fusion morphism in {ctx.flavor}")
    rep.add(compare("module-fusion", "module-fusion", *module_legs(ctx, A, cf.t, Q, q)))
    rep.add(split_epi_entry("module-counit-split-epi", "module-split-epi",
                            seq(q, ctx.tensor(cf.e, Q))))
    return rep


__all__ = [
    "CounitalFusion",
    "check_comodule_fusion",
    "check_derived_properties",
    "check_fusion",
    "check_module_fusion",
    "check_short_fusion",
    "derived_multiplication",
    "split_epi_entry",
]
