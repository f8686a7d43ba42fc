"""Multiplier bimonoids and regular multiplier bimonoids.

A multiplier bimonoid is a triple ``(t1, t2, e)`` on an object A where t1 is
a counital fusion morphism, t2 is one in the reversed category, t1 and t2
commute in the mixing square and both induce the same multiplication m.  A
regular one adds ``(t3, t4)``, a multiplier bimonoid for the inverse
braiding, tied to the first pair by five further diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple

from .exactcore.context import BraidedContext, bar, rev
from .exactcore.errors import Refused
from .exactcore.graded import GradedObject
from .exactcore.linalg import rank_of_rows, solve_for_morphism
from .exactcore.morphism import LinearMap, Morphism, seq
from .fusion import CounitalFusion, check_fusion, derived_multiplication, expect_shape, split_epi_entry
from .report import INFORMATIONAL, CheckReport, compare, fact


@dataclass(frozen=True)
class MultiplierBimonoid:
    ctx: BraidedContext
    A: GradedObject
    t1: LinearMap
    t2: LinearMap
    e: LinearMap

    @property
    def m(self) -> Morphism:
        return derived_multiplication(CounitalFusion(self.ctx, self.A, self.t1, self.e))

    def fusion1(self):
        return CounitalFusion(self.ctx, self.A, self.t1, self.e)

    def fusion2(self):
        return CounitalFusion(rev(self.ctx), self.A, self.t2, self.e)


@dataclass(frozen=True)
class RegularMultiplierBimonoid:
    ctx: BraidedContext
    A: GradedObject
    t1: LinearMap
    t2: LinearMap
    t3: LinearMap
    t4: LinearMap
    e: LinearMap

    @property
    def mbm(self) -> MultiplierBimonoid:
        return MultiplierBimonoid(self.ctx, self.A, self.t1, self.t2, self.e)

    @property
    def bar_mbm(self) -> MultiplierBimonoid:
        return MultiplierBimonoid(bar(self.ctx), self.A, self.t3, self.t4, self.e)

    @property
    def m(self) -> Morphism:
        return self.mbm.m

    @property
    def m_bar(self) -> Morphism:
        """The multiplication seen through the inverse braiding, m b^-1."""
        return seq(self.ctx.braiding_inv(self.A, self.A), self.m).materialize()

    @property
    def field(self):
        return self.ctx.field

    def morphisms(self):
        return {"t1": self.t1, "t2": self.t2, "t3": self.t3, "t4": self.t4, "e": self.e}

    def replace(self, **kw):
        return replace(self, **kw)


def _validate_mbm(M):
    AA = M.ctx.tensor_obj(M.A, M.A)
    for name in ("t1", "t2", "t3", "t4"):
        f = getattr(M, name, None)
        if f is not None:
            expect_shape(f, AA, AA, name)
    expect_shape(M.e, M.A, M.ctx.unit, "counit e")


def mixing_entry(M):
    T, A = M.ctx.tensor, M.A
    return compare("mixing", "mixing-square",
                   seq(T(M.t2, A), T(A, M.t1)), seq(T(A, M.t1), T(M.t2, A)))


def common_multiplication_entry(M):
    T, A = M.ctx.tensor, M.A
    return compare("common-multiplication", "common-multiplication",
                   seq(M.t1, T(M.e, A)), seq(M.t2, T(A, M.e)))


def check_mbm(M: MultiplierBimonoid) -> CheckReport:
    _validate_mbm(M)
    rep = CheckReport(f"multiplier bimonoid in {M.ctx.flavor}")
    rep.extend(check_fusion(M.fusion1()), prefix="t1")
    rep.extend(check_fusion(M.fusion2()), prefix="t2")
    rep.add(mixing_entry(M))
    rep.add(common_multiplication_entry(M))
    return rep


def regular_axiom_legs(R: RegularMultiplierBimonoid):
    """The five linking diagrams, keyed by their customary letters."""
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
    m, e = R.m, R.e
    t1, t2, t3, t4 = R.t1, R.t2, R.t3, R.t4
    return {
        "A": (seq(T(b, A), T(t3, A), T(A, m)), seq(T(A, t1), T(b, A), T(A, m))),
        "B": (seq(T(A, t1), T(t4, A)), seq(T(t4, A), T(A, t1))),
        "A-rev": (seq(T(A, b), T(A, t4), T(m, A)), seq(T(t2, A), T(A, b), T(m, A))),
        "B-rev": (seq(T(t2, A), T(A, t3)), seq(T(A, t3), T(t2, A))),
        "C": (seq(bi, t1, T(e, A)), seq(t3, T(e, A))),
    }


def check_regular(R: RegularMultiplierBimonoid) -> CheckReport:
    _validate_mbm(R)
    rep = CheckReport(f"regular multiplier bimonoid in {R.ctx.flavor}")
    rep.extend(check_mbm(R.mbm), prefix="t1t2")
    rep.extend(check_mbm(R.bar_mbm), prefix="t3t4")
    for name, (lhs, rhs) in regular_axiom_legs(R).items():
        rep.add(compare(f"axiom-{name}", f"regular-axiom-{name}", lhs, rhs))
    return rep


class Nondegeneracy(NamedTuple):
    left: bool
    right: bool
    left_rank: int
    right_rank: int


def curried_slices(m: LinearMap, side: str):
    """Rows of the matrix sending a to the flattened map m(a (x) -) or m(- (x) a)."""
    n = m.cod.dim
    if m.dom.dim != n * n:
        raise ValueError("multiplication must map A (x) A to A")
    cols = [m.column(k) for k in range(n * n)]
    rows = []
    for i in range(n):
        for other in range(n):
            row = {}
            for a in range(n):
                k = a * n + other if side == "left" else other * n + a
                v = cols[k].get(i)
                if v:
                    row[a] = v
            rows.append(row)
    return rows


def check_nondegenerate(ctx: BraidedContext, m: LinearMap) -> Nondegeneracy:
    """Injectivity of a -> m(a (x) -) and of a -> m(- (x) a), by rank."""
    A = m.cod
    expect_shape(m, ctx.tensor_obj(A, A), A, "multiplication")
    n = A.dim
    lr = rank_of_rows(curried_slices(m, "left"), n, m.field)
    rr = rank_of_rows(curried_slices(m, "right"), n, m.field)
    return Nondegeneracy(lr == n, rr == n, lr, rr)


def check_a12(M: MultiplierBimonoid) -> CheckReport:
    _validate_mbm(M)
    T, A, m = M.ctx.tensor, M.A, M.m
    rep = CheckReport("t1 and t2 against the multiplication")
    rep.add(compare("t1-t2-multiplication", "mixed-multiplication",
                    seq(T(A, M.t1), T(m, A)), seq(T(M.t2, A), T(A, m))))
    return rep


def check_mbm_nondeg_equivalences(M: MultiplierBimonoid) -> CheckReport:
    """Evaluate the assertions that are equivalent when m is non-degenerate."""
    _validate_mbm(M)
    nd = check_nondegenerate(M.ctx, M.m)
    if not (nd.left and nd.right):
        raise Refused("multiplication is degenerate", data=nd._asdict())
    ctx, A, e, m = M.ctx, M.A, M.e, M.m
    T = ctx.tensor
    rep = CheckReport("equivalent forms of the multiplier bimonoid axioms")
    hyp = [mixing_entry(M), common_multiplication_entry(M)]
    for h in hyp:
        h.name = f"hypothesis-{h.name}"
        rep.add(h)
    f1 = check_fusion(M.fusion1()).entry("fusion-equation")
    f2 = check_fusion(M.fusion2()).entry("fusion-equation")
    c1 = compare("counit-t1", "counit-forms", seq(M.t1, T(A, e)), T(A, e))
    c2 = compare("counit-t2", "counit-forms", seq(M.t2, T(e, A)), T(e, A))
    c3 = compare("counit-multiplicative", "counit-forms", seq(m, e), T(e, e))
    group1 = [("t1-fusion", f1), ("t2-fusion-reversed", f2)]
    group2 = [("counit-t1", c1), ("counit-t2", c2), ("counit-multiplicative", c3)]
    for name, ent in group1 + group2:
        ent.name, ent.severity = name, INFORMATIONAL
        rep.add(ent)
    hyps_ok = all(h.passed for h in hyp)
    for label, group in (("fusion", group1), ("counit", group2)):
        verdicts = {ent.passed for _, ent in group}
        rep.add(fact(f"uniform-{label}-verdicts", "nondegenerate-equivalences",
                     not hyps_ok or len(verdicts) == 1,
                     data={"verdicts": {n: ent.verdict for n, ent in group},
                           "hypotheses_hold": hyps_ok}))
    return rep


def check_regular_nondeg_sufficiency(R: RegularMultiplierBimonoid) -> CheckReport:
    """With m non-degenerate, (A) and (A-rev) should already force regularity."""
    _validate_mbm(R)
    mb = check_mbm(R.mbm)
    if not mb.passed:
        raise Refused("(t1, t2, e) is not a multiplier bimonoid",
                      data={"failing": [e.name for e in mb.failures()]})
    nd = check_nondegenerate(R.ctx, R.m)
    if not (nd.left and nd.right):
        raise Refused("multiplication is degenerate", data=nd._asdict())
    legs = regular_axiom_legs(R)
    a = compare("axiom-A", "regular-axiom-A", *legs["A"])
    arev = compare("axiom-A-rev", "regular-axiom-A-rev", *legs["A-rev"])
    full = check_regular(R)
    rep = CheckReport("sufficiency of (A) and (A-rev) under non-degeneracy")
    a.severity = arev.severity = INFORMATIONAL
    rep.add(a)
    rep.add(arev)
    rep.add(fact("A-and-A-rev-imply-regular", "nondegenerate-sufficiency",
                 not (a.passed and arev.passed) or full.passed,
                 data={"regular": full.passed,
                       "failing": [e.name for e in full.failures()]}))
    return rep


def transform_regular(R: RegularMultiplierBimonoid, variant: str) -> RegularMultiplierBimonoid:
    """The same data read in the reversed, barred, or reversed-barred category."""
    t1, t2, t3, t4 = R.t1, R.t2, R.t3, R.t4
    if variant == "rev":
        return RegularMultiplierBimonoid(rev(R.ctx), R.A, t2, t1, t4, t3, R.e)
    if variant == "bar":
        return RegularMultiplierBimonoid(bar(R.ctx), R.A, t3, t4, t1, t2, R.e)
    if variant == "barrev":
        return RegularMultiplierBimonoid(bar(rev(R.ctx)), R.A, t4, t3, t2, t1, R.e)
    raise ValueError(f"unknown variant {variant!r}; expected rev, bar or barrev")


def check_minimality_diagrams(R: RegularMultiplierBimonoid) -> CheckReport:
    """Two optional squares that are not among the axioms; informational."""
    _validate_mbm(R)
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    b = ctx.braiding(A, A)
    t1, t3 = R.t1, R.t3
    rep = CheckReport("optional diagrams beyond the regular axioms")
    rep.add(compare("optional-t1-t3-square", "optional-diagram",
                    seq(T(A, t1), T(b, A), T(A, t1), T(t3, A)),
                    seq(T(b, A), T(t3, A), T(A, t1)), INFORMATIONAL))
    rep.add(compare("optional-braided-t1-t3-square", "optional-diagram",
                    seq(T(A, b), T(A, t3), T(b, A), T(A, t1)),
                    seq(T(t1, A), T(A, b), T(A, t3), T(b, A)), INFORMATIONAL))
    return rep


def check_multiplier_bialgebra(M: MultiplierBimonoid) -> CheckReport:
    """The classical axiom list for a multiplier bialgebra over a field."""
    _validate_mbm(M)
    if M.ctx.group.order() != 1:
        raise Refused("multiplier bialgebras are defined for ungraded vector spaces")
    ctx, A, e, m = M.ctx, M.A, M.e, M.m
    t1, t2 = M.t1, M.t2
    T = ctx.tensor
    b = ctx.braiding(A, A)
    rep = CheckReport("multiplier bialgebra axioms")
    rep.add(compare("a-t1-multiplicative", "bialgebra-axiom-a",
                    seq(T(m, A), t1), seq(T(A, t1), T(b, A), T(A, t1), T(b, A), T(m, A))))
    rep.add(compare("a-t2-multiplicative", "bialgebra-axiom-a",
                    seq(T(A, m), t2), seq(T(t2, A), T(A, b), T(t2, A), T(A, b), T(A, m))))
    k1 = seq(T(A, t1), T(b, A), T(m, A))
    k2 = seq(T(t2, A), T(A, b), T(A, m))
    rep.add(split_epi_entry("b-m-surjective", "bialgebra-axiom-b", m))
    rep.add(split_epi_entry("b-t1-composite-surjective", "bialgebra-axiom-b", k1))
    rep.add(split_epi_entry("b-t2-composite-surjective", "bialgebra-axiom-b", k2))
    nd = check_nondegenerate(ctx, m)
    rep.add(fact("b-nondegenerate-left", "bialgebra-axiom-b", nd.left, data={"rank": nd.left_rank}))
    rep.add(fact("b-nondegenerate-right", "bialgebra-axiom-b", nd.right, data={"rank": nd.right_rank}))
    rep.add(compare("c-counit-multiplicative", "bialgebra-axiom-c", seq(m, e), T(e, e)))
    ent = mixing_entry(M)
    ent.name, ent.anchor = "d-mixing", "bialgebra-axiom-d"
    rep.add(ent)
    ent = common_multiplication_entry(M)
    ent.name, ent.anchor = "e-common-multiplication", "bialgebra-axiom-e"
    rep.add(ent)
    return rep


def determine_t3(R: RegularMultiplierBimonoid):
    """Solve axiom (A) for t3 given t1.  Returns ``(t3, nullity)``."""
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    m = R.m
    b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
    AA = ctx.tensor_obj(A, A)
    rhs = seq(T(bi, A), T(A, R.t1), T(b, A), T(A, m))
    return solve_for_morphism(AA, AA, ctx.field, lambda X: seq(T(X, A), T(A, m)), rhs)


def determine_t4(R: RegularMultiplierBimonoid):
    """Solve axiom (A-rev) for t4 given t2.  Returns ``(t4, nullity)``."""
    ctx, A = R.ctx, R.A
    T = ctx.tensor
    m = R.m
    b, bi = ctx.braiding(A, A), ctx.braiding_inv(A, A)
    AA = ctx.tensor_obj(A, A)
    rhs = seq(T(A, bi), T(R.t2, A), T(A, b), T(m, A))
    return solve_for_morphism(AA, AA, ctx.field, lambda X: seq(T(A, X), T(m, A)), rhs)


__all__ = [
    "MultiplierBimonoid",
    "Nondegeneracy",
    "RegularMultiplierBimonoid",
    "check_a12",
    "check_mbm",
    "check_mbm_nondeg_equivalences",
    "check_minimality_diagrams",
    "check_multiplier_bialgebra",
    "check_nondegenerate",
    "check_regular",
    "check_regular_nondeg_sufficiency",
    "curried_slices",
    "determine_t3",
    "determine_t4",
    "regular_axiom_legs",
    "transform_regular",
]
