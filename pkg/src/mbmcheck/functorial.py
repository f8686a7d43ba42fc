"""The endofunctors G = (-).A and T = A.(-) induced by a regular multiplier
bimonoid, checked on finitely many probe objects.

Functor-level axioms quantify over all objects; here they are evaluated at
every tuple drawn from a ProbeSet, and every entry name carries its tuple.
The left/right mirror images are obtained by running one generic checker in
``rev(ctx)`` with the arguments swapped, while the functors themselves stay
defined in the base category.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod

from .exactcore.context import random_homogeneous, rev
from .exactcore.graded import GradedObject
from .exactcore.morphism import seq
from .fusion import expect_shape
from .mbm import RegularMultiplierBimonoid
from .repcat import RegComodule, RegModule, split_epi_hypotheses
from .report import CheckReport, compare, skipped

DEFAULT_PROBES = "I,A,AA"
DEFAULT_BUDGET = 729


@dataclass(frozen=True)
class ProbeSet:
    names: tuple
    objects: tuple
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if not self.objects:
            raise ValueError("a probe set needs at least one object")
        if len(self.names) != len(self.objects):
            raise ValueError("one name per probe object")

    @classmethod
    def from_spec(cls, R: RegularMultiplierBimonoid, spec=DEFAULT_PROBES, seed=0,
                  budget=DEFAULT_BUDGET):
        """Parse a comma list of words in I and A, e.g. ``"I,A,AA"``."""
        tokens = [s.strip() for s in spec.split(",") if s.strip()] if isinstance(spec, str) else list(spec)
        if not tokens:
            raise ValueError("empty probe list")
        objs = []
        for tok in tokens:
            if tok == "I":
                objs.append(R.ctx.unit)
            elif tok and set(tok) == {"A"}:
                objs.append(R.ctx.tensor_obj(*[R.A] * len(tok)))
            else:
                raise ValueError(f"invalid probe {tok!r}: use I or a word in A (A, AA, ...)")
        if len(set(tokens)) != len(tokens):
            raise ValueError(f"repeated probe in {spec!r}")
        return cls(tuple(tokens), tuple(objs), seed, budget)

    @classmethod
    def default(cls, R, seed=0):
        return cls.from_spec(R, DEFAULT_PROBES, seed)

    def validate(self, R: RegularMultiplierBimonoid):
        for n, X in zip(self.names, self.objects):
            if X.group != R.ctx.group:
                raise ValueError(f"probe {n} is graded over a different group")

    def name_of(self, X):
        for n, Y in zip(self.names, self.objects):
            if Y == X:
                return n
        return X.name or "?"

    def pairs(self):
        return list(itertools.product(self.objects, repeat=2))

    def triples(self):
        return list(itertools.product(self.objects, repeat=3))

    def tag(self, *objs):
        return ",".join(self.name_of(X) for X in objs)

    def maps(self, R: RegularMultiplierBimonoid):
        """Seeded maps between probes, then the structure maps that fit."""
        rng = random.Random(self.seed)
        out = []
        for X, Y in itertools.product(self.objects, repeat=2):
            out.append((f"rand:{self.tag(X)}>{self.tag(Y)}",
                        random_homogeneous(X, Y, R.field, rng)))
        A = R.A
        present = set(self.objects)
        for label, f in (("e", R.e), ("m", R.m), ("b", R.ctx.braiding(A, A))):
            if f.dom in present and f.cod in present:
                out.append((label, f))
        return out


def _run(jobs, report, parallel=1):
    """Evaluate (name, anchor, thunk) jobs in order, optionally on a pool."""
    def one(job):
        name, anchor, thunk = job
        return compare(name, anchor, *thunk())

    if parallel and parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            entries = list(pool.map(one, jobs))
    else:
        entries = [one(j) for j in jobs]
    for e in entries:
        report.add(e)
    return report


def _fits(probes, report, name, anchor, *dims):
    if prod(dims) <= probes.budget:
        return True
    report.add(skipped(name, anchor, f"dimension {prod(dims)} exceeds probe budget {probes.budget}"))
    return False


# -- the functor G = (-).A -----------------------------------------------------


class _G:
    def __init__(self, R: RegularMultiplierBimonoid):
        C, A = R.ctx, R.A
        self.R, self.C, self.A = R, C, A
        self.obj = lambda X: C.tensor_obj(X, A)
        self.map = lambda f: C.tensor(f, A)
        self.eps = lambda X: C.tensor(X, R.e)

    def check2(self, X, Y):
        C, A, R = self.C, self.A, self.R
        T = C.tensor
        return seq(T(X, C.braiding(A, Y), A), T(X, Y, R.t1), T(X, C.braiding_inv(A, Y), A))

    def hat2(self, X, Y):
        C, A, R = self.C, self.A, self.R
        T = C.tensor
        return seq(T(X, C.braiding(A, Y), A), T(X, Y, C.braiding(A, A)), T(X, Y, R.t3))

    def diag_from_check(self, X, Y):
        return seq(self.check2(X, Y), self.map(self.C.tensor(self.eps(X), Y)))

    def diag_from_hat(self, X, Y):
        return seq(self.hat2(X, Y), self.map(self.C.tensor(X, self.eps(Y))))


def build_G2s(R: RegularMultiplierBimonoid, X: GradedObject, Y: GradedObject):
    """Ǧ2, Ĝ2 at (X, Y) and the diagonal G2, which must agree from both sides."""
    G = _G(R)
    return {
        "G2_check": G.check2(X, Y).materialize(),
        "G2_hat": G.hat2(X, Y).materialize(),
        "G2": G.diag_from_check(X, Y).materialize(),
        "G2_via_hat": G.diag_from_hat(X, Y).materialize(),
    }


def _right_bicomonad_jobs(ctx, G, g2, probes, label, dA):
    """The associativity and counit diagrams for g2 in ctx, at probe tuples."""
    T = ctx.tensor
    jobs, skips = [], CheckReport("")
    dims = {X: X.dim for X in probes.objects}
    for X, Y, Z in probes.triples():
        name = f"{label}-associativity[{probes.tag(X, Y, Z)}]"
        anchor = "right-bicomonad-associativity"
        if not _fits(probes, skips, name, anchor, dims[X], dims[Y], dims[Z], dA ** 3):
            continue

        def legs(X=X, Y=Y, Z=Z):
            GX, GY = G.obj(X), G.obj(Y)
            lhs = seq(T(GX, g2(Y, Z)), g2(X, ctx.tensor_obj(GY, Z)), G.map(T(g2(X, Y), Z)))
            rhs = seq(T(g2(X, Y), G.obj(Z)), g2(ctx.tensor_obj(GX, Y), Z))
            return lhs, rhs
        jobs.append((name, anchor, legs))
    for X, Y in probes.pairs():
        def legs(X=X, Y=Y):
            GX = G.obj(X)
            return seq(g2(X, Y), G.eps(ctx.tensor_obj(GX, Y))), T(GX, G.eps(Y))
        jobs.append((f"{label}-counit[{probes.tag(X, Y)}]", "right-bicomonad-counit", legs))
    return jobs, skips


def check_multiplier_bicomonad(R: RegularMultiplierBimonoid, probes: ProbeSet = None,
                               parallel=1) -> CheckReport:
    probes = probes or ProbeSet.default(R)
    probes.validate(R)
    C, dA = R.ctx, R.A.dim
    G = _G(R)
    T = C.tensor
    rep = CheckReport(f"multiplier bicomonad (-).A on probes {','.join(probes.names)}")
    jobs, skips = _right_bicomonad_jobs(C, G, G.check2, probes, "G-check", dA)
    rep.extend(skips)
    mirrored, skips = _right_bicomonad_jobs(rev(C), G, lambda X, Y: G.hat2(Y, X), probes, "G-hat", dA)
    jobs += mirrored
    rep.extend(skips)
    for X, Y in probes.pairs():
        jobs.append((f"diagonals-agree[{probes.tag(X, Y)}]", "bicomonad-diagonal",
                     lambda X=X, Y=Y: (G.diag_from_check(X, Y), G.diag_from_hat(X, Y))))
    for X, Y, Z in probes.triples():
        name = f"diagonal-compatibility[{probes.tag(X, Y, Z)}]"
        anchor = "bicomonad-diagonal-compatibility"
        if not _fits(probes, rep, name, anchor, X.dim, Y.dim, Z.dim, dA ** 3):
            continue

        def legs(X=X, Y=Y, Z=Z):
            GX, GY, GZ = G.obj(X), G.obj(Y), G.obj(Z)
            lhs = seq(T(GX, G.check2(Y, Z)), G.diag_from_check(X, C.tensor_obj(GY, Z)))
            rhs = seq(T(G.hat2(X, Y), GZ), G.diag_from_check(C.tensor_obj(X, GY), Z))
            return lhs, rhs
        jobs.append((name, anchor, legs))
    for label, f in probes.maps(R):
        for Y in probes.objects:
            tag = f"{label},{probes.tag(Y)}"
            GY = G.obj(Y)
            big = max(f.dom.dim, f.cod.dim) * Y.dim * dA * dA
            if big > probes.budget:
                rep.add(skipped(f"G-naturality[{tag}]", "bicomonad-natural",
                                f"dimension {big} exceeds probe budget {probes.budget}"))
                continue
            Gf = G.map(f)
            jobs.append((f"G-check-natural-first[{tag}]", "bicomonad-natural",
                         lambda f=f, Y=Y, Gf=Gf, GY=GY: (
                             seq(T(Gf, GY), G.check2(f.cod, Y)),
                             seq(G.check2(f.dom, Y), G.map(T(Gf, Y))))))
            jobs.append((f"G-check-natural-second[{tag}]", "bicomonad-natural",
                         lambda f=f, Y=Y, Gf=Gf: (
                             seq(T(G.obj(Y), Gf), G.check2(Y, f.cod)),
                             seq(G.check2(Y, f.dom), G.map(T(G.obj(Y), f))))))
            jobs.append((f"G-hat-natural-first[{tag}]", "bicomonad-natural",
                         lambda f=f, Y=Y, Gf=Gf, GY=GY: (
                             seq(T(Gf, GY), G.hat2(f.cod, Y)),
                             seq(G.hat2(f.dom, Y), G.map(T(f, GY))))))
            jobs.append((f"G-hat-natural-second[{tag}]", "bicomonad-natural",
                         lambda f=f, Y=Y, Gf=Gf, GY=GY: (
                             seq(T(GY, Gf), G.hat2(Y, f.cod)),
                             seq(G.hat2(Y, f.dom), G.map(T(Y, Gf))))))
    return _run(jobs, rep, parallel)


# -- the functor T = A.(-) -----------------------------------------------------


class _T:
    def __init__(self, R: RegularMultiplierBimonoid):
        C, A = R.ctx, R.A
        self.R, self.C, self.A = R, C, A
        self.obj = lambda X: C.tensor_obj(A, X)
        self.map = lambda f: C.tensor(A, f)
        self.T0 = R.e

    def hat2(self, X, Y):
        C, A, R = self.C, self.A, self.R
        T = C.tensor
        return seq(T(A, C.braiding_inv(A, X), Y), T(R.t1, X, Y), T(A, C.braiding(A, X), Y))

    def check2(self, X, Y):
        C, A, R = self.C, self.A, self.R
        T = C.tensor
        return seq(T(C.braiding(A, A), X, Y), T(R.t4, X, Y), T(A, C.braiding(A, X), Y))

    def mu(self, X):
        return seq(self.hat2(self.C.unit, X), self.C.tensor(self.T0, self.obj(X)))

    def mu_from_check(self, X):
        return seq(self.check2(X, self.C.unit), self.C.tensor(self.obj(X), self.T0))


def build_T2s(R: RegularMultiplierBimonoid, X: GradedObject, Y: GradedObject):
    """T̂2, Ť2 at (X, Y) and the multiplication μ at X from both sides."""
    Tf = _T(R)
    return {
        "T2_hat": Tf.hat2(X, Y).materialize(),
        "T2_check": Tf.check2(X, Y).materialize(),
        "mu": Tf.mu(X).materialize(),
        "mu_via_check": Tf.mu_from_check(X).materialize(),
    }


def _left_bimonad_jobs(ctx, Tf, t2, probes, label, dA):
    T = ctx.tensor
    jobs, skips = [], CheckReport("")
    for X, Y, Z in probes.triples():
        name = f"{label}-coassociativity[{probes.tag(X, Y, Z)}]"
        anchor = "left-bimonad-coassociativity"
        if not _fits(probes, skips, name, anchor, X.dim, Y.dim, Z.dim, dA ** 3):
            continue

        def legs(X=X, Y=Y, Z=Z):
            TY, TZ = Tf.obj(Y), Tf.obj(Z)
            lhs = seq(Tf.map(T(X, t2(Y, Z))), t2(ctx.tensor_obj(X, TY), Z), T(t2(X, Y), TZ))
            rhs = seq(t2(X, ctx.tensor_obj(Y, TZ)), T(Tf.obj(X), t2(Y, Z)))
            return lhs, rhs
        jobs.append((name, anchor, legs))
    I = ctx.unit
    for X in probes.objects:
        jobs.append((f"{label}-counit[{probes.tag(X)}]", "left-bimonad-counit",
                     lambda X=X: (seq(t2(X, I), T(Tf.obj(X), Tf.T0)), Tf.map(T(X, Tf.T0)))))
    return jobs, skips


def check_multiplier_bimonad(R: RegularMultiplierBimonoid, probes: ProbeSet = None,
                             parallel=1) -> CheckReport:
    probes = probes or ProbeSet.default(R)
    probes.validate(R)
    C, dA = R.ctx, R.A.dim
    Tf = _T(R)
    T = C.tensor
    T0 = Tf.T0
    rep = CheckReport(f"multiplier bimonad A.(-) on probes {','.join(probes.names)}")
    jobs, skips = _left_bimonad_jobs(C, Tf, Tf.hat2, probes, "T-hat", dA)
    rep.extend(skips)
    mirrored, skips = _left_bimonad_jobs(rev(C), Tf, lambda X, Y: Tf.check2(Y, X), probes, "T-check", dA)
    jobs += mirrored
    rep.extend(skips)
    for X, Y, Z in probes.triples():
        name = f"hat-check-compatibility[{probes.tag(X, Y, Z)}]"
        anchor = "bimonad-compatibility"
        if not _fits(probes, rep, name, anchor, X.dim, Y.dim, Z.dim, dA ** 3):
            continue

        def legs(X=X, Y=Y, Z=Z):
            TX, TZ = Tf.obj(X), Tf.obj(Z)
            lhs = seq(Tf.check2(X, C.tensor_obj(Y, TZ)), T(TX, Tf.hat2(Y, Z)))
            rhs = seq(Tf.hat2(C.tensor_obj(TX, Y), Z), T(Tf.check2(X, Y), TZ))
            return lhs, rhs
        jobs.append((name, anchor, legs))
    for X in probes.objects:
        jobs.append((f"multiplications-agree[{probes.tag(X)}]", "bimonad-multiplication",
                     lambda X=X: (Tf.mu(X), Tf.mu_from_check(X))))
    for X, Y in probes.pairs():
        name = f"same-surjective[{probes.tag(X, Y)}]"
        anchor = "bimonad-same-surjective"
        if not _fits(probes, rep, name, anchor, X.dim, Y.dim, dA ** 3):
            continue
        I = C.unit

        def paths(X=X, Y=Y):
            TX, TY = Tf.obj(X), Tf.obj(Y)
            p1 = seq(Tf.hat2(TX, Y), T(Tf.hat2(I, X), TY), T(T0, TX, TY))
            p2 = seq(Tf.check2(X, TY), T(TX, Tf.hat2(I, Y)), T(TX, T0, TY))
            p3 = seq(Tf.hat2(TX, Y), T(Tf.check2(X, I), TY), T(TX, T0, TY))
            p4 = seq(Tf.check2(X, TY), T(TX, Tf.check2(Y, I)), T(TX, TY, T0))
            return p1, p2, p3, p4
        for k in (2, 3, 4):
            jobs.append((f"{name}/path1-path{k}", anchor,
                         lambda paths=paths, k=k: (paths()[0], paths()[k - 1])))
    for X in probes.objects:
        name = f"multiplication-associative[{probes.tag(X)}]"
        anchor = "bimonad-multiplication-associative"
        if not _fits(probes, rep, name, anchor, X.dim, dA ** 3):
            continue
        jobs.append((name, anchor, lambda X=X: (
            seq(Tf.map(Tf.mu(X)), Tf.mu(X)), seq(Tf.mu(Tf.obj(X)), Tf.mu(X)))))
    for label, f in probes.maps(R):
        for Y in probes.objects:
            tag = f"{label},{probes.tag(Y)}"
            big = max(f.dom.dim, f.cod.dim) * Y.dim * dA * dA
            if big > probes.budget:
                rep.add(skipped(f"T-naturality[{tag}]", "bimonad-natural",
                                f"dimension {big} exceeds probe budget {probes.budget}"))
                continue
            Tfm = Tf.map(f)
            jobs.append((f"T-hat-natural-first[{tag}]", "bimonad-natural",
                         lambda f=f, Y=Y: (seq(Tf.map(T(f, Tf.obj(Y))), Tf.hat2(f.cod, Y)),
                                           seq(Tf.hat2(f.dom, Y), T(Tf.map(f), Tf.obj(Y))))))
            jobs.append((f"T-hat-natural-second[{tag}]", "bimonad-natural",
                         lambda f=f, Y=Y, Tfm=Tfm: (seq(Tf.map(T(Y, Tfm)), Tf.hat2(Y, f.cod)),
                                                    seq(Tf.hat2(Y, f.dom), T(Tf.obj(Y), Tfm)))))
            jobs.append((f"T-check-natural-first[{tag}]", "bimonad-natural",
                         lambda f=f, Y=Y, Tfm=Tfm: (seq(Tf.map(T(Tfm, Y)), Tf.check2(f.cod, Y)),
                                                    seq(Tf.check2(f.dom, Y), T(Tfm, Tf.obj(Y))))))
            jobs.append((f"T-check-natural-second[{tag}]", "bimonad-natural",
                         lambda f=f, Y=Y, Tfm=Tfm: (seq(Tf.map(T(Tf.obj(Y), f)), Tf.check2(Y, f.cod)),
                                                    seq(Tf.check2(Y, f.dom), T(Tf.obj(Y), Tfm)))))
    return _run(jobs, rep, parallel)


# -- induced comodules and modules --------------------------------------------


def _coactions(C: RegComodule):
    R, V = C.R, C.V
    ctx, A = R.ctx, R.A
    VA = ctx.tensor_obj(V, A)
    expect_shape(C.v1, VA, VA, "coaction v1")
    expect_shape(C.v3, VA, VA, "coaction v3")
    T = ctx.tensor

    def vcheck(X):
        return seq(T(ctx.braiding(V, X), A), T(X, C.v1), T(ctx.braiding_inv(V, X), A))

    def vhat(X):
        return seq(T(X, ctx.braiding(A, V)), T(X, C.v3))

    return vcheck, vhat


def induce_G_comodule(C: RegComodule, X: GradedObject):
    """(v̌ at X, v̂ at X) for the coactions of a regular comodule."""
    vcheck, vhat = _coactions(C)
    return vcheck(X).materialize(), vhat(X).materialize()


def _right_comodule_jobs(ctx, G, g2, V, vc, probes, label, rep, extra):
    T = ctx.tensor
    jobs = []
    for Y, Z in probes.pairs():
        name = f"{label}-coassociativity[{probes.tag(Y, Z)}]"
        if not _fits(probes, rep, name, "bicomonad-comodule", Y.dim, Z.dim, extra):
            continue

        def legs(Y=Y, Z=Z):
            GY = G.obj(Y)
            lhs = seq(T(V, g2(Y, Z)), vc(ctx.tensor_obj(GY, Z)), G.map(T(vc(Y), Z)))
            rhs = seq(T(vc(Y), G.obj(Z)), g2(ctx.tensor_obj(V, Y), Z))
            return lhs, rhs
        jobs.append((name, "bicomonad-comodule", legs))
    for Y in probes.objects:
        jobs.append((f"{label}-counit[{probes.tag(Y)}]", "bicomonad-comodule-counit",
                     lambda Y=Y: (seq(vc(Y), G.eps(ctx.tensor_obj(V, Y))), T(V, G.eps(Y)))))
    return jobs


def check_induced_comodule(C: RegComodule, probes: ProbeSet = None, parallel=1) -> CheckReport:
    R = C.R
    probes = probes or ProbeSet.default(R)
    probes.validate(R)
    ctx, V = R.ctx, C.V
    G = _G(R)
    vcheck, vhat = _coactions(C)
    T = ctx.tensor
    rep = CheckReport(f"induced comodule over (-).A on probes {','.join(probes.names)}")
    extra = V.dim * R.A.dim ** 2
    jobs = _right_comodule_jobs(ctx, G, G.check2, V, vcheck, probes, "v-check", rep, extra)
    jobs += _right_comodule_jobs(rev(ctx), G, lambda X, Y: G.hat2(Y, X), V, vhat, probes, "v-hat",
                                 rep, extra)
    for X, Y in probes.pairs():
        name = f"coaction-compatibility[{probes.tag(X, Y)}]"
        if not _fits(probes, rep, name, "bicomonad-comodule-compatibility", X.dim, Y.dim, extra):
            continue
        jobs.append((name, "bicomonad-comodule-compatibility",
                     lambda X=X, Y=Y: (
                         seq(T(G.obj(X), vcheck(Y)), G.diag_from_check(X, ctx.tensor_obj(V, Y))),
                         seq(T(vhat(X), G.obj(Y)), G.diag_from_check(ctx.tensor_obj(X, V), Y)))))
    return _run(jobs, rep, parallel)


def _actions(M: RegModule):
    R, Q = M.R, M.Q
    ctx, A = R.ctx, R.A
    AQ, QA = ctx.tensor_obj(A, Q), ctx.tensor_obj(Q, A)
    expect_shape(M.q1, AQ, AQ, "action q1")
    expect_shape(M.q4, QA, QA, "action q4")
    T = ctx.tensor

    def qhat(X):
        return seq(T(A, ctx.braiding_inv(Q, X)), T(M.q1, X), T(A, ctx.braiding(Q, X)))

    def qcheck(X):
        return seq(T(ctx.braiding(A, Q), X), T(M.q4, X))

    return qhat, qcheck


def induce_T_module(M: RegModule, X: GradedObject):
    """(q̂ at X, q̌ at X) for the actions of a regular module."""
    qhat, qcheck = _actions(M)
    return qhat(X).materialize(), qcheck(X).materialize()


def _left_module_jobs(ctx, Tf, t2, Q, qh, probes, label, rep, extra):
    T = ctx.tensor
    jobs = []
    for X, Y in probes.pairs():
        name = f"{label}-action[{probes.tag(X, Y)}]"
        if not _fits(probes, rep, name, "bimonad-module", X.dim, Y.dim, extra):
            continue

        def legs(X=X, Y=Y):
            lhs = seq(Tf.map(T(X, qh(Y))), qh(ctx.tensor_obj(X, Tf.obj(Y))), T(t2(X, Y), Q))
            rhs = seq(t2(X, ctx.tensor_obj(Y, Q)), T(Tf.obj(X), qh(Y)))
            return lhs, rhs
        jobs.append((name, "bimonad-module", legs))
    return jobs


def check_induced_module(M: RegModule, probes: ProbeSet = None, parallel=1) -> CheckReport:
    from .fusion import split_epi_entry

    R = M.R
    probes = probes or ProbeSet.default(R)
    probes.validate(R)
    ctx, Q = R.ctx, M.Q
    Tf = _T(R)
    qhat, qcheck = _actions(M)
    T = ctx.tensor
    I = ctx.unit
    rep = CheckReport(f"induced module over A.(-) on probes {','.join(probes.names)}")
    extra = Q.dim * R.A.dim ** 2
    jobs = _left_module_jobs(ctx, Tf, Tf.hat2, Q, qhat, probes, "q-hat", rep, extra)
    jobs += _left_module_jobs(rev(ctx), Tf, lambda X, Y: Tf.check2(Y, X), Q, qcheck, probes,
                              "q-check", rep, extra)
    for X, Y in probes.pairs():
        if not _fits(probes, rep, f"action-compatibility[{probes.tag(X, Y)}]",
                     "bimonad-module-compatibility", X.dim, Y.dim, extra):
            continue
        jobs.append((f"hat-action-compatibility[{probes.tag(X, Y)}]", "bimonad-module-compatibility",
                     lambda X=X, Y=Y: (
                         seq(qhat(ctx.tensor_obj(Tf.obj(X), Y)), T(Tf.check2(X, Y), Q)),
                         seq(Tf.check2(X, ctx.tensor_obj(Y, Q)), T(Tf.obj(X), qhat(Y))))))
        jobs.append((f"check-action-compatibility[{probes.tag(X, Y)}]", "bimonad-module-compatibility",
                     lambda X=X, Y=Y: (
                         seq(qcheck(ctx.tensor_obj(X, Tf.obj(Y))), T(Q, Tf.hat2(X, Y))),
                         seq(Tf.hat2(ctx.tensor_obj(Q, X), Y), T(qcheck(X), Tf.obj(Y))))))
    jobs.append(("actions-agree[I]", "bimonad-module-diagonal",
                 lambda: (seq(qhat(I), T(Tf.T0, Q)), seq(qcheck(I), T(Q, Tf.T0)))))
    _run(jobs, rep, parallel)
    rep.add(split_epi_entry("action-split-epi[I]", "bimonad-module-split-epi",
                            seq(qhat(I), T(Tf.T0, Q))))
    return rep


def check_split_epi_hypotheses(R: RegularMultiplierBimonoid) -> CheckReport:
    """Rank verdicts, with sections, for the hypotheses of the module tensor product."""
    return split_epi_hypotheses(R)


def check_bicomonad_from_bimonoid(B, probes: ProbeSet = None) -> CheckReport:
    """Ǧ2 built from t1 against the comonad recipe G2(δ.1), δ = 1.d, for a bimonoid."""
    from .builders import from_bimonoid

    R = from_bimonoid(B)
    probes = probes or ProbeSet.default(R)
    ctx, A = B.ctx, B.A
    T = ctx.tensor
    G = _G(R)

    def monoidal(X, Y):
        return seq(T(X, ctx.braiding(A, Y), A), T(X, Y, B.m))

    rep = CheckReport("bicomonad of a bimonoid against the induced one")
    jobs = []
    for X, Y in probes.pairs():
        jobs.append((f"G-check-from-comonad[{probes.tag(X, Y)}]", "bicomonad-from-comonad",
                     lambda X=X, Y=Y: (G.check2(X, Y),
                                       seq(T(X, B.d, G.obj(Y)), monoidal(G.obj(X), Y)))))
    return _run(jobs, rep)


__all__ = [
    "DEFAULT_PROBES",
    "ProbeSet",
    "build_G2s",
    "build_T2s",
    "check_bicomonad_from_bimonoid",
    "check_induced_comodule",
    "check_induced_module",
    "check_multiplier_bicomonad",
    "check_multiplier_bimonad",
    "check_split_epi_hypotheses",
    "induce_G_comodule",
    "induce_T_module",
]
