"""Exact linear algebra by sparse Gauss-Jordan elimination.

Rows are dicts ``column -> scalar``.  Pivots are kept fully reduced, so an
incoming row is cleared of pivot columns in a single pass.  Right-hand sides
ride along as extra columns that never become pivots; optional tag columns
record which input rows were combined, which is how an inconsistent system
produces a certificate.
"""

from __future__ import annotations

from .errors import InconsistentSystem, NotSurjective, ShapeError
from .morphism import LinearMap, Morphism


class _Echelon:
    def __init__(self, nvars, field):
        self.n = nvars
        self.field = field
        self.pivots = {}  # pivot column -> reduced row with 1 at the pivot
        self.residuals = []  # rows whose variable part vanished

    def _reduce(self, row):
        norm = self.field.normalize
        for c in [c for c in row if c in self.pivots]:
            a = row.get(c)
            if not a:
                continue
            for k, v in self.pivots[c].items():
                w = norm(row.get(k, 0) - a * v)
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        return row

    def add_row(self, row):
        row = self._reduce(dict(row))
        var_cols = [c for c in row if c < self.n]
        if not var_cols:
            if row:
                self.residuals.append(row)
            return
        pc = min(var_cols)
        inv = self.field.div(1, row[pc])
        norm = self.field.normalize
        row = {k: norm(v * inv) for k, v in row.items()}
        for other in self.pivots.values():
            a = other.get(pc)
            if a:
                for k, v in row.items():
                    w = norm(other.get(k, 0) - a * v)
                    if w:
                        other[k] = w
                    else:
                        other.pop(k, None)
        self.pivots[pc] = row

    @property
    def rank(self):
        return len(self.pivots)

    def free_columns(self):
        return [c for c in range(self.n) if c not in self.pivots]

    def kernel(self):
        out = []
        norm = self.field.normalize
        for f in self.free_columns():
            vec = {f: 1}
            for pc, row in self.pivots.items():
                a = row.get(f)
                if a:
                    vec[pc] = norm(-a)
            out.append(vec)
        return out


def _rows_of(f: LinearMap):
    rows = [{} for _ in range(f.cod.dim)]
    for c in range(f.dom.dim):
        for r, v in f.column(c).items():
            rows[r][c] = v
    return rows


def _echelon_of_rows(rows, nvars, field):
    ech = _Echelon(nvars, field)
    for row in rows:
        ech.add_row(row)
    return ech


def rank(f: LinearMap) -> int:
    return _echelon_of_rows(_rows_of(f), f.dom.dim, f.field).rank


def rank_of_rows(rows, ncols, field) -> int:
    """Rank of a matrix given as a list of dense or sparse rows."""
    sparse = []
    for row in rows:
        if isinstance(row, dict):
            sparse.append(row)
        else:
            sparse.append({c: v for c, v in enumerate(row) if v})
    return _echelon_of_rows(sparse, ncols, field).rank


def kernel_basis(f: LinearMap):
    """Basis of the null space as dense tuples indexed by the domain."""
    ech = _echelon_of_rows(_rows_of(f), f.dom.dim, f.field)
    return [tuple(v.get(i, 0) for i in range(f.dom.dim)) for v in ech.kernel()]


def solve_columns(rows, nvars, rhs_columns, field, certify=True):
    """Solve ``A x_j = b_j`` for each right-hand side.

    ``rows`` is A as sparse rows, ``rhs_columns`` a list of sparse vectors
    indexed by the rows.  Returns ``(solutions, kernel)`` where solutions
    are sparse particular solutions (free variables zero).  Raises
    :class:`InconsistentSystem` whose witness is a sparse left-kernel vector
    ``y`` (``y A = 0``, ``y b_j != 0``) when some system has no solution.
    """
    k = len(rhs_columns)
    aug = [dict(r) for r in rows]
    for j, b in enumerate(rhs_columns):
        for r, v in b.items():
            aug[r][nvars + j] = v
    ech = _echelon_of_rows(aug, nvars, field)
    if ech.residuals:
        bad = min(c - nvars for c in ech.residuals[0])
        witness = None
        if certify:
            base = nvars + k
            tagged = [{**r, base + i: 1} for i, r in enumerate(aug)]
            ech2 = _echelon_of_rows(tagged, nvars, field)
            for res in ech2.residuals:
                if any(nvars <= c < base for c in res):
                    witness = {c - base: v for c, v in res.items() if c >= base}
                    bad = min(c - nvars for c in res if nvars <= c < base)
                    break
        err = InconsistentSystem(f"linear system for right-hand side {bad} is inconsistent", witness)
        err.rhs_index = bad
        raise err
    sols = []
    for j in range(k):
        col = nvars + j
        sol = {}
        for pc, row in ech.pivots.items():
            v = row.get(col)
            if v:
                sol[pc] = v
        sols.append(sol)
    return sols, ech.kernel()


def right_inverse(f: LinearMap):
    """A section ``s`` with ``f s = 1``, or None when ``f`` is not onto."""
    n, m = f.dom.dim, f.cod.dim
    rows = _rows_of(f)
    if _echelon_of_rows(rows, n, f.field).rank < m:
        return None
    sols, _ = solve_columns(rows, n, [{r: 1} for r in range(m)], f.field, certify=False)
    return Morphism(f.cod, f.dom, f.field, sols)


def solve_through_epi(s: LinearMap, p: LinearMap) -> Morphism:
    """The unique ``u`` with ``u p = s`` (``p`` applied first).

    Raises NotSurjective when ``p`` is not onto, and InconsistentSystem with
    a kernel vector of ``p`` on which ``s`` does not vanish when no ``u``
    exists.
    """
    if s.dom != p.dom:
        raise ShapeError("solve_through_epi needs s and p on the same domain")
    sec = right_inverse(p)
    if sec is None:
        r = rank(p)
        raise NotSurjective(f"map is not surjective (rank {r} < {p.cod.dim})", r, p.cod.dim)
    for vec in kernel_basis(p):
        sparse = {i: v for i, v in enumerate(vec) if v}
        if s.apply(sparse):
            raise InconsistentSystem("s does not vanish on the kernel of p", sparse)
    cols = [s.apply(sec.column(i)) for i in range(p.cod.dim)]
    return Morphism(p.cod, s.cod, s.field, cols, trusted=True)


def solve_for_morphism(dom, cod, field, operator, rhs: LinearMap, homogeneous=True):
    """Solve ``operator(X) = rhs`` for a morphism ``X: dom -> cod``.

    ``operator`` must be linear in X.  Unknowns are the matrix entries of X,
    restricted to grade-preserving positions when ``homogeneous``.  Returns
    ``(X, nullity)``; nullity 0 means the solution is unique.
    """
    sites = [
        (r, c)
        for c in range(dom.dim)
        for r in range(cod.dim)
        if not homogeneous or dom.grades[c] == cod.grades[r]
    ]
    n_out = rhs.cod.dim
    eq_rows = {}
    for v, (r, c) in enumerate(sites):
        cols = [{} for _ in range(dom.dim)]
        cols[c] = {r: 1}
        image = operator(Morphism(dom, cod, field, cols, trusted=True))
        if image.dom != rhs.dom or image.cod != rhs.cod:
            raise ShapeError("operator image and right-hand side have different shapes")
        for i in range(image.dom.dim):
            for row, val in image.column(i).items():
                eq_rows.setdefault(i * n_out + row, {})[v] = val
    b = {}
    for i in range(rhs.dom.dim):
        for row, val in rhs.column(i).items():
            b[i * n_out + row] = val
    keys = sorted(set(eq_rows) | set(b))
    rows = [eq_rows.get(k, {}) for k in keys]
    bvec = {pos: b[k] for pos, k in enumerate(keys) if k in b}
    try:
        (sol,), kernel = solve_columns(rows, len(sites), [bvec], field)
    except InconsistentSystem as err:
        if err.witness:
            err.witness = {_equation_label(keys[pos], n_out, rhs): v for pos, v in err.witness.items()}
        raise
    cols = [{} for _ in range(dom.dim)]
    for v, val in sol.items():
        r, c = sites[v]
        cols[c][r] = val
    return Morphism(dom, cod, field, cols), len(kernel)


def _equation_label(flat, n_out, rhs):
    i, row = divmod(flat, n_out)
    return f"{rhs.dom.label(i)}->{rhs.cod.label(row)}"
