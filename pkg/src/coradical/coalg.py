"""Coalgebras, their dual algebras, Jacobson radicals and idempotents.

Structure tensors are kept sparse: ``comult[k]`` maps ``(i, j)`` to the
coefficient of ``b_i (x) b_j`` in ``Delta(b_k)``.  Algebras store
``mult[i][j]`` as a dict ``{k: coefficient}`` for ``b_i * b_j``.

The dual algebra uses ``(f * g)(c) = (f (x) g)(Delta c)`` and the dual basis
pairing ``<b_i*, b_j> = delta_ij``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactla import FieldSpec, Matrix, Vector, inverse, kernel_basis, row_reduce_basis, solve, span_rank
from .graded import GradedMap, GradedSpace, Group, Subspace, perp_subspace, tensor, unit_space

__all__ = [
    "Coalgebra", "Algebra", "Filtration", "CheckReport", "SplitReport", "RadicalError", "NotSplitError",
    "check_coalgebra", "dual_algebra", "jacobson_radical", "radical_powers", "coradical_filtration",
    "quotient_algebra", "primitive_idempotents", "wedderburn_split_check", "trivial_space",
]


class RadicalError(RuntimeError):
    """The radical certificates could not all be established."""


class NotSplitError(RuntimeError):
    """A semisimple quotient is not a product of matrix algebras over the base field."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def trivial_space(n: int) -> GradedSpace:
    return GradedSpace(Group.trivial(), (0,) * n)


@dataclass
class CheckReport:
    passed: bool
    name: str = ""
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failures": self.failures, "details": self.details}


# coalgebras -----------------------------------------------------------

class Coalgebra:
    __slots__ = ("field", "space", "comult", "counit", "labels", "name", "_cache")

    def __init__(self, field: FieldSpec, space: GradedSpace, comult, counit, labels=None, name: str = ""):
        self.field = field
        self.space = space
        self.comult = tuple({k: field(c) for k, c in d.items() if field(c) != 0} for d in comult)
        self.counit = tuple(field(x) for x in counit)
        if len(self.comult) != space.dim or len(self.counit) != space.dim:
            raise ValueError("structure tensors do not match the dimension")
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(space.dim))
        self.name = name
        self._cache = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def group(self) -> Group:
        return self.space.group

    def comult_map(self) -> GradedMap:
        n = self.dim
        rows = [[0] * n for _ in range(n * n)]
        for k, d in enumerate(self.comult):
            for (i, j), c in d.items():
                rows[i * n + j][k] = c
        return GradedMap(self.space, tensor(self.space, self.space), Matrix(self.field, n * n, n, rows))

    def counit_map(self) -> GradedMap:
        return GradedMap(self.space, unit_space(self.group), Matrix(self.field, 1, self.dim, [list(self.counit)]))

    def with_comult(self, comult) -> "Coalgebra":
        return Coalgebra(self.field, self.space, comult, self.counit, self.labels, self.name)


def _add(d: dict, key, c, F: FieldSpec):
    v = F(d.get(key, 0) + c)
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def check_coalgebra(c: Coalgebra) -> CheckReport:
    """Coassociativity, counit laws and degree preservation, as exact identities."""
    F, n, G = c.field, c.dim, c.group
    deg = c.space.degrees
    rep = CheckReport(True, "coalgebra_axioms")
    for k, d in enumerate(c.comult):
        for (i, j), x in d.items():
            if not (0 <= i < n and 0 <= j < n):
                rep.passed = False
                rep.failures.append({"axiom": "well_formed", "basis": c.labels[k]})
                return rep
            if G.mul(deg[i], deg[j]) != deg[k]:
                rep.passed = False
                rep.failures.append({"axiom": "degree", "basis": c.labels[k], "term": [i, j]})
                return rep
        if c.counit[k] != 0 and deg[k] != G.identity:
            rep.passed = False
            rep.failures.append({"axiom": "degree", "basis": c.labels[k], "term": "counit"})
            return rep
    for k, d in enumerate(c.comult):
        lhs: dict = {}
        rhs: dict = {}
        for (m, l), x in d.items():
            for (i, j), y in c.comult[m].items():
                _add(lhs, (i, j, l), x * y, F)
        for (i, m), x in d.items():
            for (j, l), y in c.comult[m].items():
                _add(rhs, (i, j, l), x * y, F)
        if lhs != rhs:
            rep.passed = False
            rep.failures.append({"axiom": "coassociativity", "basis": c.labels[k], "witness": k})
            return rep
        left: dict = {}
        right: dict = {}
        for (i, j), x in d.items():
            if c.counit[i]:
                _add(left, j, x * c.counit[i], F)
            if c.counit[j]:
                _add(right, i, x * c.counit[j], F)
        target = {k: F.one()}
        if left != target:
            rep.passed = False
            rep.failures.append({"axiom": "left_counit", "basis": c.labels[k], "witness": k})
            return rep
        if right != target:
            rep.passed = False
            rep.failures.append({"axiom": "right_counit", "basis": c.labels[k], "witness": k})
            return rep
    return rep


# algebras -------------------------------------------------------------

class Algebra:
    """Finite-dimensional associative unital algebra given by structure constants."""

    __slots__ = ("field", "space", "mult", "unit", "_lmats")

    def __init__(self, field: FieldSpec, space: GradedSpace, mult, unit: Sequence):
        self.field = field
        self.space = space
        self.mult = tuple(tuple({k: field(c) for k, c in d.items() if field(c) != 0} for d in row) for row in mult)
        self.unit = tuple(field(x) for x in unit)
        self._lmats = None

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_vector(self, i: int) -> Vector:
        F = self.field
        return tuple(F(1 if j == i else 0) for j in range(self.dim))

    def zero(self) -> Vector:
        return (self.field.zero(),) * self.dim

    def multiply(self, x: Sequence, y: Sequence) -> Vector:
        F = self.field
        acc = [0] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b != 0]
        for i, a in enumerate(x):
            if a == 0:
                continue
            row = self.mult[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j].items():
                    acc[k] += ab * c
        return tuple(F(v) for v in acc)

    def add(self, x, y) -> Vector:
        F = self.field
        return tuple(F(a + b) for a, b in zip(x, y))

    def scale(self, c, x) -> Vector:
        F = self.field
        return tuple(F(c * a) for a in x)

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> x y``."""
        n = self.dim
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(n)]
        return Matrix.from_columns(self.field, cols, rows=n)

    def right_matrix(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> y x``."""
        n = self.dim
        cols = [self.multiply(self.basis_vector(j), x) for j in range(n)]
        return Matrix.from_columns(self.field, cols, rows=n)

    def check(self) -> CheckReport:
        n = self.dim
        rep = CheckReport(True, "algebra_axioms")
        for i in range(n):
            bi = self.basis_vector(i)
            if self.multiply(self.unit, bi) != bi or self.multiply(bi, self.unit) != bi:
                rep.passed = False
                rep.failures.append({"axiom": "unit", "witness": i})
                return rep
        for i in range(n):
            bi = self.basis_vector(i)
            for j in range(n):
                bij = self.multiply(bi, self.basis_vector(j))
                for k in range(n):
                    bk = self.basis_vector(k)
                    if self.multiply(bij, bk) != self.multiply(bi, self.multiply(self.basis_vector(j), bk)):
                        rep.passed = False
                        rep.failures.append({"axiom": "associativity", "witness": [i, j, k]})
                        return rep
        return rep

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.mult[i][j] == self.mult[j][i] for i in range(n) for j in range(i + 1, n))

    @classmethod
    def from_matrices(cls, field: FieldSpec, mats: Sequence[Matrix], space: GradedSpace | None = None) -> "Algebra":
        """Algebra spanned by the (independent, product-closed) matrices ``mats``."""
        mats = list(mats)
        m = len(mats)
        if m == 0:
            raise ValueError("empty matrix algebra")
        size = mats[0].rows
        coords = Matrix.from_columns(field, [x.flat() for x in mats], rows=size * size)
        mult = []
        for a in mats:
            row = []
            for b in mats:
                x = solve(coords, (a @ b).flat())
                if x is None:
                    raise ValueError("matrices are not closed under multiplication")
                row.append({k: c for k, c in enumerate(x) if c != 0})
            mult.append(row)
        unit = solve(coords, Matrix.identity(field, size).flat())
        if unit is None:
            raise ValueError("identity is not in the span")
        return cls(field, space or trivial_space(m), mult, unit)


def dual_algebra(c: Coalgebra) -> Algebra:
    n = c.dim
    G = c.group
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k, d in enumerate(c.comult):
        for (i, j), x in d.items():
            mult[i][j][k] = x
    space = GradedSpace(G, tuple(G.inv(d) for d in c.space.degrees))
    return Algebra(c.field, space, mult, c.counit)


# radical --------------------------------------------------------------

def _products_span(a: Algebra, xs: Sequence[Vector], ys: Sequence[Vector]) -> Subspace:
    prods = [a.multiply(x, y) for x in xs for y in ys]
    return Subspace(a.space, a.field, [p for p in prods if any(p)], homogenize=True)


def trace_form(a: Algebra) -> Matrix:
    """Gram matrix of ``(x, y) -> tr(L_x L_y) = tr(L_{xy})``."""
    F, n = a.field, a.dim
    tau = [F(sum(a.mult[k][l].get(l, 0) for l in range(n))) for k in range(n)]
    rows = []
    for i in range(n):
        rows.append([F(sum(c * tau[k] for k, c in a.mult[i][j].items())) for j in range(n)])
    return Matrix(F, n, n, rows)


def _is_two_sided_ideal(a: Algebra, j: Subspace) -> bool:
    n = a.dim
    for i in range(n):
        bi = a.basis_vector(i)
        for x in j.basis:
            if not j.contains([a.multiply(bi, x), a.multiply(x, bi)]):
                return False
    return True


def radical_powers(a: Algebra, j: Subspace) -> list[Subspace]:
    """``[J^0 = A, J^1, ...]`` down to the zero subspace."""
    powers = [Subspace.whole(a.space, a.field), j]
    while powers[-1].dim:
        nxt = _products_span(a, j.basis, powers[-1].basis)
        if nxt.dim == powers[-1].dim:
            raise RadicalError("radical candidate is not nilpotent")
        powers.append(nxt)
    return powers


def jacobson_radical(a: Algebra, certify: bool = True) -> Subspace:
    """Kernel of the trace form, with ideal / nilpotency / quotient certificates."""
    F = a.field
    form = trace_form(a)
    j = Subspace(a.space, F, kernel_basis(form), homogenize=True)
    if not certify:
        return j
    if not _is_two_sided_ideal(a, j):
        raise RadicalError("trace-form kernel is not a two-sided ideal")
    try:
        powers = radical_powers(a, j)
    except RadicalError as exc:
        raise RadicalError(f"trace-form kernel is not nilpotent over {F.label()}") from exc
    if len(powers) - 1 > a.dim + 1:
        raise RadicalError("nilpotency index exceeds dim A")
    if j.dim < a.dim:
        qa, _, _ = quotient_algebra(a, j)
        if trace_form(qa).rank() != qa.dim:
            raise RadicalError(
                f"quotient trace form is degenerate over {F.label()}; cannot certify semisimplicity")
    return j


def quotient_algebra(a: Algebra, ideal: Subspace) -> tuple[Algebra, Matrix, Matrix]:
    """``A / I`` on a complement of standard basis vectors.

    Returns ``(quotient, proj, lift)`` with ``proj`` of shape ``dim(A/I) x dim A``
    and ``lift`` the section sending quotient basis vectors to the chosen
    standard basis vectors.
    """
    F, n = a.field, a.dim
    std = Subspace.whole(a.space, F)
    comp = []
    cur = list(ideal.basis)
    r = len(cur)
    for v in std.basis:
        r2 = span_rank(F, cur + [v], n)
        if r2 > r:
            comp.append(v)
            cur.append(v)
            r = r2
    q = len(comp)
    full = Matrix.from_columns(F, comp + list(ideal.basis), rows=n)
    inv = inverse(full)
    proj = inv.submatrix(list(range(q)), list(range(n)))
    lift = Matrix.from_columns(F, comp, rows=n)
    mult = []
    for x in comp:
        row = []
        for y in comp:
            z = proj.apply(a.multiply(x, y))
            row.append({k: c for k, c in enumerate(z) if c != 0})
        mult.append(row)
    G = a.space.group
    degs = tuple(a.space.degrees[v.index(next(t for t in v if t != 0))] for v in comp)
    quotient = Algebra(F, GradedSpace(G, degs), mult, proj.apply(a.unit))
    return quotient, proj, lift


# filtrations ----------------------------------------------------------

@dataclass
class Filtration:
    ambient: GradedSpace
    chain: list
    descending: bool = False

    def dims(self) -> list[int]:
        return [s.dim for s in self.chain]

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    def __getitem__(self, i) -> Subspace:
        return self.chain[i]


def coradical_filtration(c: Coalgebra) -> Filtration:
    """``sigma_i(C)`` as the annihilator of ``J^i`` under the C / C* pairing."""
    a = dual_algebra(c)
    j = jacobson_radical(a)
    powers = radical_powers(a, j)
    chain = []
    for p in powers:
        s = perp_subspace(p)
        chain.append(Subspace(c.space, c.field, s.basis))
    return Filtration(c.space, chain)


# idempotents and splitting --------------------------------------------

def _lift_idempotent(a: Algebra, x: Vector) -> Vector:
    """Iterate ``e <- 3e^2 - 2e^3`` until exact."""
    e = x
    for _ in range(64):
        e2 = a.multiply(e, e)
        if e2 == e:
            return e
        e3 = a.multiply(e2, e)
        e = a.add(a.scale(3, e2), a.scale(-2, e3))
    raise RuntimeError("idempotent lifting did not terminate")


def _semisimple_idempotents(qa: Algebra) -> list[Vector]:
    """Primitive orthogonal idempotents of a semisimple algebra from its regular module."""
    from .splitting import decompose_module
    n = qa.dim
    endos = [qa.right_matrix(qa.basis_vector(i)) for i in range(n)]
    summands = decompose_module(qa.field, n, endos)
    out = []
    for s in summands:
        comp = s.incl.apply(s.proj.apply(qa.unit))
        out.append(comp)
    return out


def primitive_idempotents(a: Algebra) -> list[Vector]:
    """Complete set of primitive orthogonal idempotents, lifted from ``A/J``."""
    j = jacobson_radical(a)
    if j.dim == 0:
        return _semisimple_idempotents(a)
    qa, proj, lift = quotient_algebra(a, j)
    bars = _semisimple_idempotents(qa)
    result = []
    f = a.unit
    for t, eb in enumerate(bars):
        if t == len(bars) - 1:
            e = f
        else:
            x = lift.apply(eb)
            x = a.multiply(a.multiply(f, x), f)
            e = _lift_idempotent(a, x)
        result.append(e)
        f = a.add(f, a.scale(-1, e))
    return result


@dataclass
class SplitReport:
    passed: bool
    block_sizes: list = dc_field(default_factory=list)
    matrix_units: list = dc_field(default_factory=list)
    reason: str = ""
    witness: object = None

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"passed": self.passed, "block_sizes": self.block_sizes, "reason": self.reason,
                "witness": None if self.witness is None else str(self.witness)}


def wedderburn_split_check(a: Algebra) -> SplitReport:
    """Certify ``A/J`` as a product of full matrix algebras by building matrix units."""
    F = a.field
    j = jacobson_radical(a)
    if j.dim == a.dim:
        return SplitReport(True, [], [])
    qa = quotient_algebra(a, j)[0] if j.dim else a
    try:
        idems = _semisimple_idempotents(qa)
    except NotSplitError as exc:
        return SplitReport(False, reason=str(exc), witness=exc.witness)

    def corner(e, f):
        vecs = [qa.multiply(qa.multiply(e, qa.basis_vector(i)), f) for i in range(qa.dim)]
        return row_reduce_basis(F, [v for v in vecs if any(v)], qa.dim)

    for e in idems:
        if len(corner(e, e)) != 1:
            return SplitReport(False, reason="a primitive idempotent has a corner of dimension > 1",
                               witness=e)
    blocks: list[list[int]] = []
    for t, e in enumerate(idems):
        for b in blocks:
            if corner(idems[b[0]], e):
                b.append(t)
                break
        else:
            blocks.append([t])
    units = []
    for b in blocks:
        f1 = idems[b[0]]
        m = len(b)
        row1, col1 = [f1], [f1]
        for t in b[1:]:
            u = corner(f1, idems[t])
            v = corner(idems[t], f1)
            if len(u) != 1 or len(v) != 1:
                return SplitReport(False, reason="off-diagonal corner is not one-dimensional")
            u, v = u[0], v[0]
            prod = qa.multiply(u, v)
            # prod must be a nonzero multiple of f1
            i0 = next(i for i, q in enumerate(f1) if q != 0)
            lam = F(prod[i0] * F.inv(f1[i0]))
            if lam == 0 or qa.scale(lam, f1) != prod:
                return SplitReport(False, reason="matrix units do not close")
            row1.append(u)
            col1.append(qa.scale(F.inv(lam), v))
        eu = [[qa.multiply(col1[i], row1[k]) for k in range(m)] for i in range(m)]
        for i in range(m):
            for k in range(m):
                for k2 in range(m):
                    for l in range(m):
                        want = eu[i][l] if k == k2 else qa.zero()
                        if qa.multiply(eu[i][k], eu[k2][l]) != want:
                            return SplitReport(False, reason="matrix unit relations fail")
        units.append(eu)
    s = qa.zero()
    for eu in units:
        for i in range(len(eu)):
            s = qa.add(s, eu[i][i])
    if s != qa.unit:
        return SplitReport(False, reason="diagonal matrix units do not sum to 1")
    sizes = [len(b) for b in blocks]
    if sum(m * m for m in sizes) != qa.dim:
        return SplitReport(False, reason="block sizes do not account for dim A/J")
    return SplitReport(True, sizes, units)
