"""Right/left comodules, bicomodules, and their module-theoretic invariants.

A comodule over ``C`` (basis ``b_0..b_{n-1}``) on a graded space ``V`` is
stored as one ``dim V x dim V`` matrix per basis vector of ``C``:

* right: ``a(v_m) = sum_{k,l} R_k[l, m] v_l (x) b_k``
* left:  ``a(v_m) = sum_{k,l} L_k[l, m] b_k (x) v_l``

With ``A = C*`` acting by ``rho(f) = sum_k f(b_k) R_k`` a right comodule is a
left ``A``-module; a left comodule becomes a right module through
``v . f = sum_k f(b_k) L_k v``.  The coaction axioms are equivalent to

* right: ``R_i R_j = sum_k Delta_k[i, j] R_k`` and ``sum_k eps_k R_k = 1``
* left:  ``L_j L_i = sum_k Delta_k[i, j] L_k`` and ``sum_k eps_k L_k = 1``

and a bicomodule additionally needs ``R_j L_k = L_k R_j``.

Graded comodules are modules over the smash product ``A # k^G`` whose basis
element ``(k, g)`` acts as ``R_k P_g`` (``P_g`` the projection onto degree ``g``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coalg import (Algebra, CheckReport, Coalgebra, Filtration, NotSplitError, dual_algebra,
                    jacobson_radical, primitive_idempotents, radical_powers)
from .exactla import FieldSpec, Matrix, Vector, inverse, kernel_basis, kron, rank, row_reduce_basis, span_rank
from .graded import GradedMap, GradedSpace, Subspace, graded_kernel, picard_twist, right_twist, tensor

__all__ = [
    "Comodule", "Bicomodule", "SimpleComodule", "ExtReport",
    "regular_right", "regular_left", "regular_bicomodule", "to_dual_module",
    "socle_series", "radical_series", "loewy_length", "dual_comodule", "dual_comodule_oracle", "double_dual",
    "twist", "boxtimes", "direct_sum", "hom_space", "hom_dim", "is_isomorphic", "simple_comodules",
    "identify_simple", "composition_multiplicity", "composition_multiplicity_idempotent",
    "layer_multiplicities", "ext1", "ext1_radical", "socle_bruteforce", "smash_algebra",
    "structure", "submodule_generated", "enveloping_operators",
]


def structure(c: Coalgebra):
    """Cached ``(A, J, [J^0, J^1, ...])`` for the dual algebra."""
    if "structure" not in c._cache:
        a = dual_algebra(c)
        j = jacobson_radical(a)
        c._cache["structure"] = (a, j, radical_powers(a, j))
    return c._cache["structure"]


def _coords_matrix(field: FieldSpec, basis: Sequence[Vector], n: int) -> Matrix:
    """Left inverse ``P`` of the inclusion of ``basis`` (``P @ incl = I``)."""
    d = len(basis)
    cur = list(basis)
    r = d
    for i in range(n):
        e = tuple(field(1 if j == i else 0) for j in range(n))
        r2 = span_rank(field, cur + [e], n)
        if r2 > r:
            cur.append(e)
            r = r2
    if r != n:
        raise ValueError("basis vectors are dependent")
    inv = inverse(Matrix.from_columns(field, cur, rows=n))
    return inv.submatrix(list(range(d)), list(range(n)))


def _homogeneous_degree(space: GradedSpace, v: Sequence) -> int:
    degs = {space.degrees[i] for i, x in enumerate(v) if x != 0}
    if len(degs) != 1:
        raise ValueError("basis vector is not homogeneous (or is zero)")
    return degs.pop()


def _restrict(mats: Sequence[Matrix], basis: Sequence[Vector], field: FieldSpec, n: int):
    incl = Matrix.from_columns(field, basis, rows=n)
    proj = _coords_matrix(field, basis, n)
    out = []
    for m in mats:
        img = m @ incl
        restricted = proj @ img
        if incl @ restricted != img:
            raise ValueError("subspace is not closed under the coaction")
        out.append(restricted)
    return out


def _quotient(mats: Sequence[Matrix], sub: Subspace, field: FieldSpec):
    """Induced matrices on a homogeneous complement of ``sub`` plus the projection."""
    whole = Subspace.whole(sub.ambient, field)
    comp = sub.complement_in(whole)
    n = sub.ambient.dim
    full = Matrix.from_columns(field, comp + list(sub.basis), rows=n)
    inv = inverse(full)
    q = len(comp)
    proj = inv.submatrix(list(range(q)), list(range(n)))
    lift = Matrix.from_columns(field, comp, rows=n)
    return [proj @ m @ lift for m in mats], proj, lift, comp


class Comodule:
    """A right or left comodule over a coalgebra, as coefficient matrices."""

    __slots__ = ("coalgebra", "side", "space", "coeffs", "name", "_cache")

    def __init__(self, coalgebra: Coalgebra, side: str, space: GradedSpace, coeffs: Sequence[Matrix], name: str = ""):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if len(coeffs) != coalgebra.dim:
            raise ValueError("need one coefficient matrix per basis vector of C")
        self.coalgebra, self.side, self.space = coalgebra, side, space
        self.coeffs = tuple(coeffs)
        self.name = name
        self._cache = {}

    @property
    def field(self) -> FieldSpec:
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def operators(self) -> list[Matrix]:
        return list(self.coeffs)

    def action(self, f: Sequence) -> Matrix:
        """Action of ``f in C*`` (``rho(f)`` for right, ``v -> v.f`` for left)."""
        F, n = self.field, self.dim
        acc = Matrix.zeros(F, n, n)
        for k, x in enumerate(f):
            if x != 0:
                acc = acc + self.coeffs[k].scale(x)
        return acc

    def coaction_map(self) -> GradedMap:
        """The coaction as a graded map ``V -> V (x) C`` or ``V -> C (x) V``."""
        C, n, d = self.coalgebra, self.dim, self.coalgebra.dim
        rows = [[0] * n for _ in range(n * d)]
        for k, m in enumerate(self.coeffs):
            for l in range(n):
                for j in range(n):
                    x = m[l, j]
                    if x != 0:
                        rows[l * d + k if self.side == "right" else k * n + l][j] = x
        target = tensor(self.space, C.space) if self.side == "right" else tensor(C.space, self.space)
        return GradedMap(self.space, target, Matrix(self.field, n * d, n, rows))

    def check(self) -> CheckReport:
        C = self.coalgebra
        F, G = self.field, C.group
        rep = CheckReport(True, f"{self.side}_comodule_axioms")
        deg, cdeg = self.space.degrees, C.space.degrees
        for k, m in enumerate(self.coeffs):
            for l in range(self.dim):
                for j in range(self.dim):
                    if m[l, j] == 0:
                        continue
                    want = G.mul(deg[l], cdeg[k]) if self.side == "right" else G.mul(cdeg[k], deg[l])
                    if want != deg[j]:
                        rep.passed = False
                        rep.failures.append({"axiom": "degree", "coefficient": k, "entry": [l, j]})
                        return rep
        a = dual_algebra(C)
        for i in range(C.dim):
            for j in range(C.dim):
                lhs = self.coeffs[i] @ self.coeffs[j] if self.side == "right" else self.coeffs[j] @ self.coeffs[i]
                rhs = Matrix.zeros(F, self.dim, self.dim)
                for k, x in a.mult[i][j].items():
                    rhs = rhs + self.coeffs[k].scale(x)
                if lhs != rhs:
                    rep.passed = False
                    rep.failures.append({"axiom": "coassociativity", "witness": [i, j]})
                    return rep
        if self.action(C.counit) != Matrix.identity(F, self.dim):
            rep.passed = False
            rep.failures.append({"axiom": "counit"})
        return rep

    def sub(self, basis: Sequence[Vector], name: str = "") -> "Comodule":
        """Subcomodule on the given homogeneous basis (closure is asserted)."""
        basis = list(basis)
        space = GradedSpace(self.space.group, tuple(_homogeneous_degree(self.space, v) for v in basis))
        mats = _restrict(self.coeffs, basis, self.field, self.dim) if basis else [Matrix.zeros(self.field, 0, 0)] * self.coalgebra.dim
        return Comodule(self.coalgebra, self.side, space, mats, name)

    def quotient(self, sub: Subspace, name: str = "") -> "Comodule":
        mats, _, _, comp = _quotient(self.coeffs, sub, self.field)
        space = GradedSpace(self.space.group, tuple(_homogeneous_degree(self.space, v) for v in comp))
        return Comodule(self.coalgebra, self.side, space, mats, name)

    def is_subcomodule(self, sub: Subspace) -> bool:
        return all(sub.contains([m.apply(v) for v in sub.basis]) for m in self.coeffs)

    def __repr__(self):
        return f"Comodule({self.side}, dim={self.dim}, {self.name or 'unnamed'})"


class Bicomodule:
    """Compatible left and right coactions on one graded space."""

    __slots__ = ("coalgebra", "space", "left", "right", "name", "_cache")

    def __init__(self, coalgebra: Coalgebra, space: GradedSpace, left: Sequence[Matrix], right: Sequence[Matrix],
                 name: str = ""):
        self.coalgebra, self.space = coalgebra, space
        self.left, self.right = tuple(left), tuple(right)
        self.name = name
        self._cache = {}

    side = "bi"

    @property
    def field(self) -> FieldSpec:
        return self.coalgebra.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def operators(self) -> list[Matrix]:
        return list(self.left) + list(self.right)

    def as_right(self) -> Comodule:
        return Comodule(self.coalgebra, "right", self.space, self.right, self.name)

    def as_left(self) -> Comodule:
        return Comodule(self.coalgebra, "left", self.space, self.left, self.name)

    def check(self) -> CheckReport:
        for part in (self.as_left(), self.as_right()):
            r = part.check()
            if not r:
                return r
        rep = CheckReport(True, "bicomodule_axioms")
        for j, rj in enumerate(self.right):
            for k, lk in enumerate(self.left):
                if rj @ lk != lk @ rj:
                    rep.passed = False
                    rep.failures.append({"axiom": "compatibility", "witness": [j, k]})
                    return rep
        return rep

    def sub(self, basis: Sequence[Vector], name: str = "") -> "Bicomodule":
        basis = list(basis)
        space = GradedSpace(self.space.group, tuple(_homogeneous_degree(self.space, v) for v in basis))
        if not basis:
            z = [Matrix.zeros(self.field, 0, 0)] * self.coalgebra.dim
            return Bicomodule(self.coalgebra, space, z, z, name)
        return Bicomodule(self.coalgebra, space, _restrict(self.left, basis, self.field, self.dim),
                          _restrict(self.right, basis, self.field, self.dim), name)

    def quotient(self, sub: Subspace, name: str = "") -> "Bicomodule":
        left, _, _, comp = _quotient(self.left, sub, self.field)
        right = _quotient(self.right, sub, self.field)[0]
        space = GradedSpace(self.space.group, tuple(_homogeneous_degree(self.space, v) for v in comp))
        return Bicomodule(self.coalgebra, space, left, right, name)

    def is_subcomodule(self, sub: Subspace) -> bool:
        return all(sub.contains([m.apply(v) for v in sub.basis]) for m in self.operators())

    def __repr__(self):
        return f"Bicomodule(dim={self.dim}, {self.name or 'unnamed'})"


# regular objects ------------------------------------------------------

def regular_right(c: Coalgebra) -> Comodule:
    """``C`` as a right comodule via ``Delta``: ``R_k[l, m] = Delta_m[l, k]``."""
    F, n = c.field, c.dim
    rows = [[[0] * n for _ in range(n)] for _ in range(n)]
    for m, d in enumerate(c.comult):
        for (l, k), x in d.items():
            rows[k][l][m] = x
    return Comodule(c, "right", c.space, [Matrix(F, n, n, r) for r in rows], "C")


def regular_left(c: Coalgebra) -> Comodule:
    """``C`` as a left comodule via ``Delta``: ``L_k[l, m] = Delta_m[k, l]``."""
    F, n = c.field, c.dim
    rows = [[[0] * n for _ in range(n)] for _ in range(n)]
    for m, d in enumerate(c.comult):
        for (k, l), x in d.items():
            rows[k][l][m] = x
    return Comodule(c, "left", c.space, [Matrix(F, n, n, r) for r in rows], "C")


def regular_bicomodule(c: Coalgebra) -> Bicomodule:
    if "regular_bi" not in c._cache:
        c._cache["regular_bi"] = Bicomodule(c, c.space, regular_left(c).coeffs, regular_right(c).coeffs, "C")
    return c._cache["regular_bi"]


def to_dual_module(v: Comodule) -> list[Matrix]:
    """Action matrices of the dual basis ``b_k*`` (left module for right comodules, right module for left)."""
    return list(v.coeffs)


def direct_sum(v: Comodule, w: Comodule) -> Comodule:
    if v.side != w.side or v.coalgebra is not w.coalgebra:
        raise ValueError("direct sum needs comodules on the same side over the same coalgebra")
    F = v.field
    mats = []
    for a, b in zip(v.coeffs, w.coeffs):
        top = a.hstack(Matrix.zeros(F, v.dim, w.dim))
        bot = Matrix.zeros(F, w.dim, v.dim).hstack(b)
        mats.append(top.vstack(bot))
    return Comodule(v.coalgebra, v.side, GradedSpace(v.space.group, v.space.degrees + w.space.degrees), mats,
                    f"{v.name}+{w.name}")


# filtrations ----------------------------------------------------------

def _power_operators(m, i: int) -> list[Matrix]:
    """Operators whose joint kernel is ``sigma_i`` (images span ``rho^i``)."""
    c = m.coalgebra
    _, _, powers = structure(c)
    if isinstance(m, Bicomodule):
        out = []
        lm = m.as_left()
        rm = m.as_right()
        for a in range(i + 1):
            b = i - a
            pa = powers[a] if a < len(powers) else powers[-1]
            pb = powers[b] if b < len(powers) else powers[-1]
            if not pa.basis or not pb.basis:
                continue
            ra = [rm.action(x) for x in pa.basis]
            lb = [lm.action(y) for y in pb.basis]
            out.extend(x @ y for x in ra for y in lb)
        return out
    p = powers[i] if i < len(powers) else powers[-1]
    return [m.action(x) for x in p.basis]


def enveloping_operators(m, i: int) -> list[Matrix]:
    return _power_operators(m, i)


def socle_series(m) -> Filtration:
    """``sigma_i(V)`` = joint kernel of ``J^i`` (of ``A (x) A^op`` for bicomodules)."""
    if "socle" in m._cache:
        return m._cache["socle"]
    F = m.field
    chain = [Subspace.zero(m.space, F)]
    i = 1
    while chain[-1].dim < m.dim:
        s = graded_kernel(m.space, F, _power_operators(m, i))
        if s.dim == chain[-1].dim:
            raise RuntimeError("socle series stalled; radical is wrong")
        chain.append(s)
        i += 1
    filt = Filtration(m.space, chain)
    m._cache["socle"] = filt
    return filt


def radical_series(m) -> Filtration:
    """``rho^i(V) = J^i . V`` (descending, ending in 0)."""
    F = m.field
    chain = [Subspace.whole(m.space, F)]
    i = 1
    while chain[-1].dim:
        vecs = []
        for op in _power_operators(m, i):
            vecs.extend(op.columns())
        s = Subspace(m.space, F, [v for v in vecs if any(v)], homogenize=True)
        if s.dim == chain[-1].dim:
            raise RuntimeError("radical series stalled")
        chain.append(s)
        i += 1
    return Filtration(m.space, chain, descending=True)


def loewy_length(m) -> int:
    return socle_series(m).length


# duals, twists, products ----------------------------------------------

def _inverse_degrees(space: GradedSpace) -> GradedSpace:
    G = space.group
    return GradedSpace(G, tuple(G.inv(d) for d in space.degrees))


def dual_comodule(v: Comodule) -> Comodule:
    """``V*`` via ``(ev (x) id_C (x) id) o (id (x) a_V (x) id) o (id (x) coev)``.

    The composite is evaluated on each dual basis vector by sparse contraction,
    following the three maps literally.
    """
    if v.side != "right":
        raise ValueError("dual_comodule takes a right comodule")
    F, n, d = v.field, v.dim, v.coalgebra.dim
    mats = [[[F.zero()] * n for _ in range(n)] for _ in range(d)]
    for m in range(n):
        # v_m* (x) coev(1) = sum_l v_m* (x) v_l (x) v_l*
        stage1 = {(m, l, l): F.one() for l in range(n)}
        # id (x) a_V (x) id: v_l -> sum R_k[p, l] v_p (x) b_k
        stage2: dict = {}
        for (f, l, s), x in stage1.items():
            for k in range(d):
                col = v.coeffs[k]
                for p in range(n):
                    y = col[p, l]
                    if y != 0:
                        key = (f, p, k, s)
                        stage2[key] = F(stage2.get(key, 0) + x * y)
        # ev (x) id (x) id: v_f* (x) v_p -> delta_fp
        for (f, p, k, s), x in stage2.items():
            if f == p and x != 0:
                mats[k][s][m] = F(mats[k][s][m] + x)
    coeffs = [Matrix(F, n, n, rows) for rows in mats]
    return Comodule(v.coalgebra, "left", _inverse_degrees(v.space), coeffs, f"{v.name}*")


def dual_comodule_oracle(v: Comodule) -> Comodule:
    """Index-juggling form of the dual: ``L_k = R_k^T``."""
    return Comodule(v.coalgebra, "left", _inverse_degrees(v.space), [m.T for m in v.coeffs], f"{v.name}*")


def double_dual(w: Comodule) -> Comodule:
    """Right comodule ``(W*)``-dual of a left comodule ``W`` under the pivotal identification."""
    if w.side != "left":
        raise ValueError("double_dual takes a left comodule")
    return Comodule(w.coalgebra, "right", _inverse_degrees(w.space), [m.T for m in w.coeffs], f"{w.name}*")


def twist(s, v):
    """``S (x) V`` for right comodules, ``V (x) S`` for left ones; ``s`` a group index or a line."""
    if isinstance(s, GradedSpace):
        if s.dim != 1:
            raise ValueError("twisting needs an invertible (one-dimensional) object")
        s = s.degrees[0]
    if isinstance(v, Bicomodule):
        raise ValueError("twist a one-sided comodule")
    space = picard_twist(s, v.space) if v.side == "right" else right_twist(v.space, s)
    return Comodule(v.coalgebra, v.side, space, v.coeffs, v.name if s == v.space.group.identity else f"{v.name}<{s}>")


def boxtimes(w: Comodule, v: Comodule) -> Bicomodule:
    """``W ⊠ V`` for a left comodule ``W`` and a right comodule ``V``."""
    if w.side != "left" or v.side != "right":
        raise ValueError("boxtimes takes (left, right)")
    if w.coalgebra is not v.coalgebra:
        raise ValueError("comodules over different coalgebras")
    F = v.field
    iw, iv = Matrix.identity(F, w.dim), Matrix.identity(F, v.dim)
    left = [kron(m, iv) for m in w.coeffs]
    right = [kron(iw, m) for m in v.coeffs]
    return Bicomodule(v.coalgebra, tensor(w.space, v.space), left, right, f"{w.name}⊠{v.name}")


# morphisms ------------------------------------------------------------

def _op_pairs(v, w):
    if isinstance(v, Bicomodule) != isinstance(w, Bicomodule):
        raise ValueError("hom between a bicomodule and a one-sided comodule")
    if isinstance(v, Bicomodule):
        return list(zip(v.left, w.left)) + list(zip(v.right, w.right))
    if v.side != w.side:
        raise ValueError("hom between comodules on different sides")
    return list(zip(v.coeffs, w.coeffs))


def hom_space(v, w) -> list[Matrix]:
    """Basis of degree-preserving ``f: V -> W`` with ``W_k f = f V_k`` for every coefficient."""
    F = v.field
    dv, dw = v.dim, w.dim
    unknowns = [(i, j) for i in range(dw) for j in range(dv) if w.space.degrees[i] == v.space.degrees[j]]
    if not unknowns:
        return []
    index = {u: t for t, u in enumerate(unknowns)}
    by_row: dict[int, list] = {}
    by_col: dict[int, list] = {}
    for (i, j) in unknowns:
        by_row.setdefault(i, []).append(j)
        by_col.setdefault(j, []).append(i)
    rows = []
    seen = set()
    nu = len(unknowns)
    for vk, wk in _op_pairs(v, w):
        wd, vd = wk.data, vk.data
        for a in range(dw):
            for b in range(dv):
                row = [0] * nu
                nz = False
                # (W_k f)[a, b] = sum_i W_k[a, i] f[i, b]
                for i in by_col.get(b, ()):
                    x = wd[a][i]
                    if x != 0:
                        row[index[(i, b)]] += x
                        nz = True
                # (f V_k)[a, b] = sum_j f[a, j] V_k[j, b]
                for j in by_row.get(a, ()):
                    x = vd[j][b]
                    if x != 0:
                        row[index[(a, j)]] -= x
                        nz = True
                if nz:
                    t = tuple(F(x) for x in row)
                    if any(t) and t not in seen:
                        seen.add(t)
                        rows.append(t)
    if rows:
        sols = kernel_basis(Matrix(F, len(rows), nu, rows, _trusted=True))
    else:
        sols = [tuple(F(1 if s == t else 0) for s in range(nu)) for t in range(nu)]
    out = []
    for s in sols:
        data = [[F.zero()] * dv for _ in range(dw)]
        for t, (i, j) in enumerate(unknowns):
            data[i][j] = s[t]
        out.append(Matrix(F, dw, dv, tuple(tuple(r) for r in data), _trusted=True))
    return out


def hom_dim(v, w) -> int:
    return len(hom_space(v, w))


def is_isomorphic(v, w) -> bool:
    """Isomorphism test by searching for an invertible morphism in a generic combination."""
    if v.dim != w.dim or v.space.degree_multiset() != w.space.degree_multiset():
        return False
    if v.dim == 0:
        return True
    hs = hom_space(v, w)
    if not hs:
        return False
    import random
    rng = random.Random(0)
    for attempt in range(12):
        acc = hs[0].scale(0)
        for h in hs:
            acc = acc + h.scale(rng.randint(-5, 5) if attempt else 1)
        if rank(acc) == v.dim:
            return True
    return False


def submodule_generated(m: Comodule, vectors: Sequence[Vector]) -> Subspace:
    """Smallest subcomodule containing ``vectors``: ``span{R_k v}``."""
    F = m.field
    vecs = list(vectors)
    for op in m.operators():
        vecs.extend(op.apply(v) for v in vectors)
    return Subspace(m.space, F, [v for v in vecs if any(v)], homogenize=True)


# simples --------------------------------------------------------------

@dataclass
class SimpleComodule:
    index: int
    comodule: Comodule
    key: tuple = ()

    @property
    def dim(self) -> int:
        return self.comodule.dim

    @property
    def label(self) -> str:
        return f"L{self.index}"

    @property
    def degrees(self) -> tuple:
        return self.comodule.space.degree_multiset()

    def to_json(self, group=None) -> dict:
        degs = list(self.degrees)
        if group is not None:
            degs = [group.labels[d] for d in degs]
        return {"label": self.label, "dim": self.dim, "degrees": degs}


def _simple_key(l: Comodule) -> tuple:
    """Iso-invariant sort key: dim, degree multiset, per-degree coefficient spans."""
    F, C = l.field, l.coalgebra
    pieces = []
    for h in sorted(set(l.space.degrees)):
        vecs = []
        for li in l.space.indices_of_degree(h):
            for mi in range(l.dim):
                vecs.append(tuple(l.coeffs[k][li, mi] for k in range(C.dim)))
        basis = row_reduce_basis(F, vecs, C.dim)
        pieces.append((h, tuple(tuple(F.format(x) for x in r) for r in basis)))
    return (l.dim, l.space.degree_multiset(), tuple(pieces))


def _split_into_summands(m: Comodule) -> list[Comodule]:
    from .splitting import decompose_module
    endos = hom_space(m, m)
    summands = decompose_module(m.field, m.dim, endos)
    return [m.sub(s.incl.columns()) for s in summands]


def simple_comodules(c: Coalgebra) -> list[SimpleComodule]:
    """Representatives of the graded simple right comodules, in canonical order.

    The socle of ``C`` is split into indecomposable (hence simple) summands and
    every twist of these is collected; up to isomorphism this yields every
    simple.  Completeness is certified by ``sum dim(L)^2 = |G| dim(A/J)``.
    """
    if "simples" in c._cache:
        return c._cache["simples"]
    a, j, _ = structure(c)
    reg = regular_right(c)
    soc = socle_series(reg)[1]
    base = reg.sub(soc.basis, "soc")
    G = c.group
    found: list[Comodule] = []
    for s in _split_into_summands(base):
        for g in range(G.order):
            cand = twist(g, s)
            if not any(x.space.degree_multiset() == cand.space.degree_multiset() and hom_dim(cand, x) for x in found):
                found.append(cand)
    for l in found:
        if hom_dim(l, l) != 1:
            raise NotSplitError("a simple comodule has endomorphisms beyond scalars", witness=l.name)
        if socle_series(l).length != 1:
            raise RuntimeError("a socle summand is not semisimple")
    total = sum(l.dim ** 2 for l in found)
    if total != G.order * (a.dim - j.dim):
        raise NotSplitError(f"simple comodules account for {total} of {G.order * (a.dim - j.dim)} dimensions")
    keyed = sorted(((_simple_key(l), t, l) for t, l in enumerate(found)), key=lambda x: (x[0], x[1]))
    out = []
    for idx, (key, _, l) in enumerate(keyed):
        l.name = f"L{idx}"
        out.append(SimpleComodule(idx, l, key))
    c._cache["simples"] = out
    return out


def identify_simple(l: Comodule, simples: Sequence[SimpleComodule]) -> int:
    for s in simples:
        if s.comodule.space.degree_multiset() == l.space.degree_multiset() and hom_dim(l, s.comodule):
            return s.index
    raise ValueError("comodule is not isomorphic to a listed simple")


# multiplicities -------------------------------------------------------

def layer_multiplicities(m, simple) -> list[int]:
    """``[sigma_i / sigma_{i-1} : L]`` for each socle layer, via hom spaces."""
    filt = socle_series(m)
    out = []
    for i in range(1, len(filt.chain)):
        layer = m.sub(filt[i].basis).quotient(_coords_sub(m, filt[i], filt[i - 1]))
        out.append(hom_dim(simple, layer))
    return out


def _coords_sub(m, big: Subspace, small: Subspace) -> Subspace:
    """``small`` expressed in the coordinates of ``m.sub(big.basis)``."""
    sm = m.sub(big.basis)
    proj = _coords_matrix(m.field, big.basis, m.dim)
    return Subspace(sm.space, m.field, [proj.apply(v) for v in small.basis])


def composition_multiplicity(m, simple) -> int:
    """Jordan–Hölder multiplicity ``[V : L]`` (summed over socle layers)."""
    if isinstance(simple, SimpleComodule):
        simple = simple.comodule
    return sum(layer_multiplicities(m, simple))


def smash_algebra(c: Coalgebra) -> Algebra:
    """``A # k^G``: basis ``(k, g)`` at ``k |G| + g`` acting as ``R_k P_g``."""
    if "smash" in c._cache:
        return c._cache["smash"]
    G, n, F = c.group, c.dim, c.field
    ng = G.order
    cdeg = c.space.degrees
    size = n * ng
    mult = [[{} for _ in range(size)] for _ in range(size)]
    for k in range(n):
        for kk in range(n):
            prods: dict = {}
            for jj, d in enumerate(c.comult):
                x = d.get((k, kk))
                if x:
                    prods[jj] = x
            if not prods:
                continue
            for h in range(ng):
                g = G.mul(h, G.inv(cdeg[kk]))
                mult[k * ng + g][kk * ng + h] = {jj * ng + h: x for jj, x in prods.items()}
    unit = [F.zero()] * size
    for k in range(n):
        if c.counit[k]:
            for g in range(ng):
                unit[k * ng + g] = c.counit[k]
    degs = GradedSpace(G, (G.identity,) * size)
    b = Algebra(F, degs, mult, unit)
    c._cache["smash"] = b
    return b


def _smash_action(v: Comodule, x: Sequence) -> Matrix:
    G = v.coalgebra.group
    ng = G.order
    F = v.field
    acc = Matrix.zeros(F, v.dim, v.dim)
    for t, val in enumerate(x):
        if val == 0:
            continue
        k, g = divmod(t, ng)
        proj = Matrix(F, v.dim, v.dim, tuple(tuple(F(1 if (i == j and v.space.degrees[i] == g) else 0)
                                                     for j in range(v.dim)) for i in range(v.dim)), _trusted=True)
        acc = acc + (v.coeffs[k] @ proj).scale(val)
    return acc


def _smash_idempotents(c: Coalgebra):
    if "smash_idems" not in c._cache:
        c._cache["smash_idems"] = primitive_idempotents(smash_algebra(c))
    return c._cache["smash_idems"]


def composition_multiplicity_idempotent(v: Comodule, simple: SimpleComodule) -> int:
    """``[V : L] = dim(e V)`` for a primitive idempotent ``e`` of ``A # k^G`` with ``e L != 0``."""
    if v.side != "right":
        raise ValueError("idempotent route is for right comodules")
    l = simple.comodule
    for e in _smash_idempotents(v.coalgebra):
        r = rank(_smash_action(l, e))
        if r:
            if r != 1:
                raise RuntimeError("primitive idempotent acts with rank > 1 on a simple")
            return rank(_smash_action(v, e))
    raise RuntimeError("no primitive idempotent detects the simple")


# Ext^1 -----------------------------------------------------------------

@dataclass
class ExtReport:
    cocycles: int
    coboundaries: int

    @property
    def dim(self) -> int:
        return self.cocycles - self.coboundaries


def ext1(l, l2, detail: bool = False):
    """``dim Ext^1(L, L2)``: extensions ``0 -> L2 -> E -> L -> 0`` of right comodules.

    ``E = L2 + L`` with coefficients ``[[A_k, Phi_k], [0, B_k]]``; the cocycle
    equations are ``A_i Phi_j + Phi_i B_j = sum_k Delta_k[i,j] Phi_k`` and
    ``sum_k eps_k Phi_k = 0``, the coboundaries ``A_k h - h B_k``.
    """
    if isinstance(l, SimpleComodule):
        l = l.comodule
    if isinstance(l2, SimpleComodule):
        l2 = l2.comodule
    C = l.coalgebra
    F, G = l.field, C.group
    a = structure(C)[0]
    p, q, n = l2.dim, l.dim, C.dim
    A, B = l2.coeffs, l.coeffs
    unknowns = [(k, r, s) for k in range(n) for r in range(p) for s in range(q)
                if G.mul(l2.space.degrees[r], C.space.degrees[k]) == l.space.degrees[s]]
    nu = len(unknowns)
    index = {u: t for t, u in enumerate(unknowns)}
    if nu == 0:
        return ExtReport(0, 0) if detail else 0
    rows = []
    for i in range(n):
        for j in range(n):
            for r in range(p):
                for s in range(q):
                    row = [0] * nu
                    # (A_i Phi_j)[r, s]
                    for t in range(p):
                        x = A[i][r, t]
                        if x != 0 and (j, t, s) in index:
                            row[index[(j, t, s)]] += x
                    # (Phi_i B_j)[r, s]
                    for t in range(q):
                        x = B[j][t, s]
                        if x != 0 and (i, r, t) in index:
                            row[index[(i, r, t)]] += x
                    for k, x in a.mult[i][j].items():
                        if (k, r, s) in index:
                            row[index[(k, r, s)]] -= x
                    if any(row):
                        rows.append(tuple(F(x) for x in row))
    for r in range(p):
        for s in range(q):
            row = [0] * nu
            for k in range(n):
                if C.counit[k] and (k, r, s) in index:
                    row[index[(k, r, s)]] += C.counit[k]
            if any(row):
                rows.append(tuple(F(x) for x in row))
    z = len(kernel_basis(Matrix(F, len(rows), nu, rows, _trusted=True))) if rows else nu
    cob = []
    for r in range(p):
        for s in range(q):
            if l2.space.degrees[r] != l.space.degrees[s]:
                continue
            vec = [F.zero()] * nu
            for k in range(n):
                # (A_k h - h B_k) for h = E_{rs}
                for t in range(p):
                    x = A[k][t, r]
                    if x != 0:
                        vec[index[(k, t, s)]] = F(vec[index[(k, t, s)]] + x)
                for t in range(q):
                    x = B[k][s, t]
                    if x != 0:
                        vec[index[(k, r, t)]] = F(vec[index[(k, r, t)]] - x)
            cob.append(tuple(vec))
    b = span_rank(F, cob, nu) if cob else 0
    rep = ExtReport(z, b)
    return rep if detail else rep.dim


def ext1_radical(l: SimpleComodule, l2: SimpleComodule) -> int:
    """``dim e_L2 (J/J^2) e_L`` in ``A # k^G``, ``e_L`` a primitive idempotent detecting ``L``.

    Cross-check for :func:`ext1`, with the same argument order.
    """
    c = l.comodule.coalgebra
    b = smash_algebra(c)
    if "smash_rad" not in c._cache:
        jb = jacobson_radical(b)
        c._cache["smash_rad"] = radical_powers(b, jb)
    powers = c._cache["smash_rad"]

    def detect(s):
        for e in _smash_idempotents(c):
            if rank(_smash_action(s.comodule, e)):
                return e
        raise RuntimeError("no idempotent detects the simple")

    e1, e2 = detect(l), detect(l2)

    def sandwich(sub):
        vecs = [b.multiply(b.multiply(e2, x), e1) for x in sub.basis]
        return span_rank(b.field, [v for v in vecs if any(v)], b.dim)

    j1 = powers[1]
    j2 = powers[2] if len(powers) > 2 else powers[-1]
    return sandwich(j1) - sandwich(j2)


def socle_bruteforce(m: Comodule) -> Subspace:
    """Sum of images of all morphisms from simple comodules."""
    F = m.field
    vecs = []
    for s in simple_comodules(m.coalgebra):
        for f in hom_space(s.comodule, m):
            vecs.extend(f.columns())
    return Subspace(m.space, F, [v for v in vecs if any(v)], homogenize=True)
