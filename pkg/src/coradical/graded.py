"""Finite groups and G-graded vector spaces with a strict associator.

A :class:`GradedSpace` is a dimension plus a degree (group element index) for
each basis vector.  Tensor products enumerate pairs ``(i, j)`` with the left
index major, matching :func:`coradical.exactla.kron`.  Simple objects are the
degree-``g`` lines; the unit is the degree-``e`` line.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .exactla import FieldSpec, Matrix, Vector, kernel_basis, row_reduce_basis, span_rank

__all__ = [
    "Group", "GradedSpace", "GradedMap", "Subspace", "DualData",
    "tensor", "tensor_maps", "dual", "perp", "perp_subspace", "picard_twist", "right_twist", "unit_space",
    "graded_kernel",
]


@dataclass(frozen=True)
class Group:
    labels: tuple
    table: tuple  # table[a][b] = index of a*b
    identity: int = 0
    inverse: tuple = dc_field(default=())

    def __post_init__(self):
        n = len(self.labels)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("Cayley table must be n x n")
        if not self.inverse:
            inv = []
            for a in range(n):
                cands = [b for b in range(n) if self.table[a][b] == self.identity]
                if len(cands) != 1:
                    raise ValueError(f"element {self.labels[a]} has no unique inverse")
                inv.append(cands[0])
            object.__setattr__(self, "inverse", tuple(inv))
        self.check()

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def check(self) -> None:
        n, t, e = self.order, self.table, self.identity
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                raise ValueError("identity law fails")
            if t[a][self.inverse[a]] != e or t[self.inverse[a]][a] != e:
                raise ValueError("inverse law fails")
            for b in range(n):
                if not 0 <= t[a][b] < n:
                    raise ValueError("table entry out of range")
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise ValueError(f"associativity fails at {a},{b},{c}")

    @classmethod
    def cyclic(cls, n: int, name: str = "g") -> "Group":
        labels = tuple("e" if i == 0 else (name if i == 1 else f"{name}^{i}") for i in range(n))
        return cls(labels, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))

    @classmethod
    def trivial(cls) -> "Group":
        return cls.cyclic(1)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "table": [list(r) for r in self.table], "identity": self.identity}

    @classmethod
    def from_json(cls, d: dict) -> "Group":
        return cls(tuple(d["labels"]), tuple(tuple(r) for r in d["table"]), d.get("identity", 0))


@dataclass(frozen=True)
class GradedSpace:
    group: Group
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        for d in self.degrees:
            if not 0 <= d < self.group.order:
                raise ValueError(f"degree {d} not in group")

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def indices_of_degree(self, g: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == g]

    def blocks(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return out

    def degree_multiset(self) -> tuple:
        return tuple(sorted(self.degrees))


def unit_space(group: Group) -> GradedSpace:
    return GradedSpace(group, (group.identity,))


def _same_group(v: GradedSpace, w: GradedSpace) -> None:
    if v.group != w.group:
        raise ValueError("graded spaces over different groups")


def tensor(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    _same_group(v, w)
    G = v.group
    return GradedSpace(G, tuple(G.mul(a, b) for a in v.degrees for b in w.degrees))


def picard_twist(g: int, v: GradedSpace) -> GradedSpace:
    """Degrees of ``S_g (x) V``."""
    G = v.group
    return GradedSpace(G, tuple(G.mul(g, d) for d in v.degrees))


def right_twist(v: GradedSpace, g: int) -> GradedSpace:
    """Degrees of ``V (x) S_g``."""
    G = v.group
    return GradedSpace(G, tuple(G.mul(d, g) for d in v.degrees))


class GradedMap:
    """A degree-preserving linear map, stored as a target x source matrix."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: GradedSpace, target: GradedSpace, matrix: Matrix, check: bool = True):
        if matrix.shape != (target.dim, source.dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match {target.dim}x{source.dim}")
        self.source, self.target, self.matrix = source, target, matrix
        if check:
            self.check_degrees()

    def check_degrees(self) -> None:
        sd, td = self.source.degrees, self.target.degrees
        for i, row in enumerate(self.matrix.data):
            for j, x in enumerate(row):
                if x != 0 and td[i] != sd[j]:
                    raise ValueError(f"entry ({i},{j}) joins degrees {td[i]} and {sd[j]}")

    @property
    def field(self) -> FieldSpec:
        return self.matrix.field

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        if other.target != self.source:
            raise ValueError("cannot compose: spaces differ")
        return GradedMap(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other):
        return (isinstance(other, GradedMap) and self.source == other.source
                and self.target == other.target and self.matrix == other.matrix)

    def is_injective(self) -> bool:
        return self.matrix.rank() == self.source.dim

    @classmethod
    def identity(cls, field: FieldSpec, v: GradedSpace) -> "GradedMap":
        return cls(v, v, Matrix.identity(field, v.dim), check=False)


def tensor_maps(f: GradedMap, g: GradedMap) -> GradedMap:
    from .exactla import kron
    return GradedMap(tensor(f.source, g.source), tensor(f.target, g.target), kron(f.matrix, g.matrix), check=False)


@dataclass(frozen=True)
class DualData:
    space: GradedSpace
    ev: GradedMap    # V* (x) V -> 1
    coev: GradedMap  # 1 -> V (x) V*


def dual(v: GradedSpace, field: FieldSpec) -> DualData:
    G = v.group
    vs = GradedSpace(G, tuple(G.inv(d) for d in v.degrees))
    n = v.dim
    one = unit_space(G)
    ev_row = [1 if i == j else 0 for i in range(n) for j in range(n)]
    ev = GradedMap(tensor(vs, v), one, Matrix(field, 1, n * n, [ev_row]))
    coev = GradedMap(one, tensor(v, vs), Matrix(field, n * n, 1, [[x] for x in ev_row]))
    return DualData(vs, ev, coev)


class Subspace:
    """A homogeneous subspace of a graded space, kept as a per-degree echelon basis."""

    __slots__ = ("ambient", "field", "basis")

    def __init__(self, ambient: GradedSpace, field: FieldSpec, vectors: Sequence[Sequence] = (), *, homogenize: bool = False):
        self.ambient, self.field = ambient, field
        n = ambient.dim
        pieces: dict[int, list] = {}
        z = field.zero()
        for v in vectors:
            if len(v) != n:
                raise ValueError("vector length does not match ambient dimension")
            degs = {ambient.degrees[i] for i, x in enumerate(v) if x != 0}
            if len(degs) > 1 and not homogenize:
                raise ValueError("vector is not homogeneous")
            for d in degs:
                pieces.setdefault(d, []).append(tuple(x if ambient.degrees[i] == d else z for i, x in enumerate(v)))
        basis = []
        for d in sorted(pieces):
            basis.extend(row_reduce_basis(field, pieces[d], n))
        self.basis = basis

    @classmethod
    def whole(cls, ambient: GradedSpace, field: FieldSpec) -> "Subspace":
        n = ambient.dim
        return cls(ambient, field, [tuple(field(1 if i == j else 0) for i in range(n)) for j in range(n)])

    @classmethod
    def zero(cls, ambient: GradedSpace, field: FieldSpec) -> "Subspace":
        return cls(ambient, field, [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def matrix(self) -> Matrix:
        """Inclusion matrix (ambient x dim), columns = basis vectors."""
        return Matrix.from_columns(self.field, self.basis, rows=self.ambient.dim)

    def inclusion(self, space: GradedSpace | None = None) -> GradedMap:
        return GradedMap(space or self.space(), self.ambient, self.matrix())

    def space(self) -> GradedSpace:
        return GradedSpace(self.ambient.group, tuple(self.degree_of(v) for v in self.basis))

    def degree_of(self, v) -> int:
        for i, x in enumerate(v):
            if x != 0:
                return self.ambient.degrees[i]
        return self.ambient.group.identity

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.field, list(self.basis) + list(other.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersect(other)

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient, self.field)
        m = self.matrix().hstack(other.matrix().scale(-1))
        vecs = []
        k = self.dim
        a = self.matrix()
        for sol in kernel_basis(m):
            vecs.append(a.apply(sol[:k]))
        return Subspace(self.ambient, self.field, vecs, homogenize=True)

    def contains(self, vectors) -> bool:
        if isinstance(vectors, Subspace):
            vectors = vectors.basis
        vectors = list(vectors)
        if not vectors:
            return True
        return span_rank(self.field, list(self.basis) + vectors, self.ambient.dim) == self.dim

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, tuple(self.basis)))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient.dim})"

    def coordinates(self, v) -> Vector:
        """Coordinates of ``v`` in this subspace's basis (raises if outside)."""
        from .exactla import solve
        x = solve(self.matrix(), v)
        if x is None:
            raise ValueError("vector not in subspace")
        return x

    def complement_in(self, bigger: "Subspace") -> list[Vector]:
        """Homogeneous vectors of ``bigger`` completing this basis (pivot order)."""
        out = []
        cur = list(self.basis)
        r = len(cur)
        n = self.ambient.dim
        for v in bigger.basis:
            r2 = span_rank(self.field, cur + [v], n)
            if r2 > r:
                cur.append(v)
                out.append(v)
                r = r2
        return out

    def image(self, f: Matrix, target: GradedSpace) -> "Subspace":
        return Subspace(target, self.field, [f.apply(v) for v in self.basis], homogenize=True)


def perp_subspace(w: Subspace) -> Subspace:
    """Annihilator of ``w`` inside the dual space (dual-basis coordinates)."""
    F = w.field
    v = w.ambient
    G = v.group
    vs = GradedSpace(G, tuple(G.inv(d) for d in v.degrees))
    n = v.dim
    vecs = []
    for g, idx in sorted(v.blocks().items()):
        rows = [[vec[i] for i in idx] for vec in w.basis if any(vec[i] != 0 for i in idx)]
        if rows:
            sols = kernel_basis(Matrix(F, len(rows), len(idx), rows))
        else:
            sols = [tuple(F(1 if a == b else 0) for a in range(len(idx))) for b in range(len(idx))]
        for s in sols:
            full = [F.zero()] * n
            for a, i in enumerate(idx):
                full[i] = s[a]
            vecs.append(tuple(full))
    return Subspace(vs, F, vecs)


def perp(w_incl: GradedMap) -> GradedMap:
    """Inclusion of ``W^perp`` into ``V*`` for an injective ``W -> V``."""
    if not w_incl.is_injective():
        raise ValueError("perp needs an injective map")
    sub = Subspace(w_incl.target, w_incl.field, w_incl.matrix.columns(), homogenize=True)
    return perp_subspace(sub).inclusion()


def graded_kernel(space: GradedSpace, field: FieldSpec, mats: Sequence[Matrix]) -> Subspace:
    """Joint kernel of homogeneous operators, computed degree by degree."""
    n = space.dim
    vecs = []
    z = field.zero()
    for g, idx in sorted(space.blocks().items()):
        rows = []
        for m in mats:
            for row in m.data:
                r = [row[i] for i in idx]
                if any(x != 0 for x in r):
                    rows.append(r)
        if rows:
            sols = kernel_basis(Matrix(field, len(rows), len(idx), rows, _trusted=True))
        else:
            one = field.one()
            sols = [tuple(one if a == b else z for a in range(len(idx))) for b in range(len(idx))]
        for s in sols:
            full = [z] * n
            for a, i in enumerate(idx):
                full[i] = s[a]
            vecs.append(tuple(full))
    return Subspace(space, field, vecs)
