"""Deterministic example coalgebras with known ground truth."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .coalg import Coalgebra
from .exactla import QQ, FieldSpec
from .graded import GradedSpace, Group

__all__ = [
    "CorpusItem", "QUIVERS", "gen_matrix_dual", "gen_divided_power", "gen_path_coalgebra",
    "gen_super_dual", "gen_group_like", "gen_nonsplit", "gen_graded_orbit", "gen_perturbed",
    "corpus", "theorem_corpus", "GENERATORS",
]


@dataclass
class CorpusItem:
    name: str
    coalgebra: Coalgebra
    expected: dict = dc_field(default_factory=dict)
    theorem_instance: bool = True


def _group(group: Group | None) -> Group:
    return group if group is not None else Group.trivial()


def gen_matrix_dual(n: int, field: FieldSpec = QQ, group: Group | None = None) -> CorpusItem:
    """``M_n(k)*``: ``Delta(x_ij) = sum_k x_ik (x) x_kj``, ``eps(x_ij) = delta_ij``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    G = _group(group)
    idx = lambda i, j: i * n + j
    comult = []
    for i in range(n):
        for j in range(n):
            comult.append({(idx(i, k), idx(k, j)): 1 for k in range(n)})
    counit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"x{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    c = Coalgebra(field, GradedSpace(G, (G.identity,) * (n * n)), comult, counit, labels, f"matrix-dual-{n}")
    return CorpusItem(c.name, c, {"coradical_dims": [0, n * n], "simple_dims": [n]})


def gen_divided_power(n: int, field: FieldSpec = QQ, group: Group | None = None, generator: int | None = None,
                      name: str | None = None) -> CorpusItem:
    """Dual of ``k[t]/(t^{n+1})``; optionally graded with ``deg c_m = generator^m``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    G = _group(group)
    gen = G.identity if generator is None else generator
    degs = [G.identity]
    for _ in range(n):
        degs.append(G.mul(degs[-1], gen))
    comult = [{(i, m - i): 1 for i in range(m + 1)} for m in range(n + 1)]
    counit = [1] + [0] * n
    c = Coalgebra(field, GradedSpace(G, tuple(degs)), comult, counit, [f"c{m}" for m in range(n + 1)],
                  name or f"divided-power-{n}")
    return CorpusItem(c.name, c, {"coradical_dims": list(range(n + 2))})


QUIVERS = {
    "a2": (["1", "2"], [("a", "1", "2")]),
    "a3": (["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")]),
    "kronecker": (["1", "2"], [("a", "1", "2"), ("b", "1", "2")]),
    "loop": (["1"], [("a", "1", "1")]),
}


def _paths(vertices, arrows, max_len):
    paths = [(v, v, ()) for v in vertices]
    frontier = [(v, v, ()) for v in vertices]
    for _ in range(max_len):
        nxt = []
        for s, t, arr in frontier:
            for name, a_s, a_t in arrows:
                if a_s == t:
                    nxt.append((s, a_t, arr + (name,)))
        paths.extend(nxt)
        frontier = nxt
    return paths


def gen_path_coalgebra(quiver, max_len: int, field: FieldSpec = QQ, group: Group | None = None,
                       arrow_degrees: dict | None = None, name: str | None = None) -> CorpusItem:
    """Paths of length <= ``max_len``; ``Delta(p) = sum_{p = q r} q (x) r``; ``eps`` = vertex indicator.

    Paths are composed left to right: ``a b`` means ``a`` then ``b``.
    """
    qname = quiver if isinstance(quiver, str) else "custom"
    vertices, arrows = QUIVERS[quiver] if isinstance(quiver, str) else quiver
    G = _group(group)
    arrow_degrees = arrow_degrees or {}
    paths = _paths(vertices, arrows, max_len)
    index = {p: i for i, p in enumerate(paths)}
    by_arrows = {}
    for p in paths:
        by_arrows[(p[0], p[2])] = p

    def deg(p):
        d = G.identity
        for a in p[2]:
            d = G.mul(d, arrow_degrees.get(a, G.identity))
        return d

    comult = []
    for s, t, arr in paths:
        d = {}
        for cut in range(len(arr) + 1):
            left, right = arr[:cut], arr[cut:]
            mid = s if cut == 0 else next(a_t for nm, a_s, a_t in arrows if nm == left[-1])
            q = by_arrows[(s, left)]
            r = by_arrows[(mid, right)]
            d[(index[q], index[r])] = 1
        comult.append(d)
    counit = [1 if not p[2] else 0 for p in paths]
    labels = [p[0] if not p[2] else "".join(p[2]) for p in paths]
    c = Coalgebra(field, GradedSpace(G, tuple(deg(p) for p in paths)), comult, counit, labels,
                  name or f"path-{qname}-{max_len}")
    lengths = [len(p[2]) for p in paths]
    dims = [0] + [sum(1 for l in lengths if l < i) for i in range(1, max(lengths) + 2)]
    return CorpusItem(c.name, c, {"coradical_dims": dims, "path_lengths": lengths})


def gen_super_dual(field: FieldSpec = QQ) -> CorpusItem:
    """Z/2-graded dual of ``k[theta]/(theta^2)`` with ``theta`` odd."""
    G = Group((("even", "odd")), ((0, 1), (1, 0)))
    item = gen_divided_power(1, field, G, 1, name="super-dual")
    item.coalgebra.labels = ("f0", "f1")
    item.expected = {"coradical_dims": [0, 1, 2], "simple_dims": [1, 1]}
    return item


def gen_graded_orbit(n: int = 2, field: FieldSpec = QQ) -> CorpusItem:
    """Divided power coalgebra graded by Z/3 with ``deg c_m = g^m``: three simples in one free orbit."""
    G = Group.cyclic(3)
    item = gen_divided_power(n, field, G, 1, name=f"zmod3-orbit-{n}")
    item.expected["simple_dims"] = [1, 1, 1]
    return item


def gen_group_like(g_count: int, field: FieldSpec = QQ, group: Group | None = None,
                   degree_assignment: Sequence[int] | None = None) -> CorpusItem:
    """Group-like coalgebras.

    Without a degree assignment: ``g_count`` group-likes ``Delta(g) = g (x) g`` in the
    identity degree.  With one: the coalgebra of functions on ``Z/g_count``
    (``Delta(d_h) = sum_{a+b=h} d_a (x) d_b``) graded by ``deg d_h =
    degree_assignment[h]``, which must be a homomorphism into ``group``.
    A nontrivial assignment makes the dual a graded division algebra, so the
    twist action on its simple comodule has a fixed point.
    """
    G = _group(group)
    m = g_count
    if degree_assignment is None or all(d == G.identity for d in degree_assignment):
        comult = [{(i, i): 1} for i in range(m)]
        c = Coalgebra(field, GradedSpace(G, (G.identity,) * m), comult, [1] * m,
                      [f"g{i + 1}" for i in range(m)], f"group-like-{m}")
        return CorpusItem(c.name, c, {"coradical_dims": [0, m], "simple_dims": [1] * (m * G.order)})
    degs = tuple(degree_assignment)
    if len(degs) != m:
        raise ValueError("degree assignment must have one entry per group element")
    for a in range(m):
        for b in range(m):
            if degs[(a + b) % m] != G.mul(degs[a], degs[b]):
                raise ValueError("degree assignment is not a homomorphism")
    comult = [{(a, (h - a) % m): 1 for a in range(m)} for h in range(m)]
    counit = [1] + [0] * (m - 1)
    c = Coalgebra(field, GradedSpace(G, degs), comult, counit, [f"d{h}" for h in range(m)],
                  f"graded-group-dual-{m}")
    return CorpusItem(c.name, c, {"coradical_dims": [0, m]}, theorem_instance=False)


def gen_nonsplit(field: FieldSpec = QQ) -> CorpusItem:
    """Dual of ``Q[t]/(t^2 - 2)``: semisimple but not split over Q."""
    comult = [{(0, 0): 1, (1, 1): 2}, {(0, 1): 1, (1, 0): 1}]
    c = Coalgebra(field, GradedSpace(Group.trivial(), (0, 0)), comult, [1, 0], ["f0", "f1"], "nonsplit")
    return CorpusItem(c.name, c, {"coradical_dims": [0, 2]}, theorem_instance=False)


def gen_perturbed(field: FieldSpec = QQ) -> CorpusItem:
    """``M_2(k)*`` with one structure constant changed to 2; fails coassociativity."""
    base = gen_matrix_dual(2, field).coalgebra
    comult = [dict(d) for d in base.comult]
    comult[0][(0, 0)] = 2
    c = Coalgebra(field, base.space, comult, base.counit, base.labels, "perturbed-matrix-dual-2")
    return CorpusItem(c.name, c, {}, theorem_instance=False)


GENERATORS: dict[str, Callable] = {
    "matrix-dual": lambda n, field=QQ: gen_matrix_dual(int(n), field),
    "divided-power": lambda n, field=QQ: gen_divided_power(int(n), field),
    "path": lambda quiver, max_len, field=QQ: gen_path_coalgebra(quiver, int(max_len), field),
    "super-dual": lambda field=QQ: gen_super_dual(field),
    "zmod3-orbit": lambda n=2, field=QQ: gen_graded_orbit(int(n), field),
    "group-like": lambda m, field=QQ: gen_group_like(int(m), field),
    "graded-group-dual": lambda field=QQ: gen_group_like(2, field, Group(("even", "odd"), ((0, 1), (1, 0))), [0, 1]),
    "nonsplit": lambda field=QQ: gen_nonsplit(field),
    "perturbed": lambda field=QQ: gen_perturbed(field),
}


def theorem_corpus(field: FieldSpec = QQ) -> list[CorpusItem]:
    """Items expected to satisfy (C1)/(C2); the main theorem is checked on each."""
    items = [gen_matrix_dual(n, field) for n in (1, 2, 3)]
    items += [gen_divided_power(n, field) for n in range(5)]
    items += [
        gen_path_coalgebra("a2", 1, field),
        gen_path_coalgebra("a3", 2, field),
        gen_path_coalgebra("kronecker", 1, field),
        gen_path_coalgebra("loop", 3, field, name="path-loop-3"),
        gen_super_dual(field),
        gen_graded_orbit(2, field),
        gen_group_like(2, field),
    ]
    return items


def corpus(field: FieldSpec = QQ) -> list[CorpusItem]:
    """Theorem corpus plus the negative items."""
    Z2 = Group(("even", "odd"), ((0, 1), (1, 0)))
    items = theorem_corpus(field)
    items.append(gen_group_like(2, field, Z2, [0, 1]))
    if field.is_rational:
        items.append(gen_nonsplit(field))
    return items
