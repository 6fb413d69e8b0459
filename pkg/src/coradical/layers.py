"""Freeness and bicomodule conditions, injective envelopes, and the two layer tables.

The left-hand table records ``[sigma_i(C)/sigma_{i-1}(C) : L* ⊠ L']`` for the
socle filtration of ``C`` as a bicomodule; the right-hand table records
``[sigma_i(I(L))/sigma_{i-1}(I(L)) : L']``.  Both are computed as hom
dimensions into semisimple layers, which is exact once every simple has
one-dimensional endomorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .coalg import (Algebra, CheckReport, Coalgebra, NotSplitError, RadicalError, check_coalgebra,
                    primitive_idempotents, wedderburn_split_check)
from .comod import (Comodule, _coords_matrix, boxtimes, dual_comodule,
                    ext1, hom_dim, hom_space, identify_simple, loewy_length, regular_bicomodule, regular_right,
                    simple_comodules, socle_series, structure, submodule_generated, twist)
from .exactla import Matrix, image_basis, rank, span_rank
from .graded import Subspace
from .mcoeff import image_c, matrix_coefficients, restricted_injectivity_check

__all__ = [
    "MultiplicityTable", "OrbitReps", "InjectiveSummand", "HGenerator", "PreconditionError",
    "check_split", "check_C1", "check_C2", "orbit_representatives", "injective_decomposition",
    "injective_hull", "injective_layer_table", "coradical_layer_table", "h_generators",
    "verify_socle_of_C", "verify_main_theorem", "verify_taft_wilson", "verify_socle_filtration_specific",
    "simple_bicomodules",
]


class PreconditionError(RuntimeError):
    """Split / (C1) / (C2) failed; the theorem does not apply."""

    def __init__(self, message: str, report: CheckReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass
class MultiplicityTable:
    """Nonzero entries ``(layer, L, L') -> multiplicity`` (labels are simple indices)."""
    entries: dict = dc_field(default_factory=dict)
    length: int = 0

    def get(self, i: int, a: int, b: int) -> int:
        return self.entries.get((i, a, b), 0)

    def rows(self) -> list:
        return [[i, a, b, n] for (i, a, b), n in sorted(self.entries.items())]

    def restrict(self, labels) -> "MultiplicityTable":
        labels = set(labels)
        return MultiplicityTable({k: v for k, v in self.entries.items() if k[1] in labels}, self.length)

    def to_json(self, names=None) -> list:
        name = (lambda i: names[i]) if names else (lambda i: i)
        return [{"layer": i, "L": name(a), "L'": name(b), "multiplicity": n} for i, a, b, n in self.rows()]

    def __eq__(self, other):
        return isinstance(other, MultiplicityTable) and self.entries == other.entries


@dataclass
class OrbitReps:
    reps: list                 # simple indices, canonical minimum of each orbit
    coords: dict               # simple index -> (rep index, g)
    action: list               # action[g][L] = index of twist(g, L)
    isomorphisms: dict = dc_field(default_factory=dict)  # simple index -> matrix twist(g, L_rep) -> L


@dataclass
class InjectiveSummand:
    subspace: Subspace
    comodule: Comodule
    socle_label: int
    multiplicity: int = 1


@dataclass
class HGenerator:
    alpha: int
    label: int
    layer: int
    subspace: Subspace        # inside I(L_alpha)
    comodule: Comodule


# conditions -----------------------------------------------------------

def check_split(c: Coalgebra) -> CheckReport:
    """Coalgebra axioms, radical certificates, and splitness of ``A/J`` and of the graded simples."""
    rep = check_coalgebra(c)
    if not rep:
        return rep
    out = CheckReport(True, "split")
    try:
        a, j, _ = structure(c)
        sr = wedderburn_split_check(a)
        out.details["block_sizes"] = sr.block_sizes
        if not sr:
            out.passed = False
            out.failures.append({"reason": sr.reason, "witness": None if sr.witness is None else str(sr.witness)})
            return out
        simple_comodules(c)
    except (NotSplitError, RadicalError) as exc:
        out.passed = False
        out.failures.append({"reason": str(exc), "witness": getattr(exc, "witness", None)})
    return out


def check_C1(c: Coalgebra) -> CheckReport:
    """``Hom(L, S_g (x) L) = 0`` for every simple ``L`` and every ``g != e``."""
    if "C1" in c._cache:
        return c._cache["C1"]
    rep = CheckReport(True, "C1")
    sp = check_split(c)
    if not sp:
        rep.passed = False
        rep.failures.append({"reason": "split check failed", "details": sp.failures})
        return rep
    simples = simple_comodules(c)
    G = c.group
    action = []
    for g in range(G.order):
        row = []
        for s in simples:
            t = twist(g, s.comodule)
            if g != G.identity and hom_dim(s.comodule, t):
                rep.passed = False
                rep.failures.append({"simple": s.label, "g": G.labels[g]})
            row.append(identify_simple(t, simples))
        action.append(row)
    rep.details["action"] = action
    c._cache["C1"] = rep
    return rep


def simple_bicomodules(c: Coalgebra) -> dict:
    """``(L, L') -> L* ⊠ L'`` for all pairs of simples."""
    if "pairs" not in c._cache:
        simples = simple_comodules(c)
        duals = [dual_comodule(s.comodule) for s in simples]
        c._cache["pairs"] = {(a.index, b.index): boxtimes(duals[a.index], b.comodule)
                             for a in simples for b in simples}
    return c._cache["pairs"]


def check_C2(c: Coalgebra) -> CheckReport:
    """Every ``L* ⊠ L'`` is simple and together they exhaust the simple bicomodules.

    Exhaustion is certified by counting: the distinct classes must satisfy
    ``sum dim^2 = |G| dim(A/J)^2``, the dimension of the semisimple quotient of
    the graded enveloping algebra.
    """
    if "C2" in c._cache:
        return c._cache["C2"]
    rep = CheckReport(True, "C2")
    sp = check_split(c)
    if not sp:
        rep.passed = False
        rep.failures.append({"reason": "split check failed", "details": sp.failures})
        return rep
    a, j, _ = structure(c)
    pairs = simple_bicomodules(c)
    classes: list = []
    for key, x in pairs.items():
        if hom_dim(x, x) != 1 or socle_series(x).length != 1:
            rep.passed = False
            rep.failures.append({"reason": "not simple", "pair": list(key)})
            continue
        for cl in classes:
            y = pairs[cl[0]]
            if y.space.degree_multiset() == x.space.degree_multiset() and hom_dim(x, y):
                cl.append(key)
                break
        else:
            classes.append([key])
    total = sum(pairs[cl[0]].dim ** 2 for cl in classes)
    want = c.group.order * (a.dim - j.dim) ** 2
    rep.details["classes"] = [[list(k) for k in cl] for cl in classes]
    rep.details["count"] = {"found": total, "expected": want}
    if rep.passed and total != want:
        rep.passed = False
        rep.failures.append(_unmatched_witness(c, pairs, classes) or
                            {"reason": f"simple bicomodules L*⊠L' account for {total} of {want} dimensions"})
    c._cache["C2"] = rep
    return rep


def _unmatched_witness(c: Coalgebra, pairs, classes):
    from .splitting import decompose_module
    bi = regular_bicomodule(c)
    soc = bi.sub(socle_series(bi)[1].basis)
    try:
        parts = decompose_module(c.field, soc.dim, hom_space(soc, soc))
    except NotSplitError:
        return None
    for s in parts:
        x = soc.sub(s.incl.columns())
        if not any(hom_dim(pairs[cl[0]], x) for cl in classes):
            return {"reason": "simple sub-bicomodule of C not of the form L*⊠L'", "dim": x.dim,
                    "degrees": list(x.space.degrees)}
    return None


def orbit_representatives(c: Coalgebra) -> OrbitReps:
    rep = check_C1(c)
    if not rep:
        raise PreconditionError("(C1) fails", rep)
    action = rep.details["action"]
    simples = simple_comodules(c)
    G = c.group
    coords, reps, isos = {}, [], {}
    for s in simples:
        if s.index in coords:
            continue
        reps.append(s.index)
        for g in range(G.order):
            t = action[g][s.index]
            if t not in coords:
                coords[t] = (s.index, g)
                iso = hom_space(twist(g, s.comodule), simples[t].comodule)
                if len(iso) != 1 or rank(iso[0]) != s.dim:
                    raise RuntimeError("twist isomorphism certificate failed")
                isos[t] = iso[0]
    return OrbitReps(reps, coords, action, isos)


# injectives -----------------------------------------------------------

def injective_decomposition(c: Coalgebra) -> list[InjectiveSummand]:
    """``C = ⊕ e_t(C)`` for primitive idempotents ``e_t`` of ``End(C)`` (right comodule endomorphisms)."""
    if "injectives" in c._cache:
        return c._cache["injectives"]
    reg = regular_right(c)
    F, n = c.field, c.dim
    endo = hom_space(reg, reg)
    alg = Algebra.from_matrices(F, endo)
    idems = primitive_idempotents(alg)
    simples = simple_comodules(c)
    out = []
    all_vecs = []
    for e in idems:
        m = Matrix.zeros(F, n, n)
        for x, b in zip(e, endo):
            if x:
                m = m + b.scale(x)
        if m @ m != m:
            raise RuntimeError("lifted idempotent is not idempotent")
        basis = image_basis(m)
        sub = Subspace(c.space, F, basis)
        comod = reg.sub(sub.basis)
        soc = socle_series(comod)[1]
        scomod = comod.sub(soc.basis)
        if hom_dim(scomod, scomod) != 1:
            raise RuntimeError("injective summand has non-simple socle")
        out.append(InjectiveSummand(sub, comod, identify_simple(scomod, simples)))
        all_vecs.extend(sub.basis)
    if span_rank(F, all_vecs, n) != n or len(all_vecs) != n:
        raise RuntimeError("injective summands do not decompose C")
    counts: dict = {}
    for s in out:
        counts[s.socle_label] = counts.get(s.socle_label, 0) + 1
    for s in out:
        s.multiplicity = counts[s.socle_label]
    out.sort(key=lambda s: (s.socle_label, s.subspace.basis))
    c._cache["injectives"] = out
    return out


def injective_hull(c: Coalgebra, label: int) -> Comodule:
    """``I(L)`` for a simple label: a summand of ``C`` with socle ``S_h (x) L``, twisted back by ``h^{-1}``."""
    key = ("hull", label)
    if key in c._cache:
        return c._cache[key]
    simples = simple_comodules(c)
    G = c.group
    target = simples[label].comodule
    for s in injective_decomposition(c):
        soc_l = simples[s.socle_label].comodule
        for h in range(G.order):
            if hom_dim(twist(h, target), soc_l):
                hull = twist(G.inv(h), s.comodule)
                hull.name = f"I(L{label})"
                c._cache[key] = hull
                return hull
    raise RuntimeError(f"no injective summand has socle in the orbit of L{label}")


# tables ---------------------------------------------------------------

def _layers(m):
    """Socle layers ``sigma_i / sigma_{i-1}`` with the data needed to lift vectors."""
    filt = socle_series(m)
    out = []
    for i in range(1, len(filt.chain)):
        big, small = filt[i], filt[i - 1]
        sm = m.sub(big.basis)
        proj = _coords_matrix(m.field, big.basis, m.dim)
        small_c = Subspace(sm.space, m.field, [proj.apply(v) for v in small.basis])
        q = sm.quotient(small_c)
        lift = Matrix.from_columns(m.field, small_c.complement_in(Subspace.whole(sm.space, m.field)), rows=sm.dim)
        incl = big.matrix()
        out.append((q, incl @ lift))
    return out


def injective_layer_table(c: Coalgebra, labels=None, max_layer: int | None = None) -> MultiplicityTable:
    """Entries ``(i, L, L') = [sigma_i(I(L)) / sigma_{i-1}(I(L)) : L']``."""
    simples = simple_comodules(c)
    labels = [s.index for s in simples] if labels is None else list(labels)
    table = MultiplicityTable()
    for a in labels:
        hull = injective_hull(c, a)
        layers = _layers(hull)
        table.length = max(table.length, len(layers))
        for i, (q, _) in enumerate(layers, start=1):
            if max_layer is not None and i > max_layer:
                break
            for s in simples:
                k = hom_dim(s.comodule, q)
                if k:
                    table.entries[(i, a, s.index)] = k
    return table


def coradical_layer_table(c: Coalgebra, labels=None, max_layer: int | None = None) -> MultiplicityTable:
    """Entries ``(i, L, L') = [sigma_i(C) / sigma_{i-1}(C) : L* ⊠ L']`` for ``C`` as a bicomodule."""
    simples = simple_comodules(c)
    labels = [s.index for s in simples] if labels is None else list(labels)
    pairs = simple_bicomodules(c)
    bi = regular_bicomodule(c)
    layers = _layers(bi)
    table = MultiplicityTable(length=len(layers))
    for i, (q, _) in enumerate(layers, start=1):
        if max_layer is not None and i > max_layer:
            break
        for a in labels:
            for s in simples:
                k = hom_dim(pairs[(a, s.index)], q)
                if k:
                    table.entries[(i, a, s.index)] = k
    return table


# H-generators ---------------------------------------------------------

def h_generators(c: Coalgebra, i: int | None = None, alphas=None) -> list[HGenerator]:
    """Subcomodules of ``sigma_j(I(L_alpha))`` generated by lifts of the ``L``-isotypic part of each layer."""
    simples = simple_comodules(c)
    alphas = orbit_representatives(c).reps if alphas is None else alphas
    out = []
    for a in alphas:
        hull = injective_hull(c, a)
        for j, (q, lift) in enumerate(_layers(hull), start=1):
            if i is not None and j > i:
                break
            for s in simples:
                vecs = []
                for f in hom_space(s.comodule, q):
                    vecs.extend(lift.apply(col) for col in f.columns())
                if not vecs:
                    continue
                sub = submodule_generated(hull, vecs)
                out.append(HGenerator(a, s.index, j, sub, hull.sub(sub.basis, f"H{j}_{a},{s.index}")))
    return out


# verification ---------------------------------------------------------

def _require(c: Coalgebra):
    for chk in (check_C1, check_C2):
        r = chk(c)
        if not r:
            raise PreconditionError(f"{r.name} fails", r)


def verify_socle_of_C(c: Coalgebra) -> CheckReport:
    """``sigma_1(C) = ⊕_alpha im c_{L_alpha}`` with each ``c_{L_alpha}`` injective; ``dim C = sum dim L_alpha dim I(L_alpha)``."""
    _require(c)
    rep = CheckReport(True, "socle_of_C")
    simples = simple_comodules(c)
    orbits = orbit_representatives(c)
    soc = socle_series(regular_bicomodule(c))[1]
    vecs, total = [], 0
    for a in orbits.reps:
        l = simples[a].comodule
        m = matrix_coefficients(l).matrix
        if rank(m) != l.dim ** 2:
            rep.passed = False
            rep.failures.append({"reason": "c_L not injective", "L": a})
        img = image_c(l)
        vecs.extend(img.basis)
        total += img.dim
    if span_rank(c.field, vecs, c.dim) != total:
        rep.passed = False
        rep.failures.append({"reason": "images of c_{L_alpha} are not independent"})
    if not soc.contains(vecs) or total != soc.dim:
        rep.passed = False
        rep.failures.append({"reason": "images do not span sigma_1(C)", "sum": total, "socle": soc.dim})
    dims = {a: injective_hull(c, a).dim for a in orbits.reps}
    book = sum(simples[a].dim * dims[a] for a in orbits.reps)
    rep.details["injective_dims"] = {f"L{a}": d for a, d in dims.items()}
    rep.details["bookkeeping"] = {"dim_C": c.dim, "sum": book}
    if book != c.dim:
        rep.passed = False
        rep.failures.append({"reason": "dim C != sum dim L_alpha * dim I(L_alpha)", "sum": book})
    # multiplicity of each twist of L_alpha among the summands of C
    G = c.group
    counts: dict = {}
    for s in injective_decomposition(c):
        counts[s.socle_label] = counts.get(s.socle_label, 0) + 1
    for a in orbits.reps:
        l = simples[a].comodule
        for g in range(G.order):
            want = sum(1 for d in l.space.degrees if d == G.inv(g))
            got = counts.get(orbits.action[g][a], 0)
            if want != got:
                rep.passed = False
                rep.failures.append({"reason": "summand count mismatch", "L": a, "g": g, "want": want, "got": got})
    return rep


def verify_main_theorem(c: Coalgebra, max_layer: int | None = None) -> CheckReport:
    """Entrywise equality of the two layer tables, for every simple ``L`` (not just orbit representatives)."""
    _require(c)
    lhs = coradical_layer_table(c, max_layer=max_layer)
    rhs = injective_layer_table(c, max_layer=max_layer)
    rep = CheckReport(True, "main_theorem")
    keys = sorted(set(lhs.entries) | set(rhs.entries))
    for k in keys:
        if lhs.get(*k) != rhs.get(*k):
            rep.passed = False
            rep.failures.append({"entry": list(k), "lhs": lhs.get(*k), "rhs": rhs.get(*k)})
    if lhs.length != rhs.length:
        rep.passed = False
        rep.failures.append({"reason": "Loewy lengths differ", "lhs": lhs.length, "rhs": rhs.length})
    rep.details = {"lhs": lhs, "rhs": rhs, "entries": len(keys), "loewy_length": lhs.length}
    return rep


def verify_taft_wilson(c: Coalgebra) -> CheckReport:
    """Second-layer multiplicities against ``dim Ext^1`` in both argument orders."""
    _require(c)
    simples = simple_comodules(c)
    lhs = coradical_layer_table(c, max_layer=2)
    rep = CheckReport(True, "taft_wilson")
    n = len(simples)
    layer2 = [[lhs.get(2, a, b) for b in range(n)] for a in range(n)]
    # ext1(X, Y) counts extensions 0 -> Y -> E -> X -> 0
    e_ll = [[ext1(simples[a], simples[b]) for b in range(n)] for a in range(n)]
    e_lpl = [[ext1(simples[b], simples[a]) for b in range(n)] for a in range(n)]
    rep.details = {"layer2": layer2, "ext1(L,L')": e_ll, "ext1(L',L)": e_lpl,
                   "matches": [name for name, t in (("ext1(L,L')", e_ll), ("ext1(L',L)", e_lpl)) if t == layer2]}
    if not rep.details["matches"]:
        rep.passed = False
        rep.failures.append({"reason": "neither argument order matches the second layer"})
    return rep


def verify_socle_filtration_specific(c: Coalgebra) -> CheckReport:
    """``sigma_i(C) = sum_{alpha, L, j<=i} im c_{H^j_{alpha,L}}``, plus the per-generator identities."""
    _require(c)
    rep = CheckReport(True, "socle_filtration_specific")
    simples = simple_comodules(c)
    coradical = socle_series(regular_bicomodule(c))
    gens = h_generators(c)
    orbits = orbit_representatives(c)
    # H-generators sum to each socle term of I(L_alpha)
    for a in orbits.reps:
        hull = injective_hull(c, a)
        filt = socle_series(hull)
        for i in range(1, len(filt.chain)):
            vecs = [v for g in gens if g.alpha == a and g.layer <= i for v in g.subspace.basis]
            if Subspace(hull.space, c.field, vecs) != filt[i]:
                rep.passed = False
                rep.failures.append({"reason": "H-generators do not sum to sigma_i(I(L))", "alpha": a, "i": i})
    for i in range(1, len(coradical.chain)):
        vecs = [v for g in gens if g.layer <= i for v in image_c(g.comodule).basis]
        if Subspace(c.space, c.field, vecs, homogenize=True) != coradical[i]:
            rep.passed = False
            rep.failures.append({"reason": "images of H-generators do not sum to sigma_i(C)", "i": i})
    for g in gens:
        v = g.comodule
        ll = loewy_length(v)
        if ll > g.layer:
            rep.passed = False
            rep.failures.append({"reason": "H-generator too long", "alpha": g.alpha, "L": g.label, "j": g.layer})
        if not restricted_injectivity_check(v):
            rep.passed = False
            rep.failures.append({"reason": "restricted c_V not injective", "alpha": g.alpha, "j": g.layer})
        img = image_c(v)
        prev = coradical[g.layer - 1]
        quot = img.dim - (img & prev).dim
        vprev = socle_series(v)[g.layer - 1].dim if g.layer - 1 < len(socle_series(v).chain) else v.dim
        want = simples[g.alpha].dim * (v.dim - vprev)
        if quot != want:
            rep.passed = False
            rep.failures.append({"reason": "(*) dimension identity fails", "alpha": g.alpha, "L": g.label,
                                 "j": g.layer, "lhs": quot, "rhs": want})
    rep.details["generators"] = len(gens)
    return rep
