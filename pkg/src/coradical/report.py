"""Whole-coalgebra reports: conditions, tables, verdicts, and sampled lemma suites."""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .coalg import CheckReport, Coalgebra, RadicalError, check_coalgebra, coradical_filtration
from .comod import (Comodule, dual_comodule, hom_space, layer_multiplicities,
                    loewy_length, radical_series, regular_bicomodule, regular_right, simple_comodules,
                    socle_bruteforce, socle_series, submodule_generated, twist)
from .exactla import Matrix
from .graded import Subspace, perp_subspace
from .layers import (check_C1, check_C2, check_split, coradical_layer_table,
                     injective_decomposition, injective_hull, injective_layer_table, orbit_representatives,
                     verify_main_theorem, verify_socle_filtration_specific, verify_socle_of_C, verify_taft_wilson)
from .mcoeff import check_ker_perp, image_c, loewy_length_image, matrix_coeff_square

__all__ = [
    "NOT_A_THEOREM_INSTANCE", "SuiteCounts", "check_all", "analyze", "verify", "sample_comodules",
    "sample_subcomodules", "lemma_suite", "duality_suite", "oracle_suite", "fixture_record",
]

NOT_A_THEOREM_INSTANCE = "NOT-A-THEOREM-INSTANCE"


@dataclass
class SuiteCounts:
    checks: dict = dc_field(default_factory=dict)
    failures: list = dc_field(default_factory=list)

    def bump(self, name: str, ok: bool, witness=None):
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.failures.append({"check": name, "witness": witness})

    @property
    def passed(self) -> bool:
        return not self.failures


# conditions -------------------------------------------------------------

def check_all(c: Coalgebra) -> dict:
    """Axioms, split, (C1), (C2) as a dict of reports (later checks skipped after a failure)."""
    out = {"axioms": check_coalgebra(c)}
    if not out["axioms"]:
        return out
    out["split"] = check_split(c)
    if not out["split"]:
        return out
    out["C1"] = check_C1(c)
    out["C2"] = check_C2(c)
    return out


def _status(conds: dict) -> str:
    if not conds["axioms"]:
        return "axioms"
    if not all(conds.get(k) for k in ("split", "C1", "C2")):
        return "precondition"
    return "ok"


def _names(c: Coalgebra):
    return [s.label for s in simple_comodules(c)]


def analyze(c: Coalgebra, max_layer: int | None = None) -> dict:
    """Filtration dims, simples, injective summands and both tables (best effort off-theorem)."""
    conds = check_all(c)
    status = _status(conds)
    rep = {"name": c.name, "dim": c.dim, "field": c.field.label(),
           "conditions": {k: v.to_json() for k, v in conds.items()}}
    if status == "axioms":
        rep["verdict"] = "FAIL"
        return rep
    try:
        rep["coradical_dims"] = coradical_filtration(c).dims()
    except RadicalError as exc:
        rep["verdict"] = NOT_A_THEOREM_INSTANCE
        rep["witnesses"] = [str(exc)]
        return rep
    if not conds.get("split"):
        rep["verdict"] = NOT_A_THEOREM_INSTANCE
        rep["witnesses"] = conds["split"].failures
        return rep
    G = c.group
    simples = simple_comodules(c)
    names = _names(c)
    rep["simples"] = [s.to_json(G) for s in simples]
    rep["right_socle_dims"] = socle_series(regular_right(c)).dims()
    rep["injective_summands"] = [{"socle": names[s.socle_label], "dim": s.subspace.dim}
                                 for s in injective_decomposition(c)]
    rep["tables"] = {"lhs": coradical_layer_table(c, max_layer=max_layer).to_json(names),
                     "rhs": injective_layer_table(c, max_layer=max_layer).to_json(names)}
    if status == "ok":
        orbits = orbit_representatives(c)
        rep["orbit_representatives"] = [names[a] for a in orbits.reps]
        rep["verdict"] = "PASS" if rep["tables"]["lhs"] == rep["tables"]["rhs"] else "FAIL"
    else:
        rep["verdict"] = NOT_A_THEOREM_INSTANCE
        rep["witnesses"] = [f for k in ("C1", "C2") for f in conds[k].failures]
    return rep


# sampled comodules -------------------------------------------------------

def sample_comodules(c: Coalgebra) -> list[Comodule]:
    """Right comodules used by the lemma suites: C, simples, injectives, truncations, twists, quotients."""
    out = []
    reg = regular_right(c)
    out.append(reg)
    simples = simple_comodules(c)
    out.extend(s.comodule for s in simples)
    filt = socle_series(reg)
    for i in range(1, len(filt.chain) - 1):
        out.append(reg.sub(filt[i].basis, f"sigma{i}(C)"))
        out.append(reg.quotient(filt[i], f"C/sigma{i}(C)"))
    for s in simples:
        hull = injective_hull(c, s.index)
        out.append(hull)
        hf = socle_series(hull)
        for i in range(2, len(hf.chain) - 1):
            out.append(hull.sub(hf[i].basis, f"sigma{i}({hull.name})"))
    G = c.group
    if G.order > 1:
        out.extend(twist(g, reg) for g in range(1, G.order))
    return out


def sample_subcomodules(v: Comodule, rng: random.Random, count: int = 3) -> list[Subspace]:
    """Socle terms plus subcomodules generated by random homogeneous vectors."""
    F = v.field
    subs = list(socle_series(v).chain)
    blocks = sorted(v.space.blocks().items())
    for _ in range(count):
        g, idx = blocks[rng.randrange(len(blocks))]
        vec = [F.zero()] * v.dim
        for i in idx:
            vec[i] = F(rng.randint(-2, 2))
        if any(vec):
            subs.append(submodule_generated(v, [tuple(vec)]))
    uniq = []
    for s in subs:
        if s not in uniq:
            uniq.append(s)
    return uniq


def _random_morphisms(w: Comodule, v: Comodule, rng: random.Random, extra: int = 1) -> list[Matrix]:
    hs = hom_space(w, v)
    out = list(hs)
    for _ in range(extra if hs else 0):
        acc = hs[0].scale(0)
        for h in hs:
            acc = acc + h.scale(rng.randint(-3, 3))
        out.append(acc)
    return out


def lemma_suite(c: Coalgebra, seed: int = 0, max_dim: int = 12) -> SuiteCounts:
    """Commuting square, kernel containment, image inclusion / sum, counit factorization, Loewy lengths."""
    from .mcoeff import counit_embedding
    rng = random.Random(seed)
    counts = SuiteCounts()
    comods = [m for m in sample_comodules(c) if m.dim <= max_dim]
    for w in comods:
        for v in comods:
            if w.dim * v.dim > 64:
                continue
            for f in _random_morphisms(w, v, rng):
                counts.bump("matrix_coeff_square", matrix_coeff_square(f, w, v), [w.name, v.name])
    for v in comods:
        subs = sample_subcomodules(v, rng)
        img_v = image_c(v)
        for s in subs:
            counts.bump("ker_perp", check_ker_perp(v, s), v.name)
            if s.dim:
                counts.bump("image_inclusion", img_v.contains(image_c(v.sub(s.basis)).basis), v.name)
        for a in subs:
            for b in subs:
                if not a.dim or not b.dim or a == b:
                    continue
                tot = a + b
                vv = v.sub(tot.basis)
                lhs = image_c(vv)
                rhs = image_c(v.sub(a.basis)) + image_c(v.sub(b.basis))
                counts.bump("image_sum", lhs == rhs, [v.name, a.dim, b.dim])
    reg = regular_right(c)
    for s in socle_series(reg).chain[1:]:
        try:
            counit_embedding(c, s.basis)
            ok = True
        except AssertionError:
            ok = False
        counts.bump("counit_embedding", ok, s.dim)
    for v in comods:
        a, b = loewy_length_image(v)
        counts.bump("loewy_length_image", a == b, [v.name, a, b])
        bi = regular_bicomodule(c).sub(image_c(v).basis)
        right = regular_right(c).sub(image_c(v).basis)
        counts.bump("right_le_bi_loewy", loewy_length(right) <= loewy_length(bi), v.name)
    return counts


def duality_suite(c: Coalgebra, max_dim: int = 12) -> SuiteCounts:
    """``sigma_i(V)^perp = rho^i(V*)`` and ``rho^i(V)^perp = sigma_i(V*)``."""
    counts = SuiteCounts()
    for v in sample_comodules(c):
        if v.dim > max_dim:
            continue
        vd = dual_comodule(v)
        sv, rv = socle_series(v), radical_series(v)
        svd, rvd = socle_series(vd), radical_series(vd)
        counts.bump("loewy_lengths_agree", sv.length == rv.length == svd.length, v.name)
        for i in range(len(sv.chain)):
            counts.bump("socle_perp_is_radical", perp_subspace(sv[i]) == rvd[i], [v.name, i])
            counts.bump("radical_perp_is_socle", perp_subspace(rv[i]) == svd[i], [v.name, i])
    return counts


def oracle_suite(c: Coalgebra, max_dim: int = 12) -> SuiteCounts:
    counts = SuiteCounts()
    for v in sample_comodules(c):
        if v.dim <= max_dim:
            counts.bump("socle_oracle", socle_bruteforce(v) == socle_series(v)[1], v.name)
    return counts


# verification -----------------------------------------------------------

def verify(c: Coalgebra, keep_going: bool = False, max_layer: int | None = None, seed: int = 0) -> dict:
    """Run every theorem-level check; returns a report with ``verdict`` and ``exit_code``."""
    conds = check_all(c)
    status = _status(conds)
    rep = {"name": c.name, "conditions": {k: v.to_json() for k, v in conds.items()}, "checks": {}, "witnesses": []}
    if status == "axioms":
        rep.update(verdict="FAIL", exit_code=1, witnesses=conds["axioms"].failures)
        return rep
    if status == "precondition":
        rep.update(verdict=NOT_A_THEOREM_INSTANCE, exit_code=2,
                   witnesses=[f for k in ("split", "C1", "C2") if k in conds for f in conds[k].failures])
        return rep
    names = _names(c)
    steps = [
        ("main_theorem", lambda: verify_main_theorem(c, max_layer=max_layer)),
        ("taft_wilson", lambda: verify_taft_wilson(c)),
        ("socle_of_C", lambda: verify_socle_of_C(c)),
        ("socle_filtration_specific", lambda: verify_socle_filtration_specific(c)),
        ("lemmas", lambda: _as_report("lemmas", lemma_suite(c, seed))),
        ("duality", lambda: _as_report("duality", duality_suite(c))),
        ("socle_oracle", lambda: _as_report("socle_oracle", oracle_suite(c))),
    ]
    ok = True
    for name, fn in steps:
        r = fn()
        entry = {"passed": r.passed, "failures": r.failures}
        if name == "main_theorem":
            entry["entries"] = r.details["entries"]
            rep["tables"] = {"lhs": r.details["lhs"].to_json(names), "rhs": r.details["rhs"].to_json(names)}
        elif name == "taft_wilson":
            entry["matching_order"] = r.details["matches"]
        elif r.details:
            entry["details"] = r.details
        rep["checks"][name] = entry
        if not r.passed:
            ok = False
            rep["witnesses"].extend(r.failures)
            if not keep_going:
                break
    rep["verdict"] = "PASS" if ok else "FAIL"
    rep["exit_code"] = 0 if ok else 1
    return rep


def _as_report(name: str, counts: SuiteCounts) -> CheckReport:
    return CheckReport(counts.passed, name, counts.failures, dict(counts.checks))


# fixtures ---------------------------------------------------------------

def fixture_record(c: Coalgebra) -> dict:
    """Ground-truth record compared against the brute-force fixtures."""
    simples = simple_comodules(c)
    reg = regular_right(c)
    filt = socle_series(reg)
    bi = socle_series(regular_bicomodule(c))
    G = c.group
    return {
        "name": c.name,
        "dim": c.dim,
        "simples": [{"dim": s.dim, "degrees": [G.labels[d] for d in s.degrees]} for s in simples],
        "right_socle_dims": filt.dims(),
        "right_layer_multiplicities": [layer_multiplicities(reg, s.comodule) for s in simples],
        "coradical_dims": bi.dims(),
        "coradical_table": coradical_layer_table(c).rows(),
    }
