#!/usr/bin/env python3
"""Brute-force ground truth for coalgebra files, independent of the package.

Only hom-space solving and repeated socle quotients are used; no radical,
no idempotents.  Simples are found by descending through generated
submodules and certified by the Burnside test (the operators generate all
of End(L)).

    python scripts/bruteforce_fixtures.py IN_DIR OUT_DIR
"""
import json
import os
import sys
from fractions import Fraction


# linear algebra over Q ------------------------------------------------------

def rref(rows, ncols):
    rows = [list(r) for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / Fraction(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    return rows[:r], piv


def nullspace(rows, ncols):
    red, piv = rref(rows, ncols)
    out = []
    for free in range(ncols):
        if free in piv:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -red[i][free]
        out.append(v)
    return out


def span(vectors, n):
    return rref([v for v in vectors if any(v)], n)[0] if vectors else []


def matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b)) if a[i][t]) for j in range(len(b[0]))] for i in range(len(a))]


def apply(m, v):
    return [sum(x * y for x, y in zip(row, v) if x) for row in m]


def coords(basis, v):
    """Coordinates of v in the (independent) basis vectors."""
    n = len(v)
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] + [v[i]] for i in range(n)]
    red, piv = rref(rows, k + 1)
    if k in piv:
        raise ValueError("vector outside span")
    x = [Fraction(0)] * k
    for i, pc in enumerate(piv):
        x[pc] = red[i][k]
    return x


# modules: (degrees, list of operator matrices) -------------------------------

class Mod:
    def __init__(self, degs, ops):
        self.degs, self.ops = list(degs), [[list(r) for r in m] for m in ops]

    @property
    def dim(self):
        return len(self.degs)


def restrict(m, basis):
    degs = []
    for v in basis:
        ds = {m.degs[i] for i, x in enumerate(v) if x}
        assert len(ds) == 1, "inhomogeneous"
        degs.append(ds.pop())
    ops = []
    for op in m.ops:
        cols = [coords(basis, apply(op, v)) for v in basis]
        ops.append([[cols[j][i] for j in range(len(basis))] for i in range(len(basis))])
    return Mod(degs, ops)


def quotient(m, sub):
    """Module on a standard-vector complement of sub, with the lift of that complement."""
    n = m.dim
    comp = []
    cur = list(sub)
    for i in range(n):
        e = [Fraction(int(i == j)) for j in range(n)]
        if len(span(cur + [e], n)) > len(span(cur, n)):
            comp.append(e)
            cur.append(e)
    full = comp + list(sub)
    q = len(comp)
    ops = []
    for op in m.ops:
        cols = [coords(full, apply(op, v))[:q] for v in comp]
        ops.append([[cols[j][i] for j in range(q)] for i in range(q)])
    return Mod([m.degs[v.index(1)] for v in comp], ops), comp


def hom(a, b):
    """Basis of degree-preserving f: a -> b with b.op f = f a.op."""
    unk = [(i, j) for i in range(b.dim) for j in range(a.dim) if b.degs[i] == a.degs[j]]
    idx = {u: t for t, u in enumerate(unk)}
    rows = []
    for va, vb in zip(a.ops, b.ops):
        for r in range(b.dim):
            for s in range(a.dim):
                row = [Fraction(0)] * len(unk)
                for i in range(b.dim):
                    if vb[r][i] and (i, s) in idx:
                        row[idx[(i, s)]] += vb[r][i]
                for j in range(a.dim):
                    if va[j][s] and (r, j) in idx:
                        row[idx[(r, j)]] -= va[j][s]
                if any(row):
                    rows.append(row)
    sols = nullspace(rows, len(unk)) if rows else [[Fraction(int(s == t)) for s in range(len(unk))] for t in range(len(unk))]
    out = []
    for s in sols:
        f = [[Fraction(0)] * a.dim for _ in range(b.dim)]
        for t, (i, j) in enumerate(unk):
            f[i][j] = s[t]
        out.append(f)
    return out


def graded_ops(m):
    """Operators together with the degree projections."""
    out = list(m.ops)
    for g in sorted(set(m.degs)):
        out.append([[Fraction(int(i == j and m.degs[i] == g)) for j in range(m.dim)] for i in range(m.dim)])
    return out


def generated(m, vecs):
    n = m.dim
    cur = span(vecs, n)
    while True:
        new = span(cur + [apply(op, v) for op in graded_ops(m) for v in cur], n)
        if len(new) == len(cur):
            return cur
        cur = new


def burnside(m):
    n = m.dim
    ops = graded_ops(m)
    flat = lambda x: [y for r in x for y in r]
    alg = span([flat(o) for o in ops], n * n)
    while True:
        mats = [[r[i * n:(i + 1) * n] for i in range(n)] for r in alg]
        new = span(alg + [flat(matmul(a, b)) for a in mats for b in ops], n * n)
        if len(new) == len(alg):
            return len(alg) == n * n
        alg = new


def homogeneous_parts(m, v):
    out = []
    for g in sorted(set(m.degs)):
        w = [x if m.degs[i] == g else Fraction(0) for i, x in enumerate(v)]
        if any(w):
            out.append(w)
    return out


def find_simple(m):
    """A simple submodule of a nonzero module, by descent through generated submodules."""
    while not burnside(m):
        n = m.dim
        cands = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for op in m.ops:
            cands += [list(col) for col in zip(*op)]
            cands += nullspace(op, n)
        best = None
        for v in cands:
            for w in homogeneous_parts(m, v):
                g = generated(m, [w])
                if 0 < len(g) < n and (best is None or len(g) < len(best)):
                    best = g
        if best is None:
            raise RuntimeError("descent stalled on a non-simple module")
        m = restrict(m, best)
    return m


def twist(m, g, table):
    return Mod([table[g][d] for d in m.degs], m.ops)


def socle_layers(m, simples):
    """Repeated socle quotients; returns (dims, per-layer hom dims).  None if a simple is missing."""
    dims = [0]
    layers = []
    sub = []
    while len(sub) < m.dim:
        q, lift = quotient(m, sub) if sub else (m, [[Fraction(int(i == j)) for j in range(m.dim)] for i in range(m.dim)])
        homs = [hom(s, q) for s in simples]
        imgs = [apply_cols(f) for hs in homs for f in hs]
        soc_q = span([v for vs in imgs for v in vs], q.dim)
        if not soc_q:
            return None, q
        lifted = [[sum(c * lift[t][i] for t, c in enumerate(v)) for i in range(m.dim)] for v in soc_q]
        sub = span(list(sub) + lifted, m.dim)
        dims.append(len(sub))
        layers.append([len(hs) for hs in homs])
    return (dims, layers), None


def apply_cols(f):
    return [list(col) for col in zip(*f)] if f and f[0] else []


# the coalgebra ---------------------------------------------------------------

def parse(path):
    d = json.load(open(path))
    assert d["field"] == "q", "fixtures are over Q"
    labels = d["group"]["labels"]
    table = d["group"]["table"]
    lookup = {x: i for i, x in enumerate(labels)}
    degs = [lookup[x] for x in d["basis"]["degrees"]]
    n = len(degs)
    D = [dict() for _ in range(n)]
    for i, j, k, s in d["comult"]:
        D[k][(i, j)] = Fraction(s)
    return d["name"], labels, table, degs, D


def regular_right(n, degs, D):
    ops = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for m, dm in enumerate(D):
        for (l, k), x in dm.items():
            ops[k][l][m] = x
    return Mod(degs, ops)


def regular_bi(n, degs, D):
    left = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for m, dm in enumerate(D):
        for (k, l), x in dm.items():
            left[k][l][m] = x
    return Mod(degs, left + regular_right(n, degs, D).ops)


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def pair(l, lp, table, inv):
    """L* ⊠ L' with left coefficients R_k^T (x) 1 and right 1 (x) R'_k."""
    degs = [table[inv[a]][b] for a in l.degs for b in lp.degs]
    left = [kron([list(r) for r in zip(*op)], eye(lp.dim)) for op in l.ops]
    right = [kron(eye(l.dim), op) for op in lp.ops]
    return Mod(degs, left + right)


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def canonical_key(l, ncoal):
    pieces = []
    for h in sorted(set(l.degs)):
        vecs = [[l.ops[k][li][mi] for k in range(ncoal)] for li in range(l.dim) if l.degs[li] == h for mi in range(l.dim)]
        pieces.append((h, tuple(tuple(fmt(x) for x in r) for r in span(vecs, ncoal))))
    return (l.dim, tuple(sorted(l.degs)), tuple(pieces))


def record(path):
    name, labels, table, degs, D = parse(path)
    n = len(degs)
    G = len(labels)
    inv = [next(b for b in range(G) if table[a][b] == 0) for a in range(G)]
    reg = regular_right(n, degs, D)
    simples = []

    def add(s):
        for g in range(G):
            t = twist(s, g, table)
            if not any(sorted(x.degs) == sorted(t.degs) and hom(t, x) for x in simples):
                simples.append(t)

    # grow the simple list until every twist of C has a complete socle series
    changed = True
    while changed:
        changed = False
        for g in range(G):
            res, stuck = socle_layers(twist(reg, g, table), simples)
            if res is None:
                add(find_simple(stuck))
                changed = True
                break
    for s in simples:
        assert burnside(s) and len(hom(s, s)) == 1
    simples.sort(key=lambda s: canonical_key(s, n))
    (dims, layers), _ = socle_layers(reg, simples)
    right_mult = [[layer[t] for layer in layers] for t in range(len(simples))]
    bi = regular_bi(n, degs, D)
    pairs = [[pair(a, b, table, inv) for b in simples] for a in simples]
    flat_pairs = [p for row in pairs for p in row]
    res, stuck = socle_layers(bi, flat_pairs)
    if res is None:
        raise RuntimeError(f"{name}: a simple bicomodule is not of the form L*⊠L'")
    bdims, blayers = res
    table_rows = []
    k = len(simples)
    for i, layer in enumerate(blayers, start=1):
        for a in range(k):
            for b in range(k):
                if layer[a * k + b]:
                    table_rows.append([i, a, b, layer[a * k + b]])
    return {
        "name": name,
        "dim": n,
        "simples": [{"dim": s.dim, "degrees": [labels[d] for d in sorted(s.degs)]} for s in simples],
        "right_socle_dims": dims,
        "right_layer_multiplicities": right_mult,
        "coradical_dims": bdims,
        "coradical_table": table_rows,
    }


def main(argv):
    src, dst = argv[1], argv[2]
    os.makedirs(dst, exist_ok=True)
    for fn in sorted(os.listdir(src)):
        if not fn.endswith(".json"):
            continue
        rec = record(os.path.join(src, fn))
        with open(os.path.join(dst, fn), "w", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, indent=1, ensure_ascii=False) + "\n")
        print(fn, rec["right_socle_dims"], rec["coradical_dims"])


if __name__ == "__main__":
    main(sys.argv)
