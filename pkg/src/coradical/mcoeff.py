"""Matrix coefficients ``c_V : V* ⊠ V -> C`` and the identities they satisfy.

For a right comodule with coefficients ``R_k`` the map sends
``v_l* (x) v_m`` to ``sum_k R_k[l, m] b_k``; the column of ``v_l* (x) v_m``
sits at ``l * dim V + m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coalg import Coalgebra
from .comod import (Bicomodule, Comodule, boxtimes, dual_comodule, hom_space, loewy_length,
                    regular_bicomodule, socle_series)
from .exactla import Matrix, kron, rank
from .graded import GradedMap, Subspace, perp_subspace

__all__ = [
    "MatrixCoeffMap", "ConventionError", "matrix_coefficients", "image_c", "check_ker_perp",
    "counit_embedding", "loewy_length_image", "restricted_injectivity_check", "matrix_coeff_square",
    "splitting_of_socle_dual", "restricted_image",
]


class ConventionError(AssertionError):
    """Two formulas that must agree did not."""


@dataclass
class MatrixCoeffMap:
    source: Bicomodule
    target: Coalgebra
    map: GradedMap

    @property
    def matrix(self) -> Matrix:
        return self.map.matrix


def _formula_ev_first(v: Comodule) -> Matrix:
    """``(ev (x) id_C) o (id_{V*} (x) a_V)`` contracted index by index."""
    F, n, d = v.field, v.dim, v.coalgebra.dim
    cols = []
    for l in range(n):
        for m in range(n):
            # a_V(v_m) = sum_{p,k} R_k[p, m] v_p (x) b_k ; ev pairs v_l* with v_p
            col = [F.zero()] * d
            for k in range(d):
                for p in range(n):
                    x = v.coeffs[k][p, m]
                    if x != 0 and p == l:
                        col[k] = F(col[k] + x)
            cols.append(col)
    return Matrix.from_columns(F, cols, rows=d)


def _formula_dual_first(v: Comodule, vd: Comodule) -> Matrix:
    """``(id_C (x) ev) o (a_{V*} (x) id_V)``, using the left coaction of ``V*``."""
    F, n, d = v.field, v.dim, v.coalgebra.dim
    cols = []
    for l in range(n):
        for m in range(n):
            # a_{V*}(v_l*) = sum_{k,s} L_k[s, l] b_k (x) v_s* ; ev pairs v_s* with v_m
            col = [F.zero()] * d
            for k in range(d):
                for s in range(n):
                    x = vd.coeffs[k][s, l]
                    if x != 0 and s == m:
                        col[k] = F(col[k] + x)
            cols.append(col)
    return Matrix.from_columns(F, cols, rows=d)


def _intertwines(f: Matrix, src, dst) -> bool:
    pairs = list(zip(src.left, dst.left)) + list(zip(src.right, dst.right))
    return all(b @ f == f @ a for a, b in pairs)


def matrix_coefficients(v: Comodule) -> MatrixCoeffMap:
    """``c_V``, computed by both defining formulas (which must agree) and checked to be a bicomodule map."""
    if v.side != "right":
        raise ValueError("matrix coefficients are defined for right comodules")
    if "mcoeff" in v._cache:
        return v._cache["mcoeff"]
    c = v.coalgebra
    vd = dual_comodule(v)
    m1 = _formula_ev_first(v)
    m2 = _formula_dual_first(v, vd)
    if m1 != m2:
        raise ConventionError("the two matrix-coefficient formulas disagree")
    src = boxtimes(vd, v)
    tgt = regular_bicomodule(c)
    if not _intertwines(m1, src, tgt):
        raise ConventionError("matrix coefficients do not intertwine the bicomodule structures")
    out = MatrixCoeffMap(src, c, GradedMap(src.space, c.space, m1))
    v._cache["mcoeff"] = out
    return out


def image_c(v: Comodule) -> Subspace:
    """Column span of ``c_V`` in ``C``; closure under both coactions is asserted."""
    c = v.coalgebra
    m = matrix_coefficients(v).matrix
    img = Subspace(c.space, c.field, [x for x in m.columns() if any(x)], homogenize=True)
    if not regular_bicomodule(c).is_subcomodule(img):
        raise ConventionError("image of c_V is not a sub-bicomodule")
    return img


def check_ker_perp(v: Comodule, w: Subspace) -> bool:
    """``W^perp ⊠ W ⊆ ker c_V`` for a subcomodule ``W`` of ``V``."""
    if not v.is_subcomodule(w):
        raise ValueError("W is not a subcomodule")
    m = matrix_coefficients(v).matrix
    n = v.dim
    wp = perp_subspace(w)
    for u in wp.basis:
        for x in w.basis:
            vec = kron(Matrix.from_columns(v.field, [u], rows=n), Matrix.from_columns(v.field, [x], rows=n)).column(0)
            if any(m.apply(vec)):
                return False
    return True


def counit_embedding(c: Coalgebra, basis: Sequence) -> GradedMap:
    """``v -> c_V(eps|_V (x) v)`` for a subcomodule ``V`` of ``C``; asserted equal to the inclusion."""
    from .comod import regular_right
    reg = regular_right(c)
    v = reg.sub(basis)
    incl = Matrix.from_columns(c.field, list(basis), rows=c.dim)
    eps_v = [sum(c.counit[i] * b[i] for i in range(c.dim)) for b in basis]
    m = matrix_coefficients(v).matrix
    n = v.dim
    cols = []
    for j in range(n):
        vec = [c.field.zero()] * (n * n)
        for l in range(n):
            vec[l * n + j] = c.field(eps_v[l])
        cols.append(m.apply(vec))
    emb = Matrix.from_columns(c.field, cols, rows=c.dim)
    if emb != incl:
        raise ConventionError("counit factorization does not recover the inclusion")
    return GradedMap(v.space, c.space, emb)


def loewy_length_image(v: Comodule) -> tuple[int, int]:
    """``(ll(V), ll(im c_V))``, the latter as a bicomodule."""
    img = image_c(v)
    sub = regular_bicomodule(v.coalgebra).sub(img.basis)
    return loewy_length(v), loewy_length(sub)


def splitting_of_socle_dual(w: Comodule) -> list[int]:
    """Pivot indices ``p`` of the socle's echelon basis; ``span{v_p*}`` splits ``W* -> L*``."""
    soc = socle_series(w)[1]
    pivots = []
    for vec in soc.basis:
        pivots.append(next(i for i, x in enumerate(vec) if x != 0))
    return pivots


def restricted_image(w: Comodule) -> Matrix:
    """Columns of ``c_W`` on ``L~ (x) W``."""
    m = matrix_coefficients(w).matrix
    n = w.dim
    cols = [m.column(p * n + j) for p in splitting_of_socle_dual(w) for j in range(n)]
    return Matrix.from_columns(w.field, cols, rows=m.rows)


def restricted_injectivity_check(w: Comodule) -> bool:
    """``c_W`` restricted to ``L~ (x) W`` is injective, where ``L = soc W`` must be simple."""
    soc = socle_series(w)[1]
    s = w.sub(soc.basis)
    if len(hom_space(s, s)) != 1:
        raise ValueError("socle is not simple")
    pivots = splitting_of_socle_dual(w)
    return rank(restricted_image(w)) == len(pivots) * w.dim


def matrix_coeff_square(f: Matrix, w: Comodule, v: Comodule) -> bool:
    """``c_V o (id (x) f) = c_W o (f* (x) id)`` on ``V* (x) W`` for a morphism ``f: W -> V``."""
    F = v.field
    lhs = matrix_coefficients(v).matrix @ kron(Matrix.identity(F, v.dim), f)
    rhs = matrix_coefficients(w).matrix @ kron(f.T, Matrix.identity(F, w.dim))
    return lhs == rhs
