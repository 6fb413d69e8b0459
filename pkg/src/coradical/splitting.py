"""Decomposing modules into indecomposable summands by Fitting splittings.

A module is handed over as a vector space of dimension ``n`` together with a
spanning set of its endomorphism algebra (matrices commuting with the action).
Endomorphisms of a summand are compressions ``proj @ x @ incl`` of the ambient
ones, so the endomorphism algebra is computed once.

A summand is accepted as indecomposable when its endomorphism algebra modulo
its radical is one-dimensional.  Otherwise an endomorphism ``y`` with an
eigenvalue ``lam`` in the base field and ``0 < rank (y - lam)^d < d`` is
searched for; the generalized eigenspace and its Fitting complement are both
submodules.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

import sympy

from .exactla import FieldSpec, Matrix, image_basis, inverse, kernel_basis, rank, row_reduce_basis, solve

__all__ = ["Summand", "minimal_polynomial", "field_roots", "decompose_module", "local_quotient_dim"]

_X = sympy.Symbol("x")


@dataclass
class Summand:
    incl: Matrix  # n x d
    proj: Matrix  # d x n, proj @ incl = I

    @property
    def dim(self) -> int:
        return self.incl.cols


def minimal_polynomial(m: Matrix) -> list:
    """Monic minimal polynomial, coefficients from the constant term up."""
    F = m.field
    n = m.rows
    powers = [Matrix.identity(F, n)]
    while True:
        nxt = powers[-1] @ m
        basis = Matrix.from_columns(F, [p.flat() for p in powers], rows=n * n)
        x = solve(basis, nxt.flat())
        if x is not None:
            return [F(-c) for c in x] + [F.one()]
        powers.append(nxt)


def _poly(field: FieldSpec, coeffs: Sequence):
    hi_first = [sympy.Rational(c.numerator, c.denominator) if field.is_rational else int(c) for c in reversed(coeffs)]
    if field.is_rational:
        return sympy.Poly(hi_first, _X, domain="QQ")
    return sympy.Poly(hi_first, _X, modulus=field.characteristic)


def field_roots(field: FieldSpec, coeffs: Sequence) -> list:
    """Distinct roots in the base field, sorted."""
    if len(coeffs) <= 1:
        return []
    roots = _poly(field, coeffs).ground_roots()
    if field.is_rational:
        return sorted(field(sympy.Rational(r).p) / sympy.Rational(r).q for r in roots)
    return sorted(field(int(r)) for r in roots)


def irreducible_factor_degrees(field: FieldSpec, coeffs: Sequence) -> list[int]:
    _, factors = _poly(field, coeffs).factor_list()
    return sorted(f.degree() for f, _ in factors)


def _flat_basis(field: FieldSpec, mats: Sequence[Matrix], d: int) -> list[Matrix]:
    rows = row_reduce_basis(field, [m.flat() for m in mats if not m.is_zero()], d * d)
    return [Matrix(field, d, d, tuple(tuple(r[i * d:(i + 1) * d]) for i in range(d)), _trusted=True) for r in rows]


def local_quotient_dim(field: FieldSpec, mats: Sequence[Matrix]) -> int:
    """``dim E / J(E)`` for the algebra spanned by ``mats`` (which must contain 1)."""
    from .coalg import Algebra, jacobson_radical
    alg = Algebra.from_matrices(field, mats)
    return alg.dim - jacobson_radical(alg).dim


def _candidates(field: FieldSpec, basis: Sequence[Matrix], seed: int, budget: int) -> Iterator[Matrix]:
    yield from basis
    m = len(basis)
    for i in range(m):
        for j in range(m):
            if i != j:
                yield basis[i] @ basis[j]
    for i in range(m):
        for j in range(i + 1, m):
            yield basis[i] + basis[j]
            yield basis[i] - basis[j]
    rng = random.Random(seed)
    for _ in range(budget):
        acc = basis[0].scale(0)
        for b in basis:
            c = rng.randint(-3, 3)
            if c:
                acc = acc + b.scale(c)
        yield acc


def _split_with(y: Matrix) -> tuple[list, list] | None:
    F = y.field
    d = y.rows
    roots = field_roots(F, minimal_polynomial(y))
    for lam in roots:
        z = (y - Matrix.identity(F, d).scale(lam)).power(d)
        r = rank(z)
        if 0 < r < d:
            return kernel_basis(z), image_basis(z)
    return None


def _non_split_witness(field: FieldSpec, basis: Sequence[Matrix]):
    for b in basis:
        mp = minimal_polynomial(b)
        if any(deg > 1 for deg in irreducible_factor_degrees(field, mp)):
            commutes = all(b @ x == x @ b for x in basis)
            if commutes:
                return b, mp
    return None


def decompose_module(field: FieldSpec, n: int, endos: Sequence[Matrix], *, seed: int = 0,
                     budget: int = 400) -> list[Summand]:
    """Indecomposable summands of a module with endomorphism algebra spanned by ``endos``."""
    from .coalg import NotSplitError

    endos = list(endos)
    ident = Matrix.identity(field, n)

    def recurse(s: Summand) -> list[Summand]:
        d = s.dim
        if d == 0:
            return []
        local = _flat_basis(field, [s.proj @ x @ s.incl for x in endos] + [Matrix.identity(field, d)], d)
        if local_quotient_dim(field, local) == 1:
            return [s]
        for y in _candidates(field, local, seed, budget):
            parts = _split_with(y)
            if parts is None:
                continue
            k, im = parts
            q = Matrix.from_columns(field, list(k) + list(im), rows=d)
            qi = inverse(q)
            a = len(k)
            s1 = Summand(s.incl @ Matrix.from_columns(field, k, rows=d),
                         qi.submatrix(list(range(a)), list(range(d))) @ s.proj)
            s2 = Summand(s.incl @ Matrix.from_columns(field, im, rows=d),
                         qi.submatrix(list(range(a, d)), list(range(d))) @ s.proj)
            return recurse(s1) + recurse(s2)
        w = _non_split_witness(field, local)
        if w is not None:
            raise NotSplitError(
                f"endomorphism algebra is not split: central element with minimal polynomial "
                f"{_poly(field, w[1]).as_expr()} having an irreducible factor of degree > 1",
                witness=str(_poly(field, w[1]).as_expr()))
        raise NotSplitError("no splitting endomorphism found within the search budget")

    return recurse(Summand(ident, ident))
