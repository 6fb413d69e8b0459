from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coradical.exactla import (GF, QQ, FieldSpec, Matrix, image_basis, inverse, kernel_basis, kron, rank, rref,
                               same_span, solve, span_rank)


def M(rows, F=QQ):
    return Matrix.from_rows(F, rows)


def test_field_labels_round_trip():
    assert FieldSpec.from_label("q") == QQ
    assert FieldSpec.from_label("fp:7") == GF(7)
    assert GF(7).label() == "fp:7"
    with pytest.raises(ValueError):
        GF(8)
    with pytest.raises(ValueError):
        FieldSpec.from_label("r")


def test_scalar_strings():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    F = GF(5)
    assert F.parse("7 mod 5") == 2
    assert F.format(F(Fraction(1, 2))) == "3 mod 5"


def test_kernel_of_zero_1x1():
    ker = kernel_basis(M([[0]]))
    assert len(ker) == 1 and ker[0][0] != 0


def test_kernel_of_identity_is_empty():
    assert kernel_basis(Matrix.identity(QQ, 3)) == []


def test_kernel_rank_one():
    ker = kernel_basis(M([[1, 2], [2, 4]]))
    assert len(ker) == 1
    assert same_span(QQ, ker, [(-2, 1)], 2)


def test_image_examples():
    assert image_basis(Matrix.zeros(QQ, 2, 3)) == []
    assert same_span(QQ, image_basis(Matrix.identity(QQ, 3)), [(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert same_span(QQ, image_basis(M([[1, 2], [2, 4]])), [(1, 2)], 2)


def test_solve_examples():
    assert solve(Matrix.identity(QQ, 2), (3, -1)) == (3, -1)
    assert solve(M([[1], [0]]), (0, 1)) is None
    assert solve(M([[2]], GF(5)), (3,)) == (4,)


def test_kron_examples():
    assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)
    assert kron(M([[2]]), M([[3]])) == M([[6]])
    swap = kron(M([[0, 1], [1, 0]]), Matrix.identity(QQ, 2))
    assert swap == M([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])


def test_rref_pivots_are_first_nonzero_columns():
    r, piv = rref(M([[0, 2, 4], [0, 1, 3]]))
    assert piv == [1, 2]
    assert r == M([[0, 1, 0], [0, 0, 1]])


def test_inverse():
    a = M([[0, 1, 1], [1, 0, 2], [3, 1, 0]])
    assert a @ inverse(a) == Matrix.identity(QQ, 3)
    with pytest.raises(ValueError):
        inverse(M([[1, 2], [2, 4]]))


# properties ----------------------------------------------------------------

small = st.integers(-3, 3)
fields = st.sampled_from([QQ, GF(2), GF(5), GF(7)])


@st.composite
def matrices(draw, rows=None, cols=None, field=None):
    F = field if field is not None else draw(fields)
    r = rows if rows is not None else draw(st.integers(1, 5))
    c = cols if cols is not None else draw(st.integers(1, 5))
    data = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(F, data)


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    assert span_rank(m.field, ker, m.cols) == len(ker)
    for v in ker:
        assert all(x == 0 for x in m.apply(v))


@given(matrices())
def test_image_has_rank_many_vectors(m):
    img = image_basis(m)
    assert len(img) == rank(m)
    assert span_rank(m.field, img + m.columns(), m.rows) == len(img)


@given(st.data())
def test_kron_mixed_product(data):
    F = data.draw(fields)
    p, q, r, s, t, u = (data.draw(st.integers(1, 3)) for _ in range(6))
    a = data.draw(matrices(p, q, F))
    c = data.draw(matrices(q, r, F))
    b = data.draw(matrices(s, t, F))
    d = data.draw(matrices(t, u, F))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@given(st.data())
def test_solve_is_exact_or_certifies_absence(data):
    m = data.draw(matrices())
    b = tuple(m.field(x) for x in data.draw(st.lists(small, min_size=m.rows, max_size=m.rows)))
    x = solve(m, b)
    if x is None:
        aug = m.hstack(Matrix.from_columns(m.field, [b], rows=m.rows))
        assert rank(aug) == rank(m) + 1
    else:
        assert m.apply(x) == b
