import pytest
from hypothesis import given, strategies as st

from coradical.coalg import (Algebra, Coalgebra, RadicalError, check_coalgebra, coradical_filtration, dual_algebra,
                             jacobson_radical, primitive_idempotents, radical_powers, wedderburn_split_check)
from coradical.corpus import (gen_divided_power, gen_group_like, gen_matrix_dual, gen_nonsplit, gen_path_coalgebra,
                              gen_perturbed)
from coradical.exactla import GF, QQ, Matrix, same_span


def e(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def test_axioms_pass_on_standard_coalgebras():
    assert check_coalgebra(gen_matrix_dual(2).coalgebra)
    assert check_coalgebra(gen_divided_power(3).coalgebra)


def test_perturbed_matrix_coalgebra_fails_with_witness():
    rep = check_coalgebra(gen_perturbed().coalgebra)
    assert not rep.passed
    assert rep.failures and "basis" in rep.failures[0]


def test_counit_failure_detected():
    c = gen_divided_power(1).coalgebra
    bad = Coalgebra(c.field, c.space, c.comult, [1, 1], c.labels)
    assert not check_coalgebra(bad)


def test_dual_of_divided_power_is_truncated_polynomials():
    a = dual_algebra(gen_divided_power(3).coalgebra)
    for i in range(4):
        for j in range(4):
            want = e(4, i + j) if i + j < 4 else (0,) * 4
            assert a.multiply(e(4, i), e(4, j)) == want
    assert a.unit == e(4, 0)


def test_dual_of_matrix_coalgebra_is_matrix_algebra():
    n = 2
    a = dual_algebra(gen_matrix_dual(n).coalgebra)
    idx = lambda i, j: i * n + j
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    want = e(4, idx(i, l)) if j == k else (0,) * 4
                    assert a.multiply(e(4, idx(i, j)), e(4, idx(k, l))) == want


def test_dual_of_group_likes_is_product_of_fields():
    a = dual_algebra(gen_group_like(3).coalgebra)
    for i in range(3):
        for j in range(3):
            assert a.multiply(e(3, i), e(3, j)) == (e(3, i) if i == j else (0,) * 3)


def test_radical_examples():
    a = dual_algebra(gen_divided_power(3).coalgebra)
    j = jacobson_radical(a)
    assert same_span(QQ, j.basis, [e(4, 1), e(4, 2), e(4, 3)], 4)
    assert jacobson_radical(dual_algebra(gen_matrix_dual(2).coalgebra)).dim == 0
    p = gen_path_coalgebra("a2", 1).coalgebra
    jp = jacobson_radical(dual_algebra(p))
    arrow = p.labels.index("a")
    assert jp.basis == [e(3, arrow)]


def test_radical_powers_dims():
    a = dual_algebra(gen_matrix_dual(2).coalgebra)
    assert [s.dim for s in radical_powers(a, jacobson_radical(a))] == [4, 0]
    a = dual_algebra(gen_divided_power(2).coalgebra)
    assert [s.dim for s in radical_powers(a, jacobson_radical(a))] == [3, 2, 1, 0]
    a = dual_algebra(gen_path_coalgebra("a3", 2).coalgebra)
    assert [s.dim for s in radical_powers(a, jacobson_radical(a))] == [6, 3, 1, 0]


def test_radical_certificate_fails_loudly_in_characteristic_two():
    with pytest.raises(RadicalError):
        jacobson_radical(dual_algebra(gen_matrix_dual(2, GF(2)).coalgebra))


def test_coradical_filtration_examples():
    assert coradical_filtration(gen_matrix_dual(3).coalgebra).dims() == [0, 9]
    f = coradical_filtration(gen_divided_power(3).coalgebra)
    assert f.dims() == [0, 1, 2, 3, 4]
    for i in range(1, 5):
        assert same_span(QQ, f[i].basis, [e(4, k) for k in range(i)], 4)
    p = gen_path_coalgebra("a2", 1).coalgebra
    f = coradical_filtration(p)
    assert f.dims() == [0, 2, 3]
    verts = [p.labels.index(v) for v in ("1", "2")]
    assert same_span(QQ, f[1].basis, [e(3, v) for v in verts], 3)


def _is_complete_orthogonal(a, idems):
    total = a.zero()
    for s, x in enumerate(idems):
        assert a.multiply(x, x) == x
        for t, y in enumerate(idems):
            if s != t:
                assert a.multiply(x, y) == a.zero()
        total = a.add(total, x)
    return total == a.unit


def test_primitive_idempotents():
    a = dual_algebra(gen_group_like(3).coalgebra)
    idems = primitive_idempotents(a)
    assert sorted(idems) == sorted(e(3, i) for i in range(3))
    a = dual_algebra(gen_divided_power(3).coalgebra)
    assert primitive_idempotents(a) == [a.unit]
    p = gen_path_coalgebra("a2", 1).coalgebra
    a = dual_algebra(p)
    idems = primitive_idempotents(a)
    assert len(idems) == 2 and _is_complete_orthogonal(a, idems)
    a = dual_algebra(gen_path_coalgebra("a3", 2).coalgebra)
    assert _is_complete_orthogonal(a, primitive_idempotents(a))


def test_split_check():
    rep = wedderburn_split_check(dual_algebra(gen_matrix_dual(2).coalgebra))
    assert rep.passed and rep.block_sizes == [2]
    rep = wedderburn_split_check(dual_algebra(gen_path_coalgebra("kronecker", 1).coalgebra))
    assert rep.passed and rep.block_sizes == [1, 1]
    rep = wedderburn_split_check(dual_algebra(gen_nonsplit().coalgebra))
    assert not rep.passed and rep.witness is not None


def test_nonsplit_item_is_a_coalgebra_with_zero_radical():
    c = gen_nonsplit().coalgebra
    assert check_coalgebra(c)
    assert jacobson_radical(dual_algebra(c)).dim == 0


def test_algebra_from_matrices():
    F = QQ
    mats = [Matrix.identity(F, 2), Matrix.from_rows(F, [[0, 1], [0, 0]])]
    a = Algebra.from_matrices(F, mats)
    assert a.check()
    assert jacobson_radical(a).dim == 1


@pytest.mark.parametrize("gen,args", [
    (gen_matrix_dual, (3,)), (gen_divided_power, (4,)), (gen_path_coalgebra, ("kronecker", 1)),
    (gen_path_coalgebra, ("loop", 3)), (gen_group_like, (4,)),
])
def test_dual_algebra_axioms_hold(gen, args):
    for F in (QQ, GF(7)):
        c = gen(*args, field=F).coalgebra
        assert check_coalgebra(c)
        assert dual_algebra(c).check()


def test_small_characteristic_refuses_rather_than_guessing():
    # the trace form of k[t]/(t^3) vanishes identically over F_3
    with pytest.raises(RadicalError):
        coradical_filtration(gen_divided_power(2, GF(3)).coalgebra)


@given(st.integers(0, 5), st.sampled_from([QQ, GF(7), GF(11)]))
def test_filtration_length_matches_radical_powers(n, F):
    # trace-form radical is exact once p exceeds the dimension
    c = gen_divided_power(n, F).coalgebra
    a = dual_algebra(c)
    powers = radical_powers(a, jacobson_radical(a))
    f = coradical_filtration(c)
    assert f.length == len(powers) - 1
    assert f.dims()[-1] == c.dim
