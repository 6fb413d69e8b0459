import pytest
from hypothesis import given, settings, strategies as st

from coradical.coalg import Coalgebra
from coradical.comod import (Comodule, boxtimes, composition_multiplicity, composition_multiplicity_idempotent,
                             direct_sum, double_dual, dual_comodule, dual_comodule_oracle, ext1, ext1_radical,
                             hom_dim, is_isomorphic, layer_multiplicities, loewy_length, radical_series,
                             regular_bicomodule, regular_left, regular_right, simple_comodules, socle_bruteforce,
                             socle_series, to_dual_module, twist)
from coradical.corpus import (gen_divided_power, gen_graded_orbit, gen_group_like, gen_matrix_dual,
                              gen_path_coalgebra, gen_super_dual)
from coradical.exactla import GF, QQ, Matrix, same_span
from coradical.graded import GradedSpace, Subspace


def e(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def test_regular_objects_satisfy_axioms(theorem_items):
    for it in theorem_items:
        c = it.coalgebra
        assert regular_right(c).check()
        assert regular_left(c).check()
        assert regular_bicomodule(c).check()


def test_dual_module_action_of_regular_comodule():
    c = gen_divided_power(2).coalgebra
    acts = to_dual_module(regular_right(c))
    # t acts on c_m by c_m -> c_{m-1}
    t = acts[1]
    assert t.apply(e(3, 2)) == e(3, 1) and t.apply(e(3, 0)) == (0, 0, 0)
    # the counit acts as the identity
    assert acts[0] == Matrix.identity(QQ, 3)


def test_one_dimensional_group_like_comodule():
    c = gen_group_like(2).coalgebra
    F = c.field
    v = Comodule(c, "right", GradedSpace(c.group, (0,)), [Matrix.from_rows(F, [[1]]), Matrix.from_rows(F, [[0]])])
    assert v.check()
    assert [m[0, 0] for m in to_dual_module(v)] == [1, 0]


def test_direct_sum_is_block_diagonal():
    c = gen_divided_power(2).coalgebra
    s = simple_comodules(c)[0].comodule
    d = direct_sum(s, regular_right(c))
    assert d.check() and d.dim == 4
    for m in d.coeffs:
        assert all(m[0, j] == 0 for j in range(1, 4)) and all(m[i, 0] == 0 for i in range(1, 4))


def test_socle_series_examples():
    c = gen_matrix_dual(2).coalgebra
    assert socle_series(regular_right(c)).dims() == [0, 4]
    assert socle_series(regular_right(gen_divided_power(2).coalgebra)).dims() == [0, 1, 2, 3]
    assert socle_series(regular_right(gen_path_coalgebra("a2", 1).coalgebra)).dims() == [0, 2, 3]


def test_radical_series_examples():
    assert radical_series(regular_right(gen_matrix_dual(2).coalgebra)).dims() == [4, 0]
    assert radical_series(regular_right(gen_divided_power(2).coalgebra)).dims() == [3, 2, 1, 0]
    from coradical.layers import injective_decomposition
    p = gen_path_coalgebra("a2", 1).coalgebra
    big = [s for s in injective_decomposition(p) if s.comodule.dim == 2]
    assert len(big) == 1
    assert radical_series(big[0].comodule).dims()[1] == 1


def test_dual_comodule_examples():
    c = gen_path_coalgebra("a3", 2).coalgebra
    v = regular_right(c)
    vd = dual_comodule(v)
    assert vd.side == "left" and vd.check()
    oracle = dual_comodule_oracle(v)
    assert vd.space == oracle.space and vd.coeffs == oracle.coeffs
    back = double_dual(vd)
    assert is_isomorphic(back, v)
    s = simple_comodules(c)
    a, b = s[0].comodule, s[1].comodule
    lhs = dual_comodule(direct_sum(a, b))
    rhs = direct_sum(dual_comodule(a), dual_comodule(b))
    assert lhs.coeffs == rhs.coeffs


def test_group_like_dual():
    c = gen_group_like(2).coalgebra
    for s in simple_comodules(c):
        assert dual_comodule(s.comodule).check()


def test_twist_examples():
    c = gen_super_dual().coalgebra
    s = simple_comodules(c)
    even = next(x for x in s if x.comodule.space.degrees == (0,))
    odd = next(x for x in s if x.comodule.space.degrees == (1,))
    assert twist(0, even.comodule).coeffs == even.comodule.coeffs
    assert is_isomorphic(twist(1, even.comodule), odd.comodule)
    reg = regular_right(c)
    assert socle_series(twist(1, reg)).dims() == socle_series(reg).dims()
    assert is_isomorphic(twist(1, twist(1, reg)), reg)
    with pytest.raises(ValueError):
        twist(GradedSpace(c.group, (0, 1)), reg)


def test_boxtimes_examples():
    c = gen_group_like(1).coalgebra
    l = simple_comodules(c)[0].comodule
    u = boxtimes(dual_comodule(l), l)
    assert u.dim == 1 and u.check() and loewy_length(u) == 1
    c = gen_super_dual().coalgebra
    for s in simple_comodules(c):
        b = boxtimes(dual_comodule(s.comodule), s.comodule)
        assert b.dim == 1 and b.check() and hom_dim(b, b) == 1
    with pytest.raises(ValueError):
        boxtimes(s.comodule, s.comodule)


def test_boxtimes_associates_with_twists():
    c = gen_super_dual().coalgebra
    s = simple_comodules(c)
    w = dual_comodule(s[0].comodule)
    v = s[1].comodule
    lhs = boxtimes(twist(1, w), v)
    rhs = boxtimes(w, twist(1, v))
    assert lhs.space == rhs.space and lhs.left == rhs.left and lhs.right == rhs.right


def test_simple_comodules_examples():
    s = simple_comodules(gen_matrix_dual(3).coalgebra)
    assert [x.dim for x in s] == [3]
    s = simple_comodules(gen_path_coalgebra("a2", 1).coalgebra)
    assert [x.dim for x in s] == [1, 1]
    s = simple_comodules(gen_super_dual().coalgebra)
    assert sorted(x.comodule.space.degrees for x in s) == [(0,), (1,)]
    assert len(simple_comodules(gen_graded_orbit(2).coalgebra)) == 3


def test_simples_are_certified(theorem_items):
    for it in theorem_items:
        simples = simple_comodules(it.coalgebra)
        for a in simples:
            assert hom_dim(a.comodule, a.comodule) == 1
            assert loewy_length(a.comodule) == 1
            for b in simples:
                if a.index < b.index:
                    assert hom_dim(a.comodule, b.comodule) == 0


def test_composition_multiplicity_examples():
    p = gen_path_coalgebra("a2", 1).coalgebra
    reg = regular_right(p)
    s = simple_comodules(p)
    counts = sorted(composition_multiplicity(reg, x) for x in s)
    assert counts == [1, 2]
    for x in s:
        assert composition_multiplicity(x.comodule, x) == 1
        assert composition_multiplicity(direct_sum(reg, x.comodule), x) == composition_multiplicity(reg, x) + 1
        assert composition_multiplicity_idempotent(reg, x) == composition_multiplicity(reg, x)


def test_multiplicity_routes_agree(theorem_items):
    for it in theorem_items:
        c = it.coalgebra
        reg = regular_right(c)
        for s in simple_comodules(c):
            assert composition_multiplicity_idempotent(reg, s) == sum(layer_multiplicities(reg, s.comodule))


def test_ext1_examples():
    s = simple_comodules(gen_matrix_dual(2).coalgebra)
    assert ext1(s[0], s[0]) == 0
    p = gen_path_coalgebra("a2", 1).coalgebra
    s = simple_comodules(p)
    table = [[ext1(a, b) for b in s] for a in s]
    assert sorted(x for row in table for x in row) == [0, 0, 0, 1]
    d = simple_comodules(gen_divided_power(2).coalgebra)
    assert ext1(d[0], d[0]) == 1
    k = simple_comodules(gen_path_coalgebra("kronecker", 1).coalgebra)
    assert max(ext1(a, b) for a in k for b in k) == 2


def test_ext1_routes_agree(theorem_items):
    for it in theorem_items:
        s = simple_comodules(it.coalgebra)
        for a in s:
            for b in s:
                assert ext1(a, b) == ext1_radical(a, b)


def test_hom_space_examples():
    c = gen_divided_power(2).coalgebra
    reg = regular_right(c)
    assert hom_dim(reg, reg) == 3
    s = simple_comodules(gen_path_coalgebra("a2", 1).coalgebra)
    assert hom_dim(s[0].comodule, s[1].comodule) == 0


def test_socle_bruteforce_examples():
    c = gen_matrix_dual(2).coalgebra
    assert socle_bruteforce(regular_right(c)).dim == 4
    c = gen_divided_power(2).coalgebra
    assert socle_bruteforce(regular_right(c)).basis == [e(3, 0)]
    p = gen_path_coalgebra("a2", 1).coalgebra
    verts = [e(3, p.labels.index(v)) for v in ("1", "2")]
    assert same_span(QQ, socle_bruteforce(regular_right(p)).basis, verts, 3)


def test_bicomodule_socle_is_coradical_filtration(theorem_items):
    from coradical.coalg import coradical_filtration
    for it in theorem_items:
        c = it.coalgebra
        assert socle_series(regular_bicomodule(c)).chain == coradical_filtration(c).chain


def test_right_loewy_length_bounded_by_bicomodule(theorem_items):
    for it in theorem_items:
        bi = regular_bicomodule(it.coalgebra)
        assert loewy_length(bi.as_right()) <= loewy_length(bi)


def test_prime_field_run():
    c = gen_path_coalgebra("a3", 2, GF(7)).coalgebra
    reg = regular_right(c)
    assert socle_series(reg).dims() == [0, 3, 5, 6]
    assert socle_bruteforce(reg) == socle_series(reg)[1]


def test_twist_preserves_multiplicities_up_to_relabeling():
    from coradical.comod import identify_simple
    c = gen_graded_orbit(2).coalgebra
    simples = simple_comodules(c)
    reg = regular_right(c)
    for g in range(c.group.order):
        t = twist(g, reg)
        assert loewy_length(t) == loewy_length(reg)
        for s in simples:
            image = identify_simple(twist(g, s.comodule), simples)
            assert layer_multiplicities(t, simples[image].comodule) == layer_multiplicities(reg, s.comodule)


@settings(max_examples=25)
@given(st.integers(0, 4), st.integers(1, 3))
def test_random_subcomodules_are_closed(n, seed):
    import random
    from coradical.comod import submodule_generated
    c = gen_divided_power(n).coalgebra
    reg = regular_right(c)
    rng = random.Random(seed)
    v = tuple(QQ(rng.randint(-2, 2)) for _ in range(c.dim))
    sub = submodule_generated(reg, [v])
    assert reg.is_subcomodule(sub)
    if any(v):
        assert sub.contains([v])
