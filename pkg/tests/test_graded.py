import pytest
from hypothesis import given, strategies as st

from coradical.exactla import QQ, Matrix, kron
from coradical.graded import (GradedMap, GradedSpace, Group, Subspace, dual, perp, perp_subspace, picard_twist,
                              right_twist, tensor, tensor_maps, unit_space)

Z2 = Group(("even", "odd"), ((0, 1), (1, 0)))
Z3 = Group.cyclic(3)
Z4 = Group.cyclic(4)


def test_group_checks_and_json():
    assert Group.from_json(Z3.to_json()) == Z3
    assert Z3.inv(1) == 2
    with pytest.raises(ValueError):
        Group(("a", "b"), ((0, 1), (1, 1)))


def test_tensor_examples():
    w = GradedSpace(Z3, (0, 2, 1))
    assert tensor(unit_space(Z3), w).degrees == w.degrees
    odd = GradedSpace(Z2, (1,))
    assert tensor(odd, odd).degrees == (0,)
    assert tensor(GradedSpace(Z3, (0, 1)), GradedSpace(Z3, (1,))).degrees == (1, 2)
    with pytest.raises(ValueError):
        tensor(odd, GradedSpace(Z3, (0,)))


def test_dual_degrees():
    assert dual(GradedSpace(Z2, (1,)), QQ).space.degrees == (1,)
    assert dual(GradedSpace(Z3, (1,)), QQ).space.degrees == (2,)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rigidity_zig_zag(n):
    v = GradedSpace(Z3, tuple(i % 3 for i in range(n)))
    d = dual(v, QQ)
    one = Matrix.identity(QQ, n)
    left = kron(one, d.ev.matrix) @ kron(d.coev.matrix, one)
    right = kron(d.ev.matrix, one) @ kron(one, d.coev.matrix)
    assert left == one and right == one
    # the composites are degree-preserving
    GradedMap(v, v, left)
    GradedMap(d.space, d.space, right)


def test_perp_examples():
    v = GradedSpace(Group.trivial(), (0, 0))
    assert perp_subspace(Subspace.zero(v, QQ)).dim == 2
    assert perp_subspace(Subspace.whole(v, QQ)).dim == 0
    p = perp_subspace(Subspace(v, QQ, [(1, 0)]))
    assert p.basis == [(0, 1)]
    incl = perp(Subspace(v, QQ, [(1, 0)]).inclusion())
    assert incl.matrix.columns() == [(0, 1)]
    with pytest.raises(ValueError):
        perp(GradedMap(v, v, Matrix.zeros(QQ, 2, 2)))


def test_twist_examples():
    v = GradedSpace(Z4, (0, 1))
    assert picard_twist(0, v) == v
    assert picard_twist(1, v).degrees == (1, 2)
    w = GradedSpace(Z2, (0, 1))
    assert picard_twist(1, picard_twist(1, w)) == w
    assert right_twist(w, 1).degrees == (1, 0)


def test_graded_map_rejects_degree_mixing():
    v = GradedSpace(Z2, (0, 1))
    with pytest.raises(ValueError):
        GradedMap(v, v, Matrix.from_rows(QQ, [[0, 1], [0, 0]]))


def test_subspace_operations():
    v = GradedSpace(Z2, (0, 0, 1))
    a = Subspace(v, QQ, [(1, 1, 0)])
    b = Subspace(v, QQ, [(1, 0, 0), (0, 0, 1)])
    assert (a + b).dim == 3
    assert (a & b).dim == 0
    assert a <= a + b
    with pytest.raises(ValueError):
        Subspace(v, QQ, [(1, 0, 1)])
    assert Subspace(v, QQ, [(1, 0, 1)], homogenize=True).dim == 2


# properties ----------------------------------------------------------------

degrees3 = st.lists(st.integers(0, 2), min_size=1, max_size=3)


@given(degrees3, degrees3, degrees3)
def test_tensor_is_strictly_associative(a, b, c):
    u, v, w = (GradedSpace(Z3, tuple(x)) for x in (a, b, c))
    assert tensor(tensor(u, v), w) == tensor(u, tensor(v, w))


@given(degrees3)
def test_double_dual_degrees(a):
    v = GradedSpace(Z3, tuple(a))
    assert dual(dual(v, QQ).space, QQ).space == v


@st.composite
def graded_maps(draw):
    w = GradedSpace(Z3, tuple(draw(degrees3)))
    v = GradedSpace(Z3, tuple(draw(degrees3)))
    rows = [[draw(st.integers(-3, 3)) if v.degrees[i] == w.degrees[j] else 0 for j in range(w.dim)]
            for i in range(v.dim)]
    return GradedMap(w, v, Matrix.from_rows(QQ, rows, cols=w.dim))


@given(graded_maps())
def test_evaluation_naturality_square(f):
    w, v = f.source, f.target
    dw, dv = dual(w, QQ), dual(v, QQ)
    fstar = GradedMap(dv.space, dw.space, f.matrix.transpose())
    lhs = dw.ev @ tensor_maps(fstar, GradedMap.identity(QQ, w))
    rhs = dv.ev @ tensor_maps(GradedMap.identity(QQ, dv.space), f)
    assert lhs == rhs


@given(graded_maps(), graded_maps())
def test_composites_preserve_degree(f, g):
    if g.target == f.source:
        (f @ g).check_degrees()
