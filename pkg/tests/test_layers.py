import pytest

from coradical.comod import hom_dim, regular_right, simple_comodules, socle_series
from coradical.corpus import (GENERATORS, gen_divided_power, gen_graded_orbit, gen_matrix_dual, gen_nonsplit,
                              gen_path_coalgebra, gen_super_dual)
from coradical.layers import (PreconditionError, check_C1, check_C2, check_split, coradical_layer_table,
                              h_generators, injective_decomposition, injective_hull, injective_layer_table,
                              orbit_representatives, verify_main_theorem, verify_socle_filtration_specific,
                              verify_socle_of_C, verify_taft_wilson)


def graded_group_dual():
    return GENERATORS["graded-group-dual"]().coalgebra


def test_C1_examples():
    assert check_C1(gen_path_coalgebra("a3", 2).coalgebra)
    c = gen_super_dual().coalgebra
    rep = check_C1(c)
    assert rep.passed
    assert sorted(rep.details["action"][1]) == [0, 1] and rep.details["action"][1] != [0, 1]
    rep = check_C1(graded_group_dual())
    assert not rep.passed
    assert rep.failures[0]["g"] == "odd"


def test_C2_examples():
    rep = check_C2(gen_matrix_dual(2).coalgebra)
    assert rep.passed and len(rep.details["classes"]) == 1
    rep = check_C2(gen_path_coalgebra("a2", 1).coalgebra)
    assert rep.passed and len(rep.details["classes"]) == 4
    assert not check_C2(gen_nonsplit().coalgebra)
    rep = check_C2(graded_group_dual())
    assert not rep.passed and rep.failures


def test_split_check_reports_witness():
    rep = check_split(gen_nonsplit().coalgebra)
    assert not rep.passed and rep.failures[0]["witness"]
    assert check_split(gen_graded_orbit(2).coalgebra)


def test_orbit_representatives_examples():
    c = gen_path_coalgebra("a3", 2).coalgebra
    assert orbit_representatives(c).reps == [0, 1, 2]
    c = gen_super_dual().coalgebra
    orb = orbit_representatives(c)
    assert len(orb.reps) == 1
    assert simple_comodules(c)[orb.reps[0]].comodule.space.degrees == (0,)
    assert len(orbit_representatives(gen_graded_orbit(2).coalgebra).reps) == 1
    with pytest.raises(PreconditionError):
        orbit_representatives(graded_group_dual())


def test_orbit_coordinates_partition_simples(theorem_items):
    for it in theorem_items:
        c = it.coalgebra
        orb = orbit_representatives(c)
        assert sorted(orb.coords) == [s.index for s in simple_comodules(c)]
        for l, (a, g) in orb.coords.items():
            assert orb.action[g][a] == l


def test_injective_decomposition_examples():
    for n in (1, 2, 3):
        s = injective_decomposition(gen_matrix_dual(n).coalgebra)
        assert [x.comodule.dim for x in s] == [n] * n
    c = gen_divided_power(2).coalgebra
    (only,) = injective_decomposition(c)
    assert only.comodule.dim == 3
    s = injective_decomposition(gen_path_coalgebra("a2", 1).coalgebra)
    assert sorted(x.comodule.dim for x in s) == [1, 2]


def test_injective_summands_have_simple_socles(theorem_items):
    for it in theorem_items:
        c = it.coalgebra
        reg = regular_right(c)
        for s in injective_decomposition(c):
            assert reg.is_subcomodule(s.subspace)
            soc = s.comodule.sub(socle_series(s.comodule)[1].basis)
            assert hom_dim(soc, soc) == 1


def test_injective_hull_socles(theorem_items):
    for it in theorem_items:
        c = it.coalgebra
        for s in simple_comodules(c):
            hull = injective_hull(c, s.index)
            soc = hull.sub(socle_series(hull)[1].basis)
            assert hom_dim(s.comodule, soc) == 1 and soc.dim == s.dim


def test_table_examples():
    c = gen_matrix_dual(2).coalgebra
    assert injective_layer_table(c).rows() == [[1, 0, 0, 1]]
    assert coradical_layer_table(c).rows() == [[1, 0, 0, 1]]
    c = gen_divided_power(2).coalgebra
    want = [[i, 0, 0, 1] for i in (1, 2, 3)]
    assert injective_layer_table(c).rows() == want
    assert coradical_layer_table(c).rows() == want
    c = gen_path_coalgebra("a2", 1).coalgebra
    rows = injective_layer_table(c).rows()
    assert [r for r in rows if r[0] == 1] == [[1, 0, 0, 1], [1, 1, 1, 1]]
    assert len([r for r in rows if r[0] == 2]) == 1 and [r[3] for r in rows if r[0] == 2] == [1]


def test_super_tables_have_off_diagonal_second_layer():
    c = gen_super_dual().coalgebra
    lhs = coradical_layer_table(c)
    assert lhs == injective_layer_table(c)
    second = [r for r in lhs.rows() if r[0] == 2]
    assert second and all(r[1] != r[2] for r in second)


def test_first_layer_is_diagonal(theorem_items):
    for it in theorem_items:
        rows = coradical_layer_table(it.coalgebra, max_layer=1).rows()
        assert all(a == b and n == 1 for i, a, b, n in rows)
        assert len(rows) == len(simple_comodules(it.coalgebra))


def test_h_generators_examples():
    c = gen_divided_power(2).coalgebra
    first = h_generators(c, 1)
    assert [g.comodule.dim for g in first] == [1]
    gens = h_generators(c, 2)
    assert [g.comodule.dim for g in gens if g.layer == 2] == [2]
    p = gen_path_coalgebra("a2", 1).coalgebra
    two = [g for g in h_generators(p, 2) if g.layer == 2]
    assert [g.comodule.dim for g in two] == [2]


def test_verify_main_theorem_examples():
    rep = verify_main_theorem(gen_divided_power(4).coalgebra)
    assert rep.passed and rep.details["loewy_length"] == 5
    rep = verify_main_theorem(gen_matrix_dual(2).coalgebra)
    assert rep.passed and rep.details["entries"] == 1
    with pytest.raises(PreconditionError):
        verify_main_theorem(graded_group_dual())


def test_taft_wilson_examples():
    rep = verify_taft_wilson(gen_matrix_dual(2).coalgebra)
    assert rep.details["layer2"] == [[0]] and rep.passed
    rep = verify_taft_wilson(gen_path_coalgebra("a2", 1).coalgebra)
    assert sum(map(sum, rep.details["layer2"])) == 1
    assert rep.details["matches"] == ["ext1(L',L)"]
    rep = verify_taft_wilson(gen_divided_power(2).coalgebra)
    assert rep.details["layer2"] == [[1]]


def test_theorem_level_checks_on_small_items():
    for c in (gen_path_coalgebra("a3", 2).coalgebra, gen_super_dual().coalgebra):
        assert verify_socle_of_C(c)
        assert verify_socle_filtration_specific(c)


def test_bicomodule_labels_are_unique(theorem_items):
    # each class of simple bicomodules has exactly one label (alpha, L') with alpha an orbit representative
    for it in theorem_items:
        c = it.coalgebra
        reps = set(orbit_representatives(c).reps)
        rep = check_C2(c)
        for cl in rep.details["classes"]:
            assert len([k for k in cl if k[0] in reps]) == 1
        n = len(simple_comodules(c))
        assert len(rep.details["classes"]) == len(reps) * n
