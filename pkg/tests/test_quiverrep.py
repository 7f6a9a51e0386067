import numpy as np
import pytest

from src.algebra.quiverrep import (
    Quiver,
    Representation,
    aut_order,
    direct_sum,
    enumerate_reps,
    hom_basis,
    is_isomorphic,
    orbit_count_defects,
    projective_rep,
    simple_rep,
    subrep_enumerate,
)
from src.utils.errors import BoundError, ContractError, ResourceError
from src.utils.models import ResourceGuards

from tests.conftest import A2, POINT


def test_cyclic_quiver_is_rejected():
    with pytest.raises(ContractError):
        Quiver(2, ((1, 2), (2, 1)))
    with pytest.raises(ContractError):
        Quiver(1, ((1, 1),))
    with pytest.raises(ContractError):
        Quiver(2, ((1, 3),))


def test_representation_shape_contract():
    with pytest.raises(ContractError):
        Representation(A2, 2, (1, 1), [[[1, 1]]])
    with pytest.raises(ContractError):
        Representation(A2, 2, (1, -1))


def test_point_quiver_classes(point_table):
    assert len(point_table) == 3
    assert [point_table.dim_vector(c) for c in point_table.ids()] == [(0,), (1,), (2,)]
    assert [point_table.aut_order(c) for c in point_table.ids()] == [1, 1, 6]
    assert point_table.alias(1) == "S"
    assert point_table.resolve("S⊕S") == 2


def test_a2_small_ids_and_aliases(a2_small):
    assert len(a2_small) == 5
    assert a2_small.aliases() == {0: "0", 1: "S1", 2: "S2", 3: "S1+S2", 4: "P"}
    assert a2_small.info(4).is_indecomposable
    assert a2_small.info(3).decomposition == (1, 2)


def test_a2_caps_two_table(a2_table):
    assert len(a2_table) == 14
    # the only indecomposables of A_2 are S1, S2 and P
    assert sorted(a2_table.alias(c) for c in a2_table.ids() if a2_table.info(c).is_indecomposable) == ["P", "S1", "S2"]
    for cid in a2_table.ids():
        assert a2_table.aut_order(cid) == aut_order(a2_table.representative(cid))


def test_canonical_id_of_direct_sum(a2_table):
    S1, S2 = simple_rep(A2, 2, 1), simple_rep(A2, 2, 2)
    P = projective_rep(A2, 2, 1)
    assert a2_table.canonical_id(direct_sum(P, S2)) == a2_table.resolve("P+S2")
    assert a2_table.canonical_id(direct_sum(S2, S1)) == a2_table.resolve("S1+S2")


def test_canonical_id_outside_caps(a2_small):
    big = direct_sum(simple_rep(A2, 2, 1), simple_rep(A2, 2, 1))
    with pytest.raises(BoundError):
        a2_small.canonical_id(big)
    with pytest.raises(BoundError):
        a2_small.resolve("S1+S1")
    with pytest.raises(ContractError):
        a2_small.resolve("Q7")


def test_isomorphism_under_base_change():
    P = projective_rep(A2, 3, 1)
    changed = P.change_basis([np.array([[2]]), np.array([[2]])])
    assert is_isomorphic(P, changed)
    assert not is_isomorphic(P, direct_sum(simple_rep(A2, 3, 1), simple_rep(A2, 3, 2)))


def test_hom_dimensions():
    P, S1, S2 = projective_rep(A2, 2, 1), simple_rep(A2, 2, 1), simple_rep(A2, 2, 2)
    assert hom_basis(P, S1).dim == 1
    assert hom_basis(S1, P).dim == 0
    assert hom_basis(S2, P).dim == 1


def test_subrepresentations_of_projective():
    P = projective_rep(A2, 2, 1)
    dims = sorted(split.sub.dim_vector for split in subrep_enumerate(P))
    assert dims == [(0, 0), (0, 1), (1, 1)]


def test_enumeration_guard():
    with pytest.raises(ResourceError):
        enumerate_reps(A2, 2, (2, 2), guards=ResourceGuards(max_matrices=10))


def test_point_table_q3(point_table_q3):
    assert [point_table_q3.aut_order(c) for c in point_table_q3.ids()] == [1, 2, 48]
    assert POINT.vertex_count == 1


def _classification(table):
    return [table.dim_vector(c) for c in table.ids()], [table.aut_order(c) for c in table.ids()]


@pytest.mark.parametrize("fixture", ["point_table", "point_table_q3", "a2_small", "a2_table"])
def test_enumerated_tables_pass_the_orbit_count(fixture, request):
    table = request.getfixturevalue(fixture)
    dims, auts = _classification(table)
    assert orbit_count_defects(table.quiver, table.q, table.caps, dims, auts) == []


def test_orbit_count_detects_a_missing_class(a2_small):
    dims, auts = _classification(a2_small)
    defects = orbit_count_defects(A2, 2, (1, 1), dims[:-1], auts[:-1])
    assert defects == ["orbits of dimension (1, 1) cover 1 of 2 points"]


def test_orbit_count_detects_a_wrong_aut_order(point_table):
    dims, auts = _classification(point_table)
    defects = orbit_count_defects(POINT, 2, (2,), dims, [1, 7, 6])
    assert "class 1 has aut order 7, which does not divide |GL| = 1" in defects
    assert "orbits of dimension (1,) cover 0 of 1 points" in defects
