import pytest
from hypothesis import given

from hnt.analysis import (
    Case,
    EntryPartition,
    chi,
    chi_group,
    is_completely_transitive,
    is_diagonally_nt,
    is_s_neighbour_transitive,
    neighbour_levels,
    project_code,
    project_vertex,
    projection_case,
)
from hnt.constructions import (
    all_code,
    consecutive_blocks,
    diag_full_group,
    full_aut_group,
    k2_group,
    position_blocks,
    prod_code,
    product_group,
    rep,
    singleton,
    top_group,
)
from hnt.errors import LevelError, NotInStabilizerError, ParameterError
from hnt.groups import AutElem, apply_aut, enumerate_group, orbit, setwise_stabilizer
from hnt.hamming import GraphParams, distance_partition

from conftest import aut_elems, vertices

P6 = GraphParams(6, 3)
J = (0, 2, 4)


def stabilising(x):
    # rebuild x with a top that keeps {0,2,4} and {1,3,5} setwise
    evens, odds = [0, 2, 4], [1, 3, 5]
    top = [0] * 6
    e = iter(sorted(evens, key=lambda i: x.top[i]))
    o = iter(sorted(odds, key=lambda i: x.top[i]))
    for i in evens:
        top[i] = next(e)
    for i in odds:
        top[i] = next(o)
    return AutElem(x.base, tuple(top))


@given(aut_elems(P6), aut_elems(P6), vertices(P6))
def test_chi_is_homomorphism(x, y, v):
    a, b = stabilising(x), stabilising(y)
    assert chi(a * b, J) == chi(a, J) * chi(b, J)
    assert chi(AutElem.identity(P6), J).is_identity()
    # restriction commutes with projection
    assert project_vertex(apply_aut(a, v), J) == apply_aut(chi(a, J), project_vertex(v, J))


def test_chi_outside_stabiliser():
    x = AutElem.pure_top((1, 0, 2), 2)
    with pytest.raises(NotInStabilizerError):
        chi(x, (0, 2))


def test_chi_group_generators_vs_enumeration():
    X = k2_group(2, 3)
    a = enumerate_group(chi_group(X, (0, 1)))
    b = enumerate_group(chi_group(enumerate_group(X), (0, 1)))
    assert a == b
    assert a.order == 12  # Diag_2(S_3) x S_2


def test_projection():
    C = prod_code(rep(2, 3), 2)
    assert project_code(C, (0, 2)).params == GraphParams(2, 3)
    assert len(project_code(C, (0, 2))) == 9
    with pytest.raises(ParameterError):
        project_code(C, ())
    with pytest.raises(ParameterError):
        project_vertex((0, 1), (5,))


def test_levels_vs_orbits():
    X = diag_full_group(3, 4)
    C = rep(3, 4)
    cells = distance_partition(C).cells
    levels, rho = neighbour_levels(X, C, 2)
    assert rho == 2
    for lv in levels:
        cell = cells[lv.r]
        assert lv.transitive == (orbit(X, min(cell)) == cell)


def test_level_error():
    with pytest.raises(LevelError):
        is_s_neighbour_transitive(diag_full_group(3, 5), rep(3, 5), 3)


def test_report_fields():
    r = is_s_neighbour_transitive(diag_full_group(3, 5), rep(3, 5), 2)
    assert r.verdict and r.diagonal and r.entry_transitive
    assert r.alphabet_group_order == 120 and r.almost_simple
    j = r.to_json()
    assert set(j) == {"m", "q", "code_size", "delta", "rho", "levels", "diagonal",
                      "entry_transitive", "alphabet_group_order", "almost_simple", "verdict"}
    assert set(j["levels"][0]) == {"r", "size", "transitive"}


def test_singleton_delta_undefined():
    r = is_s_neighbour_transitive(top_group(2, 2), singleton(2, 2), 1)
    assert r.delta is None


def test_not_diagonal():
    assert not is_diagonally_nt(full_aut_group(3, 3), rep(3, 3), 2)


def test_top_group_not_nt_on_rep():
    # pure entry permutations fix every codeword of Rep
    assert not is_s_neighbour_transitive(top_group(3, 3), rep(3, 3), 1).verdict


def test_completely_transitive_all33():
    X = setwise_stabilizer(enumerate_group(diag_full_group(3, 3)), all_code(1, 3))
    assert is_completely_transitive(X, all_code(1, 3))


def test_projection_cases_product():
    X = product_group(diag_full_group(3, 5), 2)
    C = prod_code(rep(3, 5), 2)
    by_position = projection_case(C, X, position_blocks(3, 2))
    assert all(c.case is Case.COMPLETE_CODE and c.verified for c in by_position)
    by_copy = projection_case(C, X, consecutive_blocks(3, 2))
    assert all(c.case is Case.TWO_NT and c.verified for c in by_copy)


def test_projection_case_radius_one():
    C = prod_code(rep(2, 3), 2)
    cases = projection_case(C, k2_group(2, 3), consecutive_blocks(2, 2))
    assert all(c.case is Case.RADIUS_ONE_NT and c.delta == 2 and c.verified for c in cases)


def test_projection_requires_invariance():
    with pytest.raises(ParameterError):
        projection_case(rep(4, 3), k2_group(2, 3), [(0, 2), (1, 3)])


def test_entry_partition_validation():
    with pytest.raises(ParameterError):
        EntryPartition.of([(0, 1), (1, 2)], 3)
    with pytest.raises(ParameterError):
        EntryPartition.of([(0, 1)], 3)
    assert len(EntryPartition.of([(2,), (0, 1)], 3)) == 2
