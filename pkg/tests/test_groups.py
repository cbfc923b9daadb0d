
import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from hnt.constructions import diag_full_group, full_aut_group, k2_group, top_group
from hnt.errors import BudgetError, NotInStabilizerError, ParameterError
from hnt.groups import (
    AutElem,
    GroupGens,
    apply_aut,
    compose_aut,
    entry_stabilizer_filter,
    enumerate_group,
    invariant_partitions,
    inverse_aut,
    is_2_transitive,
    is_almost_simple,
    is_invariant_partition,
    is_normal_in,
    is_simple,
    kernel_on_entries,
    minimal_normal_subgroups,
    mu,
    normalize_partition,
    orbit,
    orbit_with_transversal,
    perm_closure,
    perm_cycles,
    perm_from_cycles,
    perm_inv,
    perm_mul,
    phi,
    point_stabilizer,
    set_stabilizer,
    symmetric_generators,
    vertex_orbit_labels,
)
from hnt.hamming import GraphParams, hamming_distance

from conftest import aut_elems, perms, small_params, vertices

elem_pairs = small_params.flatmap(
    lambda p: st.tuples(aut_elems(p), aut_elems(p), aut_elems(p), vertices(p), vertices(p)))


# --- action ---------------------------------------------------------------------

@given(elem_pairs)
def test_action_is_right_action(args):
    x, y, _, v, _ = args
    assert apply_aut(compose_aut(x, y), v) == apply_aut(y, apply_aut(x, v))
    assert apply_aut(AutElem.identity(x.params), v) == v


@given(elem_pairs)
def test_composition_associative_and_inverse(args):
    x, y, z, v, _ = args
    assert (x * y) * z == x * (y * z)
    assert (x * inverse_aut(x)).is_identity()
    assert (inverse_aut(x) * x).is_identity()


@given(elem_pairs)
def test_isometry(args):
    x, _, _, v, w = args
    assert hamming_distance(apply_aut(x, v), apply_aut(x, w)) == hamming_distance(v, w)


@given(elem_pairs)
def test_mu_is_homomorphism(args):
    x, y, *_ = args
    assert mu(x * y) == perm_mul(mu(x), mu(y))


@given(elem_pairs)
def test_phi_is_homomorphism_on_stabiliser(args):
    x, y, *_ = args
    # drop the top so both fix entry 0
    a, b = (AutElem(g.base, tuple(range(g.m))) for g in (x, y))
    assert phi(a * b, 0) == perm_mul(phi(a, 0), phi(b, 0))


def test_phi_outside_stabiliser():
    x = AutElem.pure_top((1, 0), 3)
    with pytest.raises(NotInStabilizerError):
        phi(x, 0)


def test_entry_action_matches_vertex_action():
    # moving entry i to entry top[i] carries the symbol along
    x = AutElem.make([[1, 0, 2], [0, 2, 1], [2, 1, 0]], [2, 0, 1])
    v = (0, 1, 2)
    w = apply_aut(x, v)
    for i in range(3):
        assert w[x.top[i]] == x.base[i][v[i]]


# --- permutations ---------------------------------------------------------------

@given(st.integers(1, 6).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_perm_group_axioms(ab):
    a, b = ab
    n = len(a)
    assert perm_mul(a, perm_inv(a)) == tuple(range(n))
    assert perm_from_cycles(n) == tuple(range(n))
    assert len(perm_closure([a, b], n)) % len(perm_closure([a], n)) == 0


@pytest.mark.parametrize("n,order", [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)])
def test_symmetric_generators(n, order):
    assert len(perm_closure(symmetric_generators(n), n)) == order


def test_perm_cycles():
    assert perm_cycles(perm_from_cycles(4, (0, 1, 2))) == "(0 1 2)"


# --- orbits and stabilisers -------------------------------------------------------

GROUPS = [diag_full_group(3, 3), diag_full_group(2, 4), full_aut_group(2, 3), top_group(3, 3),
          k2_group(2, 3)]


@pytest.mark.parametrize("X", GROUPS)
def test_orbit_bfs_equals_filter(X, rng):
    G = enumerate_group(X)
    for _ in range(20):
        v = tuple(int(a) for a in rng.integers(X.params.q, size=X.params.m))
        assert orbit(X, v) == {apply_aut(g, v) for g in G}


@pytest.mark.parametrize("X", GROUPS)
def test_orbit_stabiliser(X):
    G = enumerate_group(X)
    for i in range(X.params.m):
        S = enumerate_group(point_stabilizer(X, i))
        assert S == entry_stabilizer_filter(G, i)
        assert S.order * len(orbit(X, i, "entry")) == G.order
    v = (0,) * X.params.m
    stab = sum(apply_aut(g, v) == v for g in G)
    assert stab * len(orbit(X, v)) == G.order


@pytest.mark.parametrize("X", GROUPS)
def test_transversal(X):
    for p, u in orbit_with_transversal(X, 0).items():
        assert u.top[0] == p


def test_set_stabilizer_filter():
    X = diag_full_group(4, 2)
    G = enumerate_group(X)
    J = (0, 1)
    expected = G.subgroup(np.array([{g.top[0], g.top[1]} == {0, 1} for g in G]))
    assert enumerate_group(set_stabilizer(X, J)) == expected


def test_vertex_orbit_labels_match_orbits():
    X = diag_full_group(3, 3)
    labels = vertex_orbit_labels(X)
    p = X.params
    for v in p.vertices():
        same = {w for w in p.vertices() if labels[p.encode(w)] == labels[p.encode(v)]}
        assert same == orbit(X, v)


@pytest.mark.parametrize("m,q,order", [(3, 5, 720), (2, 3, 12), (4, 3, 144)])
def test_diag_orders(m, q, order):
    assert enumerate_group(diag_full_group(m, q)).order == order


def test_full_aut_order():
    # S_3 wr S_2
    assert enumerate_group(full_aut_group(2, 3)).order == 72


def test_k2_order():
    # (S_5)^2 x| (S_2 wr S_2): 120^2 * 8
    assert enumerate_group(k2_group(2, 5)).order == 115200


def test_budget():
    with pytest.raises(BudgetError):
        enumerate_group(diag_full_group(3, 5), budget=100)


def test_group_contains_and_membership():
    G = enumerate_group(diag_full_group(3, 3))
    assert AutElem.diagonal((1, 2, 0), 3) in G
    assert AutElem.make([[1, 0, 2], [0, 1, 2], [0, 1, 2]], [0, 1, 2]) not in G


def test_kernel_is_normal():
    G = enumerate_group(full_aut_group(2, 3))
    K = kernel_on_entries(G)
    assert K.order == 36
    assert is_normal_in(K, G)


# --- abstract structure -------------------------------------------------------------

def _alt(n):
    return perm_closure([perm_from_cycles(n, (0, 1, 2)), perm_from_cycles(n, tuple(range(n))) if n % 2
                         else perm_from_cycles(n, (1, 2, 3))], n)


def test_almost_simple():
    assert is_almost_simple(perm_closure(symmetric_generators(5), 5))
    assert is_almost_simple(_alt(5))
    assert not is_almost_simple(perm_closure(symmetric_generators(4), 4))
    # AGL(1,5) = C5 x| C4
    agl = perm_closure([perm_from_cycles(5, (0, 1, 2, 3, 4)), (0, 2, 4, 1, 3)], 5)
    assert len(agl) == 20
    assert not is_almost_simple(agl)
    assert not is_almost_simple(perm_closure(symmetric_generators(3), 3))


def test_minimal_normal_subgroups():
    S4 = perm_closure(symmetric_generators(4), 4)
    (V4,) = minimal_normal_subgroups(S4)
    assert len(V4) == 4
    assert not is_simple(V4)
    assert is_simple(_alt(5))


def test_2_transitive():
    assert is_2_transitive(_alt(4), 4)
    cyc = perm_closure([perm_from_cycles(4, (0, 1, 2, 3))], 4)
    assert not is_2_transitive(cyc, 4)


# --- block systems --------------------------------------------------------------------

def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_invariant(X, n):
    return sorted((normalize_partition(P) for P in set_partitions(list(range(n)))
                   if is_invariant_partition(X, P)), key=lambda P: (-len(P), P))


@given(st.integers(2, 6).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_invariant_partitions_vs_all_set_partitions(tops):
    n = len(tops[0])
    X = GroupGens(GraphParams(n, 2), tuple(AutElem.pure_top(t, 2) for t in tops))
    assume(len(orbit(X, 0, "entry")) == n)
    assert invariant_partitions(X) == brute_invariant(X, n)


def test_k2_block_systems():
    # S_2 wr S_2 is dihedral of order 8 on 4 points: {01|23} is its only non-trivial system
    systems = invariant_partitions(k2_group(2, 3))
    assert systems == brute_invariant(k2_group(2, 3), 4)
    assert ((0, 1), (2, 3)) in systems
    assert len(systems) == 3


def test_invariant_partitions_needs_transitivity():
    X = GroupGens(GraphParams(3, 2), (AutElem.pure_top((1, 0, 2), 2),))
    with pytest.raises(ParameterError):
        invariant_partitions(X)
