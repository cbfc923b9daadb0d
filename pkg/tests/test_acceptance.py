"""Acceptance criteria, one test each.  A summary line per criterion is
printed at the end of the pytest run."""

import time
from contextlib import contextmanager

import pytest

from hnt.analysis import (
    Case,
    is_completely_transitive,
    is_diagonally_nt,
    is_s_neighbour_transitive,
    projection_case,
)
from hnt.classify import classify_diagonal_2nt, families_of, is_equivalent
from hnt.claims import oracle_groups
from hnt.constructions import (
    all_code,
    block_diagonal_group,
    consecutive_blocks,
    diag_full_group,
    inj,
    k2_group,
    position_blocks,
    prod_code,
    product_group,
    rep,
    rep_l_code,
    singleton,
    w_code,
)
from hnt.groups import (
    AutElem,
    apply_aut,
    compose_aut,
    entry_stabilizer_filter,
    enumerate_group,
    is_invariant_partition,
    orbit,
    point_stabilizer,
    setwise_stabilizer,
)
from hnt.hamming import covering_radius, dist_to_code, distance_partition, hamming_distance, num_profile
from hnt.search import search_rep3
from hnt.witnesses import ROWS, verify_table1_row


def criterion(label):
    def mark(fn):
        fn.criterion = label
        return fn
    return mark


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"


def random_vertex(rng, m, q):
    return tuple(int(a) for a in rng.integers(q, size=m))


@criterion("01 Rep(3,q) completely transitive, rho=2, q=5,6,7")
def test_01_rep3_completely_transitive():
    with within(5):
        for q in (5, 6, 7):
            C = rep(3, q)
            assert covering_radius(C) == 2
            assert is_completely_transitive(diag_full_group(3, q), C)


@criterion("02 Prod(Rep(2,5),l) completely transitive, rho=l, l=2,3")
def test_02_prod_rep2_completely_transitive():
    with within(60):
        for l, q in ((2, 5), (3, 5)):
            C = prod_code(rep(2, q), l)
            assert covering_radius(C) == l
            # vertex orbits come from the generators; the group is never enumerated
            assert is_completely_transitive(k2_group(l, q), C)


@criterion("03 five witness rows: mu, nu in C_2 with different Num")
def test_03_witness_rows():
    expected = {"singleton": (3, 3), "rep": (4, 3), "inj": (4, 5), "allq": (4, 4), "allpq": (6, 3)}
    with within(30):
        for row in ROWS:
            r = verify_table1_row(row)
            assert (r.m, r.q) == expected[row]
            assert r.mu_distances and all(d == 2 for d in r.mu_distances + r.nu_distances)
            assert num_profile(r.mu) != num_profile(r.nu)


POSITIVE = [
    # label, code, completely transitive as well
    ("singleton in H(4,2)", singleton(4, 2), False),
    ("Rep(4,2)", rep(4, 2), True),
    ("Rep(5,2)", rep(5, 2), True),
    ("Rep(3,5)", rep(3, 5), True),
    ("Inj(3,4)", inj(3, 4), False),
    ("Inj(3,5)", inj(3, 5), False),
    ("W(5)", w_code(5), True),
    ("All(4,2)", all_code(2, 2), False),
    ("All(6,2)", all_code(3, 2), False),
    ("All(3,3)", all_code(1, 3), True),
]


@criterion("04 listed diagonal codes are 2-NT")
def test_04_positive_cases():
    with within(60):
        for label, C, ct in POSITIVE:
            X = setwise_stabilizer(enumerate_group(diag_full_group(C.m, C.q)), C)
            assert is_diagonally_nt(X, C, 2), label
            if ct:
                assert is_completely_transitive(X, C), label
        assert distance_partition(all_code(1, 3)).cells[2] == rep(3, 3).words


# families on the list that pass the 2-NT test at these parameters
ADMISSIBLE = {
    (2, 2): [singleton(2, 2)],
    (3, 2): [singleton(3, 2)],
    (2, 3): [],
    (3, 3): [rep(3, 3), all_code(1, 3)],
}


@criterion("05 brute-force classification equals the family list")
def test_05_classification():
    with within(600):
        for (m, q), expected in ADMISSIBLE.items():
            strategy = "subgroup-orbits" if (m, q) == (3, 3) else "all-subsets"
            found = classify_diagonal_2nt(m, q, strategy)
            assert len(found.codes) == len(expected), (m, q)
            for c in found.codes:
                assert families_of(c)
                assert sum(is_equivalent(c, e) is not None for e in expected) == 1
            for e in expected:
                assert any(is_equivalent(c, e) is not None for c in found.codes)


@criterion("06 Num preserved by the diagonal group")
def test_06_num_preserved(rng):
    for m, q in ((3, 5), (4, 3), (6, 3)):
        G = enumerate_group(diag_full_group(m, q))
        for _ in range(1000):
            x = G.element(int(rng.integers(G.order)))
            v = random_vertex(rng, m, q)
            assert num_profile(apply_aut(x, v)) == num_profile(v)
    G = enumerate_group(diag_full_group(3, 3))
    for x in G:
        for v in G.params.vertices():
            assert num_profile(apply_aut(x, v)) == num_profile(v)


@criterion("07 group oracles: orbits, orbit-stabiliser, action axioms")
def test_07_group_oracles(rng):
    for name, X in oracle_groups():
        G = enumerate_group(X)
        m, q = G.params.m, G.params.q
        for _ in range(50):
            v = random_vertex(rng, m, q)
            assert orbit(X, v) == {apply_aut(g, v) for g in G}, name
        for i in range(m):
            S = enumerate_group(point_stabilizer(X, i))
            assert S == entry_stabilizer_filter(G, i), name
            assert S.order * len(orbit(X, i, "entry")) == G.order, name
    G = enumerate_group(diag_full_group(3, 5))
    e = AutElem.identity(G.params)
    for _ in range(10**4):
        x = G.element(int(rng.integers(G.order)))
        y = G.element(int(rng.integers(G.order)))
        v, w = random_vertex(rng, 3, 5), random_vertex(rng, 3, 5)
        assert apply_aut(e, v) == v
        assert apply_aut(compose_aut(x, y), v) == apply_aut(y, apply_aut(x, v))
        assert hamming_distance(apply_aut(x, v), apply_aut(x, w)) == hamming_distance(v, w)


@criterion("08 Prod(Rep(3,5),2): two invariant partitions, complete projections")
def test_08_product_example():
    with within(60):
        Xbar = product_group(diag_full_group(3, 5), 2)
        Cbar = prod_code(rep(3, 5), 2)
        r = is_s_neighbour_transitive(Xbar, Cbar, 1)
        assert [lv.transitive for lv in r.levels] == [True, True]
        assert is_invariant_partition(Xbar, consecutive_blocks(3, 2))
        assert is_invariant_partition(Xbar, position_blocks(3, 2))
        cases = projection_case(Cbar, Xbar, position_blocks(3, 2))
        assert [c.case for c in cases] == [Case.COMPLETE_CODE] * 3
        assert all(c.verified for c in cases)


@criterion("09 block-diagonal groups separate mu and nu in C_2")
def test_09_block_witness():
    with within(30):
        for k, l, q in ((3, 2, 5), (2, 2, 5)):
            C = prod_code(rep(k, q), l) if k >= 3 else rep_l_code(rep(k, q), l)
            m = k * l
            mu = (1, 2) + (0,) * (m - 2)
            nu = tuple(1 if i in (0, k) else 0 for i in range(m))
            assert dist_to_code(mu, C) == dist_to_code(nu, C) == 2
            assert nu not in orbit(block_diagonal_group(k, l, q), mu)


@criterion("10 H(3,5) search: qualifying codes are Rep(3,5)")
def test_10_rep3_search(skip_stretch):
    if skip_stretch:
        pytest.skip("stretch search disabled by --skip-stretch / HNT_SKIP_STRETCH=1")
    with within(1800):
        r = search_rep3(5, time_budget=1800)
    assert not r.skipped and not r.unresolved
    assert r.qualifying
    for C in r.qualifying:
        assert is_equivalent(C, rep(3, 5)) is not None
