from itertools import combinations

from hnt.hamming import GraphParams, hamming_distance, min_distance
from hnt.search import distance3_cliques, search_rep3


def brute_cliques(q):
    params = GraphParams(3, q)
    pool = [v for v in params.vertices()
            if hamming_distance(v, (0, 0, 0)) == 3 and hamming_distance(v, (1, 1, 1)) == 3]
    out = set()
    for k in range(len(pool) + 1):
        for extra in combinations(pool, k):
            if all(hamming_distance(a, b) == 3 for a, b in combinations(extra, 2)):
                out.add(frozenset(((0, 0, 0), (1, 1, 1)) + extra))
    return out


def test_cliques_match_brute_force():
    for q in (3, 4):
        found = {C.words for C in distance3_cliques(q)}
        assert found == brute_cliques(q)
        assert all(min_distance(C) == 3 for C in distance3_cliques(q))


def test_search_q4_finds_no_qualifying_code():
    # S_4 is not almost simple, so nothing qualifies
    r = search_rep3(4)
    assert not r.qualifying and not r.unresolved and r.passed


def test_search_time_budget():
    r = search_rep3(5, time_budget=0.0)
    assert r.skipped and not r.passed
