"""Exhaustive search over codes of minimum distance at least 3 in H(3, q)."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from hnt.analysis import alphabet_group, neighbour_levels
from hnt.classify import automorphism_group, is_equivalent
from hnt.constructions import rep
from hnt.errors import BudgetError
from hnt.groups import enumerate_group, is_almost_simple, kernel_on_entries, perm_closure
from hnt.hamming import Code, GraphParams, distance_array, hamming_distance


# order of A_5; no almost-simple group is smaller
SMALLEST_ALMOST_SIMPLE = 60


def distance3_cliques(q: int, m: int = 3):
    """Codes in H(m, q) with pairwise distance m containing 0...0 and 1...1."""
    params = GraphParams(m, q)
    base = [(0,) * m, (1,) * m]
    pool = [v for v in params.vertices()
            if all(hamming_distance(v, w) == m for w in base)]
    pool.sort(key=params.encode)

    def extend(chosen, start):
        yield chosen
        for i in range(start, len(pool)):
            v = pool[i]
            if all(hamming_distance(v, w) == m for w in chosen):
                yield from extend(chosen + [v], i + 1)

    for words in extend(list(base), 0):
        yield Code(params, frozenset(words))


@dataclass
class SearchResult:
    q: int
    codes_examined: int = 0
    two_nt: list[Code] = field(default_factory=list)
    qualifying: list[Code] = field(default_factory=list)
    unresolved: list[Code] = field(default_factory=list)
    all_equivalent_to_rep: bool = True
    skipped: bool = False
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        # Rep(3,q) itself qualifies exactly when S_q is almost simple, i.e. q >= 5
        expect_rep = self.q >= 5
        return (not self.skipped and not self.unresolved and self.all_equivalent_to_rep
                and bool(self.qualifying) == expect_rep)


def search_rep3(q: int = 5, time_budget: float = 1800.0, group_budget: int = 10**6) -> SearchResult:
    """Every code with minimum distance 3 in H(3, q) whose full automorphism
    group is 2-neighbour transitive, with non-trivial kernel and almost-simple
    alphabet action, must be equivalent to Rep(3, q).

    Aut(C) is the largest candidate witness, so a code whose Aut(C) is not
    transitive on C_0, C_1, C_2 admits no witness at all.  A kernel of Aut(C)
    that is trivial rules out every subgroup too.  If Aut(C) is 2-NT with a
    kernel but its alphabet action is not almost simple, smaller witnesses
    could still exist unless that action is too small to contain an
    almost-simple group; such codes are reported as unresolved.
    """
    start = time.monotonic()
    out = SearchResult(q)
    target = rep(3, q)
    for code in distance3_cliques(q):
        if time.monotonic() - start > time_budget:
            out.skipped = True
            break
        out.codes_examined += 1
        dist = distance_array(code)
        if dist.max() < 2:
            continue
        aut = automorphism_group(code)
        levels, _ = neighbour_levels(aut, code, 2, dist)
        if not all(lv.transitive for lv in levels):
            continue
        out.two_nt.append(code)
        try:
            kernel = kernel_on_entries(enumerate_group(aut, group_budget))
        except BudgetError:
            out.unresolved.append(code)
            continue
        if kernel.order == 1:
            continue
        alphabet = perm_closure(alphabet_group(aut, 0), q, group_budget)
        if is_almost_simple(alphabet, group_budget):
            out.qualifying.append(code)
            if len(code) != len(target) or is_equivalent(code, target) is None:
                out.all_equivalent_to_rep = False
        elif len(alphabet) >= SMALLEST_ALMOST_SIMPLE:
            out.unresolved.append(code)
    out.seconds = time.monotonic() - start
    return out
