"""Code equivalence and brute-force classification of diagonally 2-neighbour
transitive codes at small parameters."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import factorial

import numpy as np

from hnt.analysis import is_diagonally_nt
from hnt.constructions import all_code, diag_full_group, full_aut_group, inj, rep, w_code
from hnt.errors import HntError, LevelError, ParameterError
from hnt.groups import (
    AutElem,
    EnumeratedGroup,
    GroupGens,
    apply_aut,
    enumerate_group,
    perm_identity,
    setwise_stabilizer,
    symmetric_generators,
)
from hnt.hamming import Code, GraphParams, distance_array, hamming_distance, num_profile

ALL_SUBSETS_MAX_VERTICES = 12
SUBGROUP_ORBITS_MAX_ORDER = 10**4
STRATEGIES = ("all-subsets", "subgroup-orbits")


class InconclusiveError(HntError):
    """Equivalence search ran out of budget before deciding."""


# --- equivalence ------------------------------------------------------------

def distance_distribution(code: Code) -> tuple[int, ...]:
    counts = Counter(hamming_distance(a, b) for a, b in combinations(code.sorted_words, 2))
    return tuple(counts[d] for d in range(code.m + 1))


def _column_signature(code: Code, j: int) -> tuple[int, ...]:
    return tuple(sorted(Counter(w[j] for w in code.words).values()))


def _signatures(words, col, prefix_of):
    """Map each symbol of column ``col`` to the multiset of prefixes it follows."""
    sig: dict[int, Counter] = {}
    for w in words:
        sig.setdefault(w[col], Counter())[prefix_of(w)] += 1
    return {a: frozenset(c.items()) for a, c in sig.items()}


def _column_maps(src: dict, dst: dict, q: int):
    """Alphabet permutations sending each occurring symbol of ``src`` to a
    symbol of ``dst`` with the same signature; absent symbols are matched in
    increasing order."""
    classes_src: dict = {}
    classes_dst: dict = {}
    for a in sorted(src):
        classes_src.setdefault(src[a], []).append(a)
    for b in sorted(dst):
        classes_dst.setdefault(dst[b], []).append(b)
    if {k: len(v) for k, v in classes_src.items()} != {k: len(v) for k, v in classes_dst.items()}:
        return
    absent = list(zip([a for a in range(q) if a not in src], [b for b in range(q) if b not in dst]))
    keys = list(classes_src)
    for choice in product(*(permutations(classes_dst[k]) for k in keys)):
        h = [0] * q
        for a, b in absent:
            h[a] = b
        for k, images in zip(keys, choice):
            for a, b in zip(classes_src[k], images):
                h[a] = b
        yield tuple(h)


def _search(C: Code, D: Code, first_only: bool, budget: int):
    """Backtrack over entry permutations and per-entry alphabet maps.

    Yields automorphisms ``x`` with ``C^x = D``.  At each entry the candidate
    maps already agree on every prefix multiset, so a full assignment is an
    equivalence.  Only the action on symbols occurring in each column is
    searched; the rest is fixed canonically.
    """
    m, q = C.m, C.q
    cwords = C.sorted_words
    dwords = D.sorted_words
    csig = [_column_signature(C, j) for j in range(m)]
    dsig = [_column_signature(D, j) for j in range(m)]
    nodes = 0
    for sigma in permutations(range(m)):
        if any(csig[j] != dsig[sigma[j]] for j in range(m)):
            continue
        dst_sigs = [_signatures(dwords, sigma[j], lambda w, j=j: tuple(w[sigma[i]] for i in range(j)))
                    for j in range(m)]
        stack = [(0, [])]
        while stack:
            j, hs = stack.pop()
            if j == m:
                yield AutElem(tuple(hs), tuple(sigma))
                if first_only:
                    return
                continue
            src = _signatures(cwords, j, lambda w: tuple(hs[i][w[i]] for i in range(j)))
            for h in _column_maps(src, dst_sigs[j], q):
                nodes += 1
                if nodes > budget:
                    raise InconclusiveError(f"equivalence search exceeded {budget} nodes")
                stack.append((j + 1, hs + [h]))


def is_equivalent(C: Code, D: Code, budget: int = 10**6) -> AutElem | None:
    """An automorphism of H(m, q) mapping ``C`` onto ``D``, or None."""
    if C.params != D.params:
        raise ParameterError("codes live in different Hamming graphs")
    if len(C) != len(D):
        return None
    if C.words == D.words:
        return AutElem.identity(C.params)
    if distance_distribution(C) != distance_distribution(D):
        return None
    try:
        for x in _search(C, D, True, budget):
            return x
        return None
    except InconclusiveError:
        full = factorial(C.q) ** C.m * factorial(C.m)
        if full > budget:
            raise
        G = enumerate_group(full_aut_group(C.m, C.q), budget)
        target = set(D.words)
        for x in G:
            if {apply_aut(x, w) for w in C.words} == target:
                return x
        return None


def automorphism_group(code: Code, budget: int = 10**6) -> GroupGens:
    """Generators of Aut(C), the setwise stabiliser of ``code`` in Aut(H(m, q))."""
    m, q = code.m, code.q
    e = perm_identity(q)
    gens = []
    for j in range(m):
        present = sorted({w[j] for w in code.words})
        absent = [a for a in range(q) if a not in present]
        for s in symmetric_generators(len(absent)):
            h = list(e)
            for a, b in zip(absent, s):
                h[a] = absent[b]
            gens.append(AutElem(tuple(tuple(h) if i == j else e for i in range(m)), perm_identity(m)))
    H = enumerate_group(GroupGens(code.params, tuple(gens)), budget)
    for x in _search(code, code, False, budget):
        if x not in H:
            gens.append(x)
            H = enumerate_group(GroupGens(code.params, tuple(gens)), budget)
    return GroupGens(code.params, tuple(gens))


# --- classification ---------------------------------------------------------

def _vertex_action(G: EnumeratedGroup) -> np.ndarray:
    """``P[g, v]`` is the index of ``v^g``."""
    return G.code_images(G.params.digits())


def _passes_oracle(params: GraphParams, P: np.ndarray, mask: int):
    """Distance partition of the code ``mask`` and whether its stabiliser in
    the enumerated group is transitive on C_0, C_1 and C_2."""
    n = params.size
    idx = np.array([i for i in range(n) if mask >> i & 1])
    member = np.zeros(n, dtype=bool)
    member[idx] = True
    stab = P[member[P[:, idx]].all(axis=1)]
    code = Code(params, frozenset(params.decode(int(i)) for i in idx))
    dist = distance_array(code)
    if dist.max() < 2:
        return code, False
    for r in range(3):
        cell = np.flatnonzero(dist == r)
        if len(np.unique(stab[:, cell[0]])) != len(cell):
            return code, False
    return code, True


def _canonical_key(code: Code):
    return (len(code), code.sorted_words[0][::-1], [w[::-1] for w in code.sorted_words])


def dedupe_equivalent(codes: list[Code], budget: int = 10**6) -> list[Code]:
    reps: list[Code] = []
    for c in sorted(codes, key=_canonical_key):
        if not any(is_equivalent(c, r, budget) is not None for r in reps):
            reps.append(c)
    return reps


def _subgroups(P: np.ndarray, max_gens: int = 3) -> tuple[list[int], dict]:
    """All subgroups generated by at most ``max_gens`` elements, as bitmasks
    over element indices, plus counts by generator-set size."""
    order = len(P)
    index = {row.tobytes(): k for k, row in enumerate(P)}
    table = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        for b in range(order):
            table[a, b] = index[P[b][P[a]].tobytes()]
    ident = index[np.arange(P.shape[1]).tobytes()]

    def closure(gens) -> int:
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = int(table[a, g])
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return sum(1 << k for k in seen)

    found: dict[int, None] = {}
    counts = {}
    for size in range(0, max_gens + 1):
        for gens in combinations(range(order), size):
            found.setdefault(closure(gens), None)
        counts[size] = len(found)
    # closed under adjoining one element => every subgroup has been found
    closed = True
    for H in list(found):
        elems = [k for k in range(order) if H >> k & 1]
        for g in range(order):
            if not H >> g & 1 and closure(elems + [g]) not in found:
                closed = False
                break
        if not closed:
            break
    return list(found), {"counts": counts, "closed": closed, "table": table}


@dataclass
class Classification:
    m: int
    q: int
    strategy: str
    codes: list[Code]
    candidates: int
    survivors: int
    subgroups: int | None = None
    subgroup_counts: dict = field(default_factory=dict)
    all_subgroups_found: bool | None = None
    notes: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def to_json(self) -> dict:
        return {
            "m": self.m, "q": self.q, "strategy": self.strategy,
            "candidates": self.candidates, "survivors": self.survivors,
            "subgroups": self.subgroups,
            "subgroup_counts": self.subgroup_counts,
            "all_subgroups_found": self.all_subgroups_found,
            "codes": [
                {"size": len(c), "words": [list(w) for w in c.sorted_words],
                 "families": families_of(c)}
                for c in self.codes
            ],
            "notes": self.notes,
        }


def classify_diagonal_2nt(m: int, q: int, strategy: str = "all-subsets",
                          budget: int = 10**6) -> Classification:
    """Codes whose stabiliser in Diag_m(S_q) x| S_m is transitive on C_0, C_1
    and C_2, up to equivalence in Aut(H(m, q)).

    A code is diagonally (X, 2)-neighbour transitive for some X exactly when
    its stabiliser in the diagonal group is such an X, so testing that one
    group decides the question.
    """
    params = GraphParams(m, q)
    if strategy == "all-subsets":
        if params.size > ALL_SUBSETS_MAX_VERTICES:
            raise ParameterError(
                f"all-subsets needs q^m <= {ALL_SUBSETS_MAX_VERTICES}, got {params.size}")
    elif strategy == "subgroup-orbits":
        if factorial(q) * factorial(m) > SUBGROUP_ORBITS_MAX_ORDER:
            raise ParameterError(
                f"subgroup-orbits needs q!*m! <= {SUBGROUP_ORBITS_MAX_ORDER}, "
                f"got {factorial(q) * factorial(m)}")
    else:
        raise ParameterError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")

    G = enumerate_group(diag_full_group(m, q), budget)
    P = _vertex_action(G)
    out = Classification(m, q, strategy, [], 0, 0)
    if strategy == "all-subsets":
        masks = range(1, 1 << params.size)
    else:
        subgroups, info = _subgroups(P)
        out.subgroups = len(subgroups)
        out.subgroup_counts = info["counts"]
        out.all_subgroups_found = info["closed"]
        if info["counts"][2] != info["counts"][3]:
            out.notes.append("subgroup count grew from 2- to 3-element generating sets")
        if not info["closed"]:
            out.notes.append("subgroup list is not closed under adjoining an element")
        cands = set()
        for H in subgroups:
            rows = P[[k for k in range(len(P)) if H >> k & 1]]
            seen = np.zeros(params.size, dtype=bool)
            for v in range(params.size):
                if not seen[v]:
                    orb = np.unique(rows[:, v])
                    seen[orb] = True
                    cands.add(sum(1 << int(i) for i in orb))
        masks = sorted(cands)
    survivors = []
    for mask in masks:
        out.candidates += 1
        code, ok = _passes_oracle(params, P, mask)
        if ok:
            survivors.append(code)
    out.survivors = len(survivors)
    out.codes = dedupe_equivalent(survivors, budget)
    if q >= 3:
        if any(len(c) == 1 for c in survivors):
            out.notes.append("a singleton passed for q >= 3")
        else:
            out.notes.append("singletons rejected: q >= 3 (C_2 has two diagonal orbits)")
    return out


def families_of(code: Code) -> list[str]:
    """Names of the families on the diagonal 2-NT list that contain ``code`` literally."""
    m, q = code.m, code.q
    names = []
    if len(code) == 1 and len(set(code.sorted_words[0])) == 1:
        names.append("singleton")
    if code.words == rep(m, q).words:
        names.append("Rep")
    if m < q and code.words == inj(m, q).words:
        names.append("Inj")
    if q == 2 and m % 2 and m >= 3 and code.words == w_code(m).words:
        names.append("W")
    if m % q == 0:
        target = frozenset([(m // q, q)])
        if all(num_profile(w) == target for w in code.words):
            names.append("All" if code.words == all_code(m // q, q).words else "subset-of-All")
    return names


def diagonal_2nt_candidates(m: int, q: int) -> list[tuple[str, Code]]:
    """Every code the diagonal 2-NT list allows at (m, q), before testing."""
    out = []
    if q == 2:
        out.append(("singleton", Code.from_words([(0,) * m], q)))
    if m == 3 or q == 2:
        out.append(("Rep", rep(m, q)))
    if m == 3 and q > 3:
        out.append(("Inj", inj(3, q)))
    if q == 2 and m % 2 and m >= 3:
        out.append(("W", w_code(m)))
    if (q == 2 or q == m == 3) and m % q == 0:
        words = all_code(m // q, q).sorted_words
        for size in range(1, len(words) + 1):
            for sub in combinations(words, size):
                out.append((f"subset-of-All({size})", Code.from_words(sub, q)))
    return out


def diagonal_2nt_expected(m: int, q: int, budget: int = 10**6) -> list[tuple[str, Code]]:
    """Candidates from the family list that are diagonally 2-NT under their
    own stabiliser, one representative per equivalence class.

    Goes through the generator-level checks in :mod:`hnt.analysis` rather than
    the element tables used by :func:`classify_diagonal_2nt`.
    """
    G = enumerate_group(diag_full_group(m, q), budget)
    passed = []
    for name, code in diagonal_2nt_candidates(m, q):
        try:
            ok = is_diagonally_nt(setwise_stabilizer(G, code), code, 2)
        except LevelError:
            ok = False
        if ok:
            passed.append((name, code))
    reps: list[tuple[str, Code]] = []
    for name, code in passed:
        if not any(is_equivalent(code, c, budget) is not None for _, c in reps):
            reps.append((name, code))
    return reps
