"""Automorphisms of H(m, q) and the group computations built on them.

An automorphism is ``x = h sigma`` with ``h = (h_0, ..., h_{m-1})`` in the base
group S_q^m and ``sigma`` in the top group S_m.  All actions are right
actions: ``v^(xy) = (v^x)^y``.  Permutations are image tuples, ``p[i]`` being
the image of ``i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from hnt.errors import BudgetError, NotInStabilizerError, ParameterError
from hnt.hamming import DEFAULT_VERTEX_BUDGET, GraphParams, Vertex, check_budget

Perm = tuple[int, ...]

DEFAULT_GROUP_BUDGET = 10**6


# --- permutations -----------------------------------------------------------

def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(a: Perm, b: Perm) -> Perm:
    """``a`` then ``b``."""
    return tuple(b[i] for i in a)


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(int(i) for i in p)
    if sorted(p) != list(range(len(p))):
        raise ParameterError(f"{p} is not a permutation")
    if n is not None and len(p) != n:
        raise ParameterError(f"permutation {p} has degree {len(p)}, expected {n}")
    return p


def perm_from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    out = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a] = b
    return check_perm(out, n)


def perm_cycles(p: Perm) -> str:
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def symmetric_generators(n: int) -> list[Perm]:
    """Transposition (0 1) and the n-cycle; empty for n = 1."""
    if n < 2:
        return []
    gens = [perm_from_cycles(n, [0, 1])]
    cyc = perm_from_cycles(n, list(range(n)))
    if cyc not in gens:
        gens.append(cyc)
    return gens


def perm_closure(gens: Iterable[Perm], n: int | None = None,
                 budget: int = DEFAULT_GROUP_BUDGET) -> frozenset:
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ParameterError("need a degree or at least one generator")
        n = len(gens[0])
    e = perm_identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = perm_mul(a, g)
            if b not in seen:
                seen.add(b)
                if len(seen) > budget:
                    raise BudgetError("permutation group enumeration", len(seen), budget)
                queue.append(b)
    return frozenset(seen)


# --- automorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class AutElem:
    base: tuple[Perm, ...]
    top: Perm

    @property
    def m(self) -> int:
        return len(self.top)

    @property
    def q(self) -> int:
        return len(self.base[0])

    @property
    def params(self) -> GraphParams:
        return GraphParams(self.m, self.q)

    @classmethod
    def make(cls, base: Sequence[Sequence[int]], top: Sequence[int]) -> "AutElem":
        top = check_perm(top)
        if len(base) != len(top):
            raise ParameterError(f"{len(base)} alphabet permutations for {len(top)} entries")
        q = len(base[0])
        return cls(tuple(check_perm(h, q) for h in base), top)

    @classmethod
    def identity(cls, params: GraphParams) -> "AutElem":
        e = perm_identity(params.q)
        return cls((e,) * params.m, perm_identity(params.m))

    @classmethod
    def pure_top(cls, sigma: Sequence[int], q: int) -> "AutElem":
        return cls((perm_identity(q),) * len(sigma), tuple(sigma))

    @classmethod
    def pure_base(cls, base: Sequence[Sequence[int]]) -> "AutElem":
        return cls(tuple(tuple(h) for h in base), perm_identity(len(base)))

    @classmethod
    def diagonal(cls, h: Sequence[int], m: int) -> "AutElem":
        return cls((tuple(h),) * m, perm_identity(m))

    def is_identity(self) -> bool:
        return self == AutElem.identity(self.params)

    def is_diagonal(self) -> bool:
        return all(h == self.base[0] for h in self.base)

    def __mul__(self, other: "AutElem") -> "AutElem":
        return compose_aut(self, other)

    def __str__(self) -> str:
        base = ",".join(perm_cycles(h) for h in self.base)
        return f"[{base}]{perm_cycles(self.top)}"


def _same_params(x: AutElem, y: AutElem) -> None:
    if x.m != y.m or x.q != y.q:
        raise ParameterError(f"automorphisms of H({x.m},{x.q}) and H({y.m},{y.q})")


def apply_aut(x: AutElem, v: Sequence[int]) -> Vertex:
    """``v^x``: alphabet maps entrywise, then entry ``j`` moves to ``x.top[j]``."""
    if len(v) != x.m:
        raise ParameterError(f"vertex of length {len(v)} under an automorphism of H({x.m},{x.q})")
    out = [0] * x.m
    for j, (h, a) in enumerate(zip(x.base, v)):
        out[x.top[j]] = h[a]
    return tuple(out)


def compose_aut(x: AutElem, y: AutElem) -> AutElem:
    """``x`` then ``y``."""
    _same_params(x, y)
    base = tuple(tuple(y.base[t][a] for a in h) for h, t in zip(x.base, x.top))
    return AutElem(base, tuple(y.top[t] for t in x.top))


def inverse_aut(x: AutElem) -> AutElem:
    base = [None] * x.m
    for j, h in enumerate(x.base):
        base[x.top[j]] = perm_inv(h)
    return AutElem(tuple(base), perm_inv(x.top))


def mu(x: AutElem) -> Perm:
    return x.top


def phi(x: AutElem, i: int) -> Perm:
    if x.top[i] != i:
        raise NotInStabilizerError(f"{x} does not fix entry {i}")
    return x.base[i]


@dataclass(frozen=True)
class GroupGens:
    params: GraphParams
    gens: tuple[AutElem, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            gens = (AutElem.identity(self.params),)
        for g in gens:
            if g.m != self.params.m or g.q != self.params.q:
                raise ParameterError(f"generator {g} does not act on H({self.params.m},{self.params.q})")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def of(cls, gens: Iterable[AutElem], params: GraphParams | None = None) -> "GroupGens":
        gens = tuple(dict.fromkeys(gens))
        if params is None:
            params = gens[0].params
        return cls(params, gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)


# --- orbits -----------------------------------------------------------------

def _entry_set_action(x, J):
    return frozenset(x.top[j] for j in J)


ACTIONS: dict[str, Callable] = {
    "vertex": apply_aut,
    "entry": lambda x, i: x.top[i],
    "entry_set": _entry_set_action,
    "point": lambda p, a: p[a],
    "pair": lambda p, ab: (p[ab[0]], p[ab[1]]),
}


def _gens_of(X) -> list:
    if isinstance(X, (GroupGens, EnumeratedGroup)):
        return list(X.gens)
    return list(X)


def orbit(X, seed: Hashable, action: str | Callable = "vertex") -> set:
    """Smallest set containing ``seed`` that is closed under the generators."""
    act = ACTIONS[action] if isinstance(action, str) else action
    gens = _gens_of(X)
    seen = {seed}
    queue = deque([seed])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = act(g, a)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def orbit_with_transversal(X, seed: Hashable, action: str | Callable = "entry") -> dict:
    """Map each orbit point ``p`` to an element ``u`` with ``seed^u = p``."""
    act = ACTIONS[action] if isinstance(action, str) else action
    gens = _gens_of(X)
    trans = {seed: AutElem.identity(gens[0].params)}
    queue = deque([seed])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = act(g, a)
            if b not in trans:
                trans[b] = trans[a] * g
                queue.append(b)
    return trans


def is_transitive_on(X, S: Iterable, action: str | Callable = "vertex") -> bool:
    S = set(S)
    if not S:
        raise ParameterError("transitivity is only defined on a nonempty set")
    seed = min(S)
    return orbit(X, seed, action) == S


def stabilizer(X, point: Hashable, action: str | Callable = "entry") -> GroupGens:
    """Schreier generators for the stabiliser of ``point``."""
    act = ACTIONS[action] if isinstance(action, str) else action
    gens = _gens_of(X)
    params = gens[0].params
    trans = orbit_with_transversal(gens, point, act)
    out = {}
    for p, u in trans.items():
        for g in gens:
            s = u * g * inverse_aut(trans[act(g, p)])
            if not s.is_identity():
                out[s] = None
    return GroupGens(params, tuple(out))


def point_stabilizer(X, i: int) -> GroupGens:
    return stabilizer(X, i, "entry")


def set_stabilizer(X, J: Iterable[int]) -> GroupGens:
    return stabilizer(X, frozenset(J), "entry_set")


def vertex_permutations(X, budget: int = DEFAULT_VERTEX_BUDGET) -> list[np.ndarray]:
    """Each generator as a permutation of the vertex indices of H(m, q)."""
    gens = _gens_of(X)
    params = gens[0].params
    digits = params.digits(budget)
    perms = []
    for g in gens:
        out = np.empty_like(digits)
        for j, h in enumerate(g.base):
            out[:, g.top[j]] = np.asarray(h)[digits[:, j]]
        perms.append(out @ params.radix)
    return perms


def vertex_orbit_labels(X, budget: int = DEFAULT_VERTEX_BUDGET) -> np.ndarray:
    """Orbit label of every vertex index (labels are canonical component ids)."""
    gens = _gens_of(X)
    n = gens[0].params.size
    check_budget(gens[0].params, budget)
    perms = vertex_permutations(gens, budget)
    src = np.concatenate([np.arange(n)] * len(perms))
    dst = np.concatenate(perms)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    return labels


# --- enumerated groups ------------------------------------------------------

def _as_arrays(elems: Sequence[AutElem]) -> tuple[np.ndarray, np.ndarray]:
    base = np.array([x.base for x in elems], dtype=np.int16)
    top = np.array([x.top for x in elems], dtype=np.int16)
    return base, top


def _keys(base: np.ndarray, top: np.ndarray) -> np.ndarray:
    flat = np.ascontiguousarray(np.concatenate([top, base.reshape(len(base), -1)], axis=1))
    return flat.view(np.dtype((np.void, flat.shape[1] * flat.itemsize))).ravel()


def _compose_arrays(xb, xt, yb, yt):
    """Row-wise ``x`` then a single element ``y`` given as arrays."""
    zt = yt[xt]
    zb = yb[xt[:, :, None], xb]
    return zb, zt


class EnumeratedGroup:
    """All elements of a group of automorphisms, held as arrays.

    ``base[k, j]`` is the alphabet permutation of element ``k`` at entry ``j``
    and ``top[k]`` its entry permutation.  Rows are sorted, so two enumerations
    of the same group compare equal row by row.
    """

    def __init__(self, params: GraphParams, base: np.ndarray, top: np.ndarray,
                 gens: GroupGens | None = None):
        order = np.lexsort(np.concatenate([top, base.reshape(len(base), -1)], axis=1).T[::-1])
        self.params = params
        self.base = base[order]
        self.top = top[order]
        self._gens = gens

    @property
    def order(self) -> int:
        return len(self.top)

    def __len__(self) -> int:
        return self.order

    def element(self, k: int) -> AutElem:
        return AutElem(tuple(tuple(int(a) for a in h) for h in self.base[k]),
                       tuple(int(t) for t in self.top[k]))

    @cached_property
    def elements(self) -> list[AutElem]:
        return [self.element(k) for k in range(self.order)]

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def _key_index(self) -> dict:
        return {k.tobytes(): i for i, k in enumerate(_keys(self.base, self.top))}

    def __contains__(self, x: AutElem) -> bool:
        b, t = _as_arrays([x])
        return _keys(b, t)[0].tobytes() in self._key_index

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnumeratedGroup):
            return NotImplemented
        return (self.params == other.params and self.order == other.order
                and np.array_equal(self.base, other.base) and np.array_equal(self.top, other.top))

    def __hash__(self):
        return hash((self.params, self.order))

    def __repr__(self) -> str:
        return f"EnumeratedGroup(H({self.params.m},{self.params.q}), order={self.order})"

    @property
    def gens(self) -> GroupGens:
        if self._gens is None:
            self._gens = self._generating_subset()
        return self._gens

    def _generating_subset(self) -> GroupGens:
        chosen: list[AutElem] = []
        inside = EnumeratedGroup(self.params, *_as_arrays([AutElem.identity(self.params)]))
        for k in range(self.order):
            if inside.order == self.order:
                break
            x = self.element(k)
            if x not in inside:
                chosen.append(x)
                inside = enumerate_group(GroupGens(self.params, tuple(chosen)), self.order)
        return GroupGens(self.params, tuple(chosen))

    def subgroup(self, mask: np.ndarray) -> "EnumeratedGroup":
        return EnumeratedGroup(self.params, self.base[mask], self.top[mask])

    def images(self, v: Sequence[int]) -> np.ndarray:
        """``v^x`` for every element, as vertex indices."""
        m = self.params.m
        v = np.asarray(v)
        rows = np.arange(self.order)[:, None]
        vals = self.base[rows, np.arange(m)[None, :], v[None, :]]
        out = np.empty_like(vals)
        out[rows, self.top] = vals
        return out.astype(np.int64) @ self.params.radix

    def code_images(self, words: np.ndarray) -> np.ndarray:
        """Vertex indices of ``w^x``; shape ``(order, len(words))``."""
        words = np.asarray(words)
        m = self.params.m
        n = self.order
        vals = self.base[np.arange(n)[:, None, None], np.arange(m)[None, None, :], words[None, :, :]]
        out = np.empty_like(vals)
        np.put_along_axis(out, np.broadcast_to(self.top[:, None, :], vals.shape), vals, axis=2)
        return out.astype(np.int64) @ self.params.radix

    def orbit_of(self, v: Sequence[int]) -> set:
        decode = self.params.decode
        return {decode(int(i)) for i in np.unique(self.images(v))}


def enumerate_group(X, budget: int = DEFAULT_GROUP_BUDGET) -> EnumeratedGroup:
    """Closure of the generators by breadth-first multiplication."""
    gens = X if isinstance(X, GroupGens) else GroupGens.of(_gens_of(X))
    params = gens.params
    gb, gt = _as_arrays(gens.gens)
    fb, ft = _as_arrays([AutElem.identity(params)])
    seen = {_keys(fb, ft)[0].tobytes()}
    all_b, all_t = [fb], [ft]
    while len(ft):
        new_b, new_t = [], []
        for k in range(len(gt)):
            zb, zt = _compose_arrays(fb, ft, gb[k], gt[k])
            keys = _keys(zb, zt)
            _, first = np.unique(keys, return_index=True)
            keep = [i for i in first if keys[i].tobytes() not in seen]
            if keep:
                keep = np.array(sorted(keep))
                seen.update(keys[i].tobytes() for i in keep)
                new_b.append(zb[keep])
                new_t.append(zt[keep])
            if len(seen) > budget:
                raise BudgetError("group enumeration", len(seen), budget)
        if not new_t:
            break
        fb, ft = np.concatenate(new_b), np.concatenate(new_t)
        all_b.append(fb)
        all_t.append(ft)
    return EnumeratedGroup(params, np.concatenate(all_b), np.concatenate(all_t), gens)


def group_order(X, budget: int = DEFAULT_GROUP_BUDGET) -> int:
    return enumerate_group(X, budget).order


def kernel_on_entries(G: EnumeratedGroup) -> EnumeratedGroup:
    ident = np.arange(G.params.m)
    return G.subgroup((G.top == ident[None, :]).all(axis=1))


def entry_stabilizer_filter(G: EnumeratedGroup, i: int) -> EnumeratedGroup:
    return G.subgroup(G.top[:, i] == i)


def setwise_stabilizer(G: EnumeratedGroup, code) -> EnumeratedGroup:
    member = np.zeros(G.params.size, dtype=bool)
    member[code.indices] = True
    words = np.array(code.sorted_words)
    return G.subgroup(member[G.code_images(words)].all(axis=1))


def is_normal_in(N: EnumeratedGroup, X) -> bool:
    """Closed under conjugation by every generator of ``X``."""
    for g in _gens_of(X):
        gi = inverse_aut(g)
        for x in N:
            if gi * x * g not in N:
                return False
    return True


# --- alphabet permutation groups --------------------------------------------

def is_2_transitive(P: Iterable[Perm], n: int) -> bool:
    if n < 2:
        raise ParameterError("2-transitivity needs at least 2 points")
    P = [tuple(p) for p in P] or [perm_identity(n)]
    return len(orbit(P, (0, 1), "pair")) == n * (n - 1)


def _conj_class(s: Perm, H: Iterable[Perm]) -> set:
    return {perm_mul(perm_mul(perm_inv(h), s), h) for h in H}


def normal_closure(s: Perm, H: frozenset) -> frozenset:
    """Smallest normal subgroup of ``H`` containing ``s``."""
    return perm_closure(_conj_class(s, H), len(s))


def minimal_normal_subgroups(G: Iterable[Perm], budget: int = DEFAULT_GROUP_BUDGET) -> list[frozenset]:
    G = perm_closure(G, budget=budget)
    n = len(next(iter(G)))
    e = perm_identity(n)
    closures = {}
    done = set()
    for s in sorted(G):
        if s == e or s in done:
            continue
        cls = _conj_class(s, G)
        done |= cls
        N = perm_closure(cls, n, budget)
        closures[N] = None
    found = list(closures)
    return [N for N in found if not any(M < N for M in found)]


def _is_abelian(N: frozenset) -> bool:
    elems = sorted(N)
    return all(perm_mul(a, b) == perm_mul(b, a) for a, b in combinations(elems, 2))


def is_simple(N: frozenset) -> bool:
    if len(N) == 1:
        return False
    e = perm_identity(len(next(iter(N))))
    done = set()
    for s in sorted(N):
        if s == e or s in done:
            continue
        cls = _conj_class(s, N)
        done |= cls
        if len(perm_closure(cls, len(s))) != len(N):
            return False
    return True


def is_almost_simple(G: Iterable[Perm], budget: int = DEFAULT_GROUP_BUDGET) -> bool:
    """Unique minimal normal subgroup, and it is nonabelian simple."""
    G = list(G)
    if not G:
        return False
    minimal = minimal_normal_subgroups(G, budget)
    if len(minimal) != 1:
        return False
    N = minimal[0]
    return not _is_abelian(N) and is_simple(N)


# --- block systems ----------------------------------------------------------

Partition = tuple[tuple[int, ...], ...]


def normalize_partition(blocks: Iterable[Iterable[int]]) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def blocks(self) -> Partition:
        out: dict[int, list[int]] = {}
        for a in range(len(self.parent)):
            out.setdefault(self.find(a), []).append(a)
        return normalize_partition(out.values())


def minimal_block_system(perms: Sequence[Perm], n: int, a: int, b: int) -> Partition:
    """Finest invariant partition in which ``a`` and ``b`` share a block."""
    uf = _UnionFind(n)
    uf.union(a, b)
    queue = deque([(a, b)])
    while queue:
        x, y = queue.popleft()
        for p in perms:
            if uf.union(p[x], p[y]):
                queue.append((p[x], p[y]))
    return uf.blocks()


def join_partitions(P: Partition, R: Partition, n: int) -> Partition:
    uf = _UnionFind(n)
    for block in P + R:
        for a in block[1:]:
            uf.union(block[0], a)
    return uf.blocks()


def entry_perms(X) -> list[Perm]:
    return sorted({g.top for g in _gens_of(X)})


def is_invariant_partition(X, blocks: Iterable[Iterable[int]]) -> bool:
    blocks = normalize_partition(blocks)
    as_sets = {frozenset(b) for b in blocks}
    for p in entry_perms(X):
        if any(frozenset(p[a] for a in b) not in as_sets for b in blocks):
            return False
    return True


def invariant_partitions(X) -> list[Partition]:
    """Every block system of the entry action, trivial ones included."""
    perms = entry_perms(X)
    gens = _gens_of(X)
    n = gens[0].m
    if len(orbit(perms or [perm_identity(n)], 0, "point")) != n:
        raise ParameterError("entry action is not transitive")
    systems = {normalize_partition([[a] for a in range(n)]), (tuple(range(n)),)}
    systems.update(minimal_block_system(perms, n, 0, i) for i in range(1, n))
    grew = True
    while grew:
        grew = False
        for P, R in combinations(sorted(systems), 2):
            J = join_partitions(P, R, n)
            if J not in systems:
                systems.add(J)
                grew = True
    return sorted(systems, key=lambda P: (-len(P), P))
