"""Vertices, codes and the Hamming metric on H(m, q).

Vertices are plain tuples of symbols in ``range(q)``; entries are indexed from
0.  A vertex is encoded as the radix-q integer ``sum(v[i] * q**i)``, which is
the index used by every array-valued routine below.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from hnt.errors import BudgetError, ParameterError, UndefinedError

Vertex = tuple[int, ...]
NumProfile = frozenset  # of (multiplicity, number of symbols) pairs

DEFAULT_VERTEX_BUDGET = 10**7
_MAX_VERTICES = 2**62


@dataclass(frozen=True)
class GraphParams:
    m: int
    q: int

    def __post_init__(self):
        if self.m < 1 or self.q < 2:
            raise ParameterError(f"need m >= 1 and q >= 2, got m={self.m}, q={self.q}")
        if self.q**self.m > _MAX_VERTICES:
            raise ParameterError(f"q^m = {self.q}^{self.m} does not fit in 62 bits")

    @property
    def size(self) -> int:
        return self.q**self.m

    @cached_property
    def radix(self) -> np.ndarray:
        return self.q ** np.arange(self.m, dtype=np.int64)

    def check(self, v: Sequence[int]) -> Vertex:
        v = tuple(int(a) for a in v)
        if len(v) != self.m:
            raise ParameterError(f"vertex {v} has length {len(v)}, expected m={self.m}")
        if any(a < 0 or a >= self.q for a in v):
            raise ParameterError(f"vertex {v} has a symbol outside 0..{self.q - 1}")
        return v

    def encode(self, v: Sequence[int]) -> int:
        idx = 0
        for i in reversed(range(self.m)):
            idx = idx * self.q + v[i]
        return idx

    def decode(self, idx: int) -> Vertex:
        out = []
        for _ in range(self.m):
            idx, a = divmod(idx, self.q)
            out.append(a)
        return tuple(out)

    def digits(self, budget: int = DEFAULT_VERTEX_BUDGET) -> np.ndarray:
        """All vertices as an ``(q**m, m)`` array, row ``i`` being vertex ``i``."""
        check_budget(self, budget)
        idx = np.arange(self.size, dtype=np.int64)
        return ((idx[:, None] // self.radix[None, :]) % self.q).astype(np.int64)

    def vertices(self) -> Iterator[Vertex]:
        for v in product(range(self.q), repeat=self.m):
            yield v[::-1]


def check_budget(params: GraphParams, budget: int) -> None:
    if params.size > budget:
        raise BudgetError(f"vertex enumeration of H({params.m},{params.q})", params.size, budget)


@dataclass(frozen=True)
class Code:
    params: GraphParams
    words: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.words:
            raise ParameterError("codes must be nonempty")
        words = frozenset(self.params.check(w) for w in self.words)
        object.__setattr__(self, "words", words)

    @classmethod
    def from_words(cls, words: Iterable[Sequence[int]], q: int, m: int | None = None) -> "Code":
        words = [tuple(w) for w in words]
        if m is None:
            if not words:
                raise ParameterError("codes must be nonempty")
            m = len(words[0])
        return cls(GraphParams(m, q), frozenset(words))

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def q(self) -> int:
        return self.params.q

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.sorted_words)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.words

    @cached_property
    def sorted_words(self) -> list[Vertex]:
        return sorted(self.words, key=self.params.encode)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.array([self.params.encode(w) for w in self.sorted_words], dtype=np.int64)

    def __repr__(self) -> str:
        return f"Code(m={self.m}, q={self.q}, size={len(self)})"


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ParameterError(f"vertices of different lengths {len(a)} and {len(b)}")


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    _same_length(a, b)
    return sum(x != y for x, y in zip(a, b))


def min_distance(code: Code) -> int:
    if len(code) < 2:
        raise UndefinedError("minimum distance undefined for a code with one word")
    words = code.sorted_words
    return min(hamming_distance(a, b) for a, b in combinations(words, 2))


def dist_to_code(v: Sequence[int], code: Code) -> int:
    if len(v) != code.m:
        raise ParameterError(f"vertex length {len(v)} does not match code length {code.m}")
    return min(hamming_distance(v, w) for w in code.words)


def sphere(v: Sequence[int], r: int, q: int) -> set[Vertex]:
    """Vertices of H(len(v), q) at distance exactly ``r`` from ``v``."""
    v = tuple(v)
    m = len(v)
    if r < 0 or r > m:
        return set()
    out = set()
    for entries in combinations(range(m), r):
        choices = [[a for a in range(q) if a != v[i]] for i in entries]
        for new in product(*choices):
            w = list(v)
            for i, a in zip(entries, new):
                w[i] = a
            out.add(tuple(w))
    return out


def sphere_size(m: int, q: int, r: int) -> int:
    return comb(m, r) * (q - 1) ** r if 0 <= r <= m else 0


def distance_array(code: Code, budget: int = DEFAULT_VERTEX_BUDGET) -> np.ndarray:
    """``d(v, C)`` for every vertex index, by multi-source BFS over H(m, q)."""
    params = code.params
    check_budget(params, budget)
    m, q, n = params.m, params.q, params.size
    dist = np.full(n, -1, dtype=np.int16)
    frontier = np.zeros(n, dtype=bool)
    frontier[code.indices] = True
    dist[frontier] = 0
    r = 0
    while True:
        reach = np.zeros(n, dtype=bool)
        for i in range(m):
            f = frontier.reshape(q ** (m - 1 - i), q, q**i)
            hit = f.any(axis=1, keepdims=True)
            reach |= np.broadcast_to(hit, f.shape).reshape(n)
        new = reach & (dist < 0)
        if not new.any():
            return dist
        r += 1
        dist[new] = r
        frontier = new


@dataclass(frozen=True, eq=False)
class DistancePartition:
    code: Code
    distances: np.ndarray  # d(v, C) indexed by vertex encoding

    @property
    def rho(self) -> int:
        return int(self.distances.max())

    @cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(int(c) for c in np.bincount(self.distances, minlength=self.rho + 1))

    def cell_indices(self, r: int) -> np.ndarray:
        return np.flatnonzero(self.distances == r)

    def cell(self, r: int) -> frozenset:
        decode = self.code.params.decode
        return frozenset(decode(int(i)) for i in self.cell_indices(r))

    @property
    def cells(self) -> list[frozenset]:
        return [self.cell(r) for r in range(self.rho + 1)]


def distance_partition(code: Code, budget: int = DEFAULT_VERTEX_BUDGET) -> DistancePartition:
    return DistancePartition(code, distance_array(code, budget))


def covering_radius(code: Code, budget: int = DEFAULT_VERTEX_BUDGET) -> int:
    return int(distance_array(code, budget).max())


def composition(v: Sequence[int]) -> frozenset:
    """Pairs ``(symbol, count)`` for every symbol occurring in ``v``."""
    return frozenset(Counter(v).items())


def num_profile(v: Sequence[int]) -> NumProfile:
    """Pairs ``(p, s)``: exactly ``s`` distinct symbols occur ``p`` times in ``v``."""
    by_mult = Counter(Counter(v).values())
    return frozenset(by_mult.items())


def format_profile(profile: NumProfile) -> str:
    return "{" + ", ".join(f"({p},{s})" for p, s in sorted(profile, reverse=True)) + "}"
