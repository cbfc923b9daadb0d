"""Code families and the concrete automorphism groups used throughout."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from hnt.errors import ParameterError
from hnt.groups import (
    DEFAULT_GROUP_BUDGET,
    AutElem,
    GroupGens,
    Perm,
    enumerate_group,
    kernel_on_entries,
    perm_identity,
    symmetric_generators,
)
from hnt.hamming import Code, GraphParams


# --- codes ------------------------------------------------------------------

def rep(m: int, q: int) -> Code:
    return Code(GraphParams(m, q), frozenset((a,) * m for a in range(q)))


def singleton(m: int, q: int, a: int = 0) -> Code:
    return Code(GraphParams(m, q), frozenset([(a,) * m]))


def complete_code(m: int, q: int) -> Code:
    params = GraphParams(m, q)
    return Code(params, frozenset(params.vertices()))


def inj(m: int, q: int) -> Code:
    if m >= q:
        raise ParameterError(f"Inj(m,q) needs m < q, got m={m}, q={q}")
    return Code(GraphParams(m, q), frozenset(permutations(range(q), m)))


def w_code(m: int) -> Code:
    """Binary words of weight (m-1)/2 or (m+1)/2."""
    if m < 3 or m % 2 == 0:
        raise ParameterError(f"W needs odd m >= 3, got m={m}")
    words = set()
    for w in ((m - 1) // 2, (m + 1) // 2):
        for ones in combinations(range(m), w):
            words.add(tuple(1 if i in ones else 0 for i in range(m)))
    return Code(GraphParams(m, 2), frozenset(words))


def _balanced_words(counts: list[int], length: int):
    if length == 0:
        yield ()
        return
    for a, c in enumerate(counts):
        if c:
            counts[a] -= 1
            for rest in _balanced_words(counts, length - 1):
                yield (a,) + rest
            counts[a] += 1


def all_code(p: int, q: int) -> Code:
    """Words of length p*q in which every symbol occurs exactly p times."""
    if p < 1 or q < 2:
        raise ParameterError(f"All(pq,q) needs p >= 1 and q >= 2, got p={p}, q={q}")
    m = p * q
    return Code(GraphParams(m, q), frozenset(_balanced_words([p] * q, m)))


def prod_code(code: Code, l: int) -> Code:
    if l < 1:
        raise ParameterError("need l >= 1")
    words = frozenset(sum(parts, ()) for parts in product(code.sorted_words, repeat=l))
    return Code(GraphParams(code.m * l, code.q), words)


def rep_l_code(code: Code, l: int) -> Code:
    if l < 1:
        raise ParameterError("need l >= 1")
    return Code(GraphParams(code.m * l, code.q), frozenset(w * l for w in code.words))


@dataclass(frozen=True)
class CodeFamilySpec:
    family: str
    m: int | None = None
    q: int | None = None
    p: int | None = None
    l: int | None = None
    inner: "CodeFamilySpec | Code | None" = None

    def build(self) -> Code:
        f = self.family.lower()
        if f == "rep":
            return rep(self.m, self.q)
        if f == "singleton":
            return singleton(self.m, self.q)
        if f == "complete":
            return complete_code(self.m, self.q)
        if f == "inj":
            return inj(self.m, self.q)
        if f == "w":
            if self.q not in (None, 2):
                raise ParameterError("W is binary")
            return w_code(self.m)
        if f == "all":
            if self.p is None:
                if self.m is None or self.q is None or self.m % self.q:
                    raise ParameterError("All needs p, or m divisible by q")
                return all_code(self.m // self.q, self.q)
            if self.m is not None and self.m != self.p * self.q:
                raise ParameterError(f"All needs m = p*q, got m={self.m}, p={self.p}, q={self.q}")
            return all_code(self.p, self.q)
        if f in ("prod", "repl"):
            if self.inner is None or self.l is None:
                raise ParameterError(f"{self.family} needs an inner code and l")
            inner = self.inner.build() if isinstance(self.inner, CodeFamilySpec) else self.inner
            return prod_code(inner, self.l) if f == "prod" else rep_l_code(inner, self.l)
        raise ParameterError(f"unknown code family {self.family!r}")


# --- groups -----------------------------------------------------------------

def _block_top(perm: Perm, k: int) -> Perm:
    """Permute blocks of ``k`` consecutive entries, keeping order inside blocks."""
    return tuple(perm[i // k] * k + i % k for i in range(len(perm) * k))


def _in_block(h: Perm, block: int, k: int, l: int, q: int) -> tuple[Perm, ...]:
    e = perm_identity(q)
    return tuple(h if i // k == block else e for i in range(k * l))


def top_group(m: int, q: int) -> GroupGens:
    """The top group S_m acting by pure entry permutations."""
    params = GraphParams(m, q)
    return GroupGens(params, tuple(AutElem.pure_top(s, q) for s in symmetric_generators(m)))


def full_aut_group(m: int, q: int) -> GroupGens:
    params = GraphParams(m, q)
    e = perm_identity(q)
    gens = [AutElem.pure_base((h,) + (e,) * (m - 1)) for h in symmetric_generators(q)]
    gens += [AutElem.pure_top(s, q) for s in symmetric_generators(m)]
    return GroupGens(params, tuple(gens))


def diag_full_group(m: int, q: int) -> GroupGens:
    """Diag_m(S_q) x| S_m."""
    params = GraphParams(m, q)
    gens = [AutElem.diagonal(h, m) for h in symmetric_generators(q)]
    gens += [AutElem.pure_top(s, q) for s in symmetric_generators(m)]
    return GroupGens(params, tuple(gens))


def block_diagonal_group(k: int, l: int, q: int) -> GroupGens:
    """Diag_k(S_q)^l x| (S_k wr S_l) on H(k*l, q), blocks of consecutive entries."""
    params = GraphParams(k * l, q)
    gens = [AutElem(_in_block(h, 0, k, l, q), perm_identity(k * l)) for h in symmetric_generators(q)]
    for s in symmetric_generators(k):
        top = tuple(s[i] if i < k else i for i in range(k * l))
        gens.append(AutElem.pure_top(top, q))
    for s in symmetric_generators(l):
        gens.append(AutElem.pure_top(_block_top(s, k), q))
    return GroupGens(params, tuple(gens))


def k2_group(l: int, q: int) -> GroupGens:
    """(Diag_2(S_q))^l x| (S_2 wr S_l) on H(2l, q), blocks {2i, 2i+1}."""
    if l < 2:
        raise ParameterError("need l >= 2")
    return block_diagonal_group(2, l, q)


def kernel_generators(X: GroupGens, budget: int = DEFAULT_GROUP_BUDGET) -> GroupGens:
    return kernel_on_entries(enumerate_group(X, budget)).gens


def product_group(X: GroupGens, l: int, kernel_gens: GroupGens | None = None,
                   budget: int = DEFAULT_GROUP_BUDGET) -> GroupGens:
    """Group on H(k*l, q) generated by the kernel of ``X`` in each block,
    ``X`` acting diagonally on all blocks, and S_l permuting the blocks."""
    k, q = X.params.m, X.params.q
    if kernel_gens is None:
        kernel_gens = kernel_generators(X, budget)
    params = GraphParams(k * l, q)
    gens = []
    for g in kernel_gens:
        if g.is_identity():
            continue
        for b in range(l):
            base = tuple(g.base[i % k] if i // k == b else perm_identity(q) for i in range(k * l))
            gens.append(AutElem(base, perm_identity(k * l)))
    for g in X:
        top = tuple((i // k) * k + g.top[i % k] for i in range(k * l))
        gens.append(AutElem(g.base * l, top))
    for s in symmetric_generators(l):
        gens.append(AutElem.pure_top(_block_top(s, k), q))
    return GroupGens.of(gens, params)


def consecutive_blocks(k: int, l: int) -> list[tuple[int, ...]]:
    return [tuple(range(b * k, (b + 1) * k)) for b in range(l)]


def position_blocks(k: int, l: int) -> list[tuple[int, ...]]:
    """Blocks collecting the same position from every copy."""
    return [tuple(t + b * k for b in range(l)) for t in range(k)]


GROUPS = ("diag", "k2", "full", "top", "block-diag", "product")


def named_group(name: str, m: int | None = None, q: int | None = None, l: int | None = None,
                budget: int = DEFAULT_GROUP_BUDGET) -> GroupGens:
    if name == "diag":
        return diag_full_group(m, q)
    if name == "full":
        return full_aut_group(m, q)
    if name == "top":
        return top_group(m, q)
    if name == "k2":
        return k2_group(l, q)
    if name == "block-diag":
        return block_diagonal_group(m, l, q)
    if name == "product":
        return product_group(diag_full_group(m, q), l, budget=budget)
    raise ParameterError(f"unknown group {name!r}; choose from {', '.join(GROUPS)}")
