"""Projections and neighbour-transitivity checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from hnt.errors import BudgetError, LevelError, NotInStabilizerError, ParameterError
from hnt.groups import (
    DEFAULT_GROUP_BUDGET,
    AutElem,
    EnumeratedGroup,
    GroupGens,
    Partition,
    _gens_of,
    entry_perms,
    is_almost_simple,
    is_invariant_partition,
    normalize_partition,
    orbit,
    perm_closure,
    perm_identity,
    phi,
    point_stabilizer,
    set_stabilizer,
    vertex_orbit_labels,
)
from hnt.hamming import (
    DEFAULT_VERTEX_BUDGET,
    Code,
    GraphParams,
    Vertex,
    distance_array,
    min_distance,
)


@dataclass(frozen=True)
class EntryPartition:
    blocks: Partition

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], m: int | None = None) -> "EntryPartition":
        blocks = normalize_partition(blocks)
        if any(not b for b in blocks):
            raise ParameterError("partition blocks must be nonempty")
        flat = [a for b in blocks for a in b]
        if len(flat) != len(set(flat)):
            raise ParameterError("partition blocks overlap")
        if m is not None and sorted(flat) != list(range(m)):
            raise ParameterError(f"blocks do not cover the entries 0..{m - 1}")
        return cls(blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


# --- projections ------------------------------------------------------------

def _entry_list(J: Iterable[int]) -> list[int]:
    J = sorted(set(J))
    if not J:
        raise ParameterError("projection onto an empty set of entries")
    return J


def project_vertex(v: Sequence[int], J: Iterable[int]) -> Vertex:
    J = _entry_list(J)
    if J[-1] >= len(v):
        raise ParameterError(f"entry {J[-1]} out of range for length {len(v)}")
    return tuple(v[j] for j in J)


def project_code(code: Code, J: Iterable[int]) -> Code:
    J = _entry_list(J)
    if J[-1] >= code.m:
        raise ParameterError(f"entry {J[-1]} out of range for length {code.m}")
    return Code(GraphParams(len(J), code.q), frozenset(project_vertex(w, J) for w in code.words))


def chi(x: AutElem, J: Iterable[int]) -> AutElem:
    """Restriction of ``x`` to a set of entries it stabilises."""
    J = _entry_list(J)
    pos = {j: t for t, j in enumerate(J)}
    if any(x.top[j] not in pos for j in J):
        raise NotInStabilizerError(f"{x} does not stabilise the entries {J}")
    return AutElem(tuple(x.base[j] for j in J), tuple(pos[x.top[j]] for j in J))


def chi_group(X, J: Iterable[int]) -> GroupGens:
    """Generators of the restriction of the stabiliser ``X_J`` to ``J``.

    For an enumerated group the whole image set is returned; for generators
    the stabiliser comes from Schreier generators.
    """
    J = _entry_list(J)
    params = GraphParams(len(J), _gens_of(X)[0].q)
    if isinstance(X, EnumeratedGroup):
        mask = np.isin(X.top[:, J], J).all(axis=1)
        sub = X.subgroup(mask)
        images = dict.fromkeys(chi(x, J) for x in sub)
    else:
        images = dict.fromkeys(chi(x, J) for x in set_stabilizer(X, J))
    return GroupGens(params, tuple(images))


# --- neighbour transitivity -------------------------------------------------

@dataclass
class LevelVerdict:
    r: int
    size: int
    transitive: bool


@dataclass
class NtReport:
    m: int
    q: int
    code_size: int
    delta: int | None
    rho: int
    s: int
    levels: list[LevelVerdict] = field(default_factory=list)
    diagonal: bool = False
    entry_transitive: bool = False
    alphabet_group_order: int | None = None
    almost_simple: bool | None = None

    @property
    def verdict(self) -> bool:
        return all(level.transitive for level in self.levels)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        out = asdict(self)
        del out["s"]
        out["verdict"] = self.verdict
        return out


def is_diagonal_group(X) -> bool:
    return all(g.is_diagonal() for g in _gens_of(X))


def is_entry_transitive(X) -> bool:
    gens = _gens_of(X)
    m = gens[0].m
    return len(orbit(entry_perms(gens), 0, "point")) == m


def alphabet_group(X, i: int = 0) -> list:
    """Generators of the action of the entry stabiliser ``X_i`` on the alphabet."""
    gens = [phi(x, i) for x in point_stabilizer(X, i)]
    return sorted(set(gens)) or [perm_identity(_gens_of(X)[0].q)]


def neighbour_levels(X, code: Code, s: int, distances: np.ndarray | None = None,
                     budget: int = DEFAULT_VERTEX_BUDGET) -> tuple[list[LevelVerdict], int]:
    if distances is None:
        distances = distance_array(code, budget)
    rho = int(distances.max())
    if s > rho:
        raise LevelError(f"level s={s} exceeds covering radius {rho}")
    if s < 0:
        raise ParameterError("level must be nonnegative")
    labels = vertex_orbit_labels(X, budget)
    counts = np.bincount(labels)
    levels = []
    for r in range(s + 1):
        cell = np.flatnonzero(distances == r)
        lab = labels[cell]
        ok = bool((lab == lab[0]).all() and counts[lab[0]] == len(cell))
        levels.append(LevelVerdict(r, len(cell), ok))
    return levels, rho


def is_s_neighbour_transitive(X, code: Code, s: int, budget: int = DEFAULT_VERTEX_BUDGET,
                              group_budget: int = DEFAULT_GROUP_BUDGET) -> NtReport:
    distances = distance_array(code, budget)
    levels, rho = neighbour_levels(X, code, s, distances, budget)
    report = NtReport(
        m=code.m, q=code.q, code_size=len(code),
        delta=min_distance(code) if len(code) > 1 else None,
        rho=rho, s=s, levels=levels,
        diagonal=is_diagonal_group(X),
        entry_transitive=is_entry_transitive(X),
    )
    if report.entry_transitive:
        try:
            A = perm_closure(alphabet_group(X, 0), code.q, group_budget)
            report.alphabet_group_order = len(A)
            report.almost_simple = is_almost_simple(A, group_budget)
        except BudgetError:
            pass
    return report


def is_completely_transitive(X, code: Code, budget: int = DEFAULT_VERTEX_BUDGET) -> bool:
    distances = distance_array(code, budget)
    levels, _ = neighbour_levels(X, code, int(distances.max()), distances, budget)
    return all(level.transitive for level in levels)


def is_diagonally_nt(X, code: Code, s: int, budget: int = DEFAULT_VERTEX_BUDGET) -> bool:
    if not is_diagonal_group(X):
        return False
    levels, _ = neighbour_levels(X, code, s, budget=budget)
    return all(level.transitive for level in levels)


def is_alphabet_almost_simple_nt(X, code: Code, s: int, budget: int = DEFAULT_VERTEX_BUDGET,
                                 group_budget: int = DEFAULT_GROUP_BUDGET) -> bool:
    levels, _ = neighbour_levels(X, code, s, budget=budget)
    if not all(level.transitive for level in levels):
        return False
    if not is_entry_transitive(X):
        return False
    return is_almost_simple(alphabet_group(X, 0), group_budget)


# --- projection cases -------------------------------------------------------

class Case(Enum):
    COMPLETE_CODE = "CompleteCode"
    RADIUS_ONE_NT = "RadiusOneNT"
    TWO_NT = "TwoNT"


@dataclass
class ProjectionCase:
    block: tuple[int, ...]
    case: Case
    delta: int | None
    rho: int
    verified: bool


def projection_case(code: Code, X, partition, budget: int = DEFAULT_VERTEX_BUDGET) -> list[ProjectionCase]:
    """Classify the projection of ``code`` onto each block of an invariant partition.

    The case is read off the projection's covering radius (0, 1, or at least
    2); ``verified`` records whether the accompanying minimum-distance and
    transitivity conditions hold for the restricted group.
    """
    blocks = partition.blocks if isinstance(partition, EntryPartition) else normalize_partition(partition)
    EntryPartition.of(blocks, code.m)
    if not is_invariant_partition(X, blocks):
        raise ParameterError(f"partition {blocks} is not invariant under the entry action")
    out = []
    for J in blocks:
        P = project_code(code, J)
        Y = chi_group(X, J)
        distances = distance_array(P, budget)
        rho = int(distances.max())
        delta = min_distance(P) if len(P) > 1 else None
        if rho == 0:
            levels, _ = neighbour_levels(Y, P, 0, distances, budget)
            case, ok = Case.COMPLETE_CODE, delta in (1, None) and levels[0].transitive
        elif rho == 1:
            levels, _ = neighbour_levels(Y, P, 1, distances, budget)
            case = Case.RADIUS_ONE_NT
            ok = delta in (2, 3) and all(lv.transitive for lv in levels)
        else:
            levels, _ = neighbour_levels(Y, P, 2, distances, budget)
            case, ok = Case.TWO_NT, all(lv.transitive for lv in levels)
        out.append(ProjectionCase(tuple(J), case, delta, rho, ok))
    return out
