"""Registry of concrete claims about small codes, run as a regression suite."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from typing import Callable

import numpy as np

from hnt.analysis import (
    Case,
    is_completely_transitive,
    is_diagonally_nt,
    is_s_neighbour_transitive,
    projection_case,
)
from hnt.classify import classify_diagonal_2nt, diagonal_2nt_expected, families_of, is_equivalent
from hnt.constructions import (
    all_code,
    consecutive_blocks,
    diag_full_group,
    full_aut_group,
    inj,
    k2_group,
    position_blocks,
    prod_code,
    product_group,
    rep,
    singleton,
    top_group,
    w_code,
)
from hnt.errors import LevelError
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
from hnt.hamming import covering_radius, distance_partition, hamming_distance, num_profile
from hnt.search import search_rep3
from hnt.witnesses import ROWS, SMALLEST, repetition_block_witness, verify_table1_row

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class Claim:
    id: str
    anchor: str
    check: Callable[["Context"], tuple[bool, str]]
    stretch: bool = False


@dataclass
class Context:
    seed: int = 0
    skip_stretch: bool = False

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass
class ClaimResult:
    id: str
    anchor: str
    status: str
    elapsed_ms: float
    detail: str = ""


@dataclass
class ClaimSuiteResult:
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 1 if any(r.status == FAIL for r in self.results) else 0

    def to_json(self) -> list[dict]:
        return [r.__dict__ for r in self.results]


# --- checks -----------------------------------------------------------------

def rep3_completely_transitive(ctx) -> tuple[bool, str]:
    parts = []
    ok = True
    for q in (5, 6, 7):
        C = rep(3, q)
        rho = covering_radius(C)
        ct = is_completely_transitive(diag_full_group(3, q), C)
        ok &= rho == 2 and ct
        parts.append(f"q={q}: rho={rho} ct={ct}")
    return ok, "; ".join(parts)


def prod_rep2_completely_transitive(ctx) -> tuple[bool, str]:
    parts = []
    ok = True
    for l, q in ((2, 5), (3, 5)):
        C = prod_code(rep(2, q), l)
        rho = covering_radius(C)
        ct = is_completely_transitive(k2_group(l, q), C)
        ok &= rho == l and ct
        parts.append(f"l={l},q={q}: rho={rho} ct={ct}")
    return ok, "; ".join(parts)


def _table_row(row):
    def check(ctx):
        m, q, p = SMALLEST[row]
        r = verify_table1_row(row, m, q, p)
        return r.passed, (f"mu={r.mu} nu={r.nu} d={r.mu_distances + r.nu_distances} "
                          f"separated={r.separated}")
    return check


def positive_cases():
    """(label, code, group, level checks) for the diagonal 2-NT positive list."""
    return [
        ("singleton H(4,2)", singleton(4, 2), 4, 2, "2nt"),
        ("Rep(4,2)", rep(4, 2), 4, 2, "ct"),
        ("Rep(5,2)", rep(5, 2), 5, 2, "ct"),
        ("Rep(3,5)", rep(3, 5), 3, 5, "ct"),
        ("Inj(3,4)", inj(3, 4), 3, 4, "2nt"),
        ("Inj(3,5)", inj(3, 5), 3, 5, "2nt"),
        ("W(5)", w_code(5), 5, 2, "ct"),
        ("All(4,2)", all_code(2, 2), 4, 2, "2nt"),
        ("All(6,2)", all_code(3, 2), 6, 2, "2nt"),
        ("All(3,3)", all_code(1, 3), 3, 3, "ct"),
    ]


def diag_2nt_positive(ctx) -> tuple[bool, str]:
    bad = []
    for label, C, m, q, kind in positive_cases():
        X = setwise_stabilizer(enumerate_group(diag_full_group(m, q)), C)
        ok = is_diagonally_nt(X, C, 2)
        if kind == "ct":
            ok = ok and is_completely_transitive(X, C)
        if not ok:
            bad.append(label)
    cells = distance_partition(all_code(1, 3)).cells
    if cells[2] != rep(3, 3).words:
        bad.append("All(3,3) C_2 != Rep(3,3)")
    return not bad, "failed: " + ", ".join(bad) if bad else f"{len(positive_cases())} codes"


CLASSIFICATION_RUNS = ((2, 2, "all-subsets"), (3, 2, "all-subsets"),
                       (2, 3, "all-subsets"), (3, 3, "subgroup-orbits"))


def matches_up_to_equivalence(found, expected) -> bool:
    if len(found) != len(expected):
        return False
    unused = list(expected)
    for c in found:
        hit = next((e for e in unused if len(e) == len(c) and is_equivalent(c, e) is not None), None)
        if hit is None:
            return False
        unused.remove(hit)
    return True


def classification_oracle(ctx) -> tuple[bool, str]:
    parts = []
    ok = True
    for m, q, strategy in CLASSIFICATION_RUNS:
        found = classify_diagonal_2nt(m, q, strategy)
        expected = [c for _, c in diagonal_2nt_expected(m, q)]
        same = matches_up_to_equivalence(found.codes, expected)
        in_list = all(families_of(c) for c in found.codes)
        ok &= same and in_list
        parts.append(f"H({m},{q}): {[families_of(c) for c in found.codes]}")
    return ok, "; ".join(parts)


def num_preserved(ctx) -> tuple[bool, str]:
    rng = ctx.rng()
    failures = 0
    total = 0
    for m, q in ((3, 5), (4, 3), (6, 3)):
        G = enumerate_group(diag_full_group(m, q))
        for _ in range(1000):
            x = G.element(int(rng.integers(G.order)))
            v = tuple(int(a) for a in rng.integers(q, size=m))
            failures += num_profile(apply_aut(x, v)) != num_profile(v)
            total += 1
    G = enumerate_group(diag_full_group(3, 3))
    for x in G:
        for v in G.params.vertices():
            failures += num_profile(apply_aut(x, v)) != num_profile(v)
            total += 1
    return failures == 0, f"{total} pairs, {failures} failures"


def oracle_groups():
    return [
        ("Diag(S5)xS3", diag_full_group(3, 5)),
        ("Diag(S3)xS4", diag_full_group(4, 3)),
        ("Diag(S3)xS6", diag_full_group(6, 3)),
        ("Aut H(2,3)", full_aut_group(2, 3)),
        ("Aut H(3,3)", full_aut_group(3, 3)),
        ("top S4 on H(4,3)", top_group(4, 3)),
        ("k2(2,5)", k2_group(2, 5)),
    ]


def group_oracles(ctx, seeds: int = 50, triples: int = 10**4) -> tuple[bool, str]:
    rng = ctx.rng()
    failures = []
    for name, X in oracle_groups():
        G = enumerate_group(X)
        m, q = G.params.m, G.params.q
        for _ in range(seeds):
            v = tuple(int(a) for a in rng.integers(q, size=m))
            if orbit(X, v) != G.orbit_of(v):
                failures.append(f"{name}: orbit of {v}")
                break
        for i in range(m):
            stab = enumerate_group(point_stabilizer(X, i))
            orb = orbit(X, i, "entry")
            if stab.order * len(orb) != G.order or stab != entry_stabilizer_filter(G, i):
                failures.append(f"{name}: stabiliser of entry {i}")
    G = enumerate_group(diag_full_group(3, 5))
    for _ in range(triples):
        x = G.element(int(rng.integers(G.order)))
        y = G.element(int(rng.integers(G.order)))
        v = tuple(int(a) for a in rng.integers(5, size=3))
        w = tuple(int(a) for a in rng.integers(5, size=3))
        if apply_aut(AutElem.identity(G.params), v) != v:
            failures.append("identity")
        if apply_aut(compose_aut(x, y), v) != apply_aut(y, apply_aut(x, v)):
            failures.append(f"composition {x} {y} {v}")
        if hamming_distance(apply_aut(x, v), apply_aut(x, w)) != hamming_distance(v, w):
            failures.append(f"isometry {x} {v} {w}")
        if failures:
            break
    return not failures, "; ".join(failures[:3]) or f"{len(oracle_groups())} groups"


def product_two_partitions(ctx) -> tuple[bool, str]:
    X = diag_full_group(3, 5)
    Xbar = product_group(X, 2)
    Cbar = prod_code(rep(3, 5), 2)
    report = is_s_neighbour_transitive(Xbar, Cbar, 1)
    J, Jp = consecutive_blocks(3, 2), position_blocks(3, 2)
    invariant = is_invariant_partition(Xbar, J) and is_invariant_partition(Xbar, Jp)
    cases = projection_case(Cbar, Xbar, Jp)
    complete = all(c.case is Case.COMPLETE_CODE and c.verified for c in cases)
    ok = report.verdict and invariant and complete
    return ok, (f"transitive on C,C_1: {report.verdict}; partitions invariant: {invariant}; "
                f"cases: {[c.case.value for c in cases]}")


def repetition_projection_witness(ctx) -> tuple[bool, str]:
    parts = []
    ok = True
    for k, l, q in ((3, 2, 5), (2, 2, 5)):
        w = repetition_block_witness(k, l, q)
        ok &= w.passed
        parts.append(f"{w.code}: mu={w.mu} nu={w.nu} d=({w.mu_distance},{w.nu_distance}) "
                     f"separated={w.separated}")
    return ok, "; ".join(parts)


def rep3_h35_search(ctx) -> tuple[bool, str]:
    r = search_rep3(5)
    return r.passed, (f"{r.codes_examined} codes, {len(r.two_nt)} with 2-NT Aut(C), "
                      f"{len(r.qualifying)} qualifying, all equivalent to Rep(3,5): "
                      f"{r.all_equivalent_to_rep}, unresolved: {len(r.unresolved)}")


CLAIMS = [
    Claim("rep3-completely-transitive",
          "Rep(3,q), q=5,6,7: covering radius 2, completely transitive under Diag_3(S_q)xS_3",
          rep3_completely_transitive),
    Claim("prod-rep2-completely-transitive",
          "Prod(Rep(2,5),l), l=2,3: covering radius l, completely transitive under the k2 group",
          prod_rep2_completely_transitive),
    *[Claim(f"table1-{row}", f"C_2 witnesses with distinct Num profiles, row {row}", _table_row(row))
      for row in ROWS],
    Claim("diag-2nt-positive", "listed diagonal codes are 2-neighbour transitive", diag_2nt_positive),
    Claim("classification-oracle",
          "brute-force diagonal 2-NT codes match the family list at H(2,2), H(3,2), H(2,3), H(3,3)",
          classification_oracle),
    Claim("num-preserved", "Num profile invariant under Diag_m(S_q)xS_m", num_preserved),
    Claim("group-oracles", "orbit BFS = filter, orbit-stabiliser, action axioms", group_oracles),
    Claim("product-two-partitions",
          "Prod(Rep(3,5),2): transitive on C and C_1, two invariant partitions, complete projections",
          product_two_partitions),
    Claim("repetition-projection-witness",
          "block-diagonal groups cannot map mu to nu in C_2", repetition_projection_witness),
    Claim("rep3-h35-search",
          "distance-3 codes in H(3,5) with an alphabet-almost-simple 2-NT group are Rep(3,5)",
          rep3_h35_search, stretch=True),
]


def run_claims(pattern: str | None = None, seed: int = 0, skip_stretch: bool = False,
               progress: Callable[[ClaimResult], None] | None = None) -> ClaimSuiteResult:
    ctx = Context(seed=seed, skip_stretch=skip_stretch)
    out = ClaimSuiteResult()
    for claim in sorted(CLAIMS, key=lambda c: c.id):
        if pattern and not fnmatchcase(claim.id, pattern):
            continue
        start = time.perf_counter()
        if claim.stretch and skip_stretch:
            status, detail = SKIPPED, "skipped by flag"
        else:
            try:
                ok, detail = claim.check(ctx)
                status = PASS if ok else FAIL
            except LevelError as exc:
                status, detail = FAIL, str(exc)
        res = ClaimResult(claim.id, claim.anchor, status,
                          round((time.perf_counter() - start) * 1000, 1), detail)
        out.results.append(res)
        if progress:
            progress(res)
    return out
