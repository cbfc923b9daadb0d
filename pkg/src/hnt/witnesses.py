"""Explicit pairs of vertices at distance 2 from a code that no diagonal
automorphism can swap, because their Num profiles differ."""

from __future__ import annotations

from dataclasses import dataclass

from hnt.constructions import (
    all_code,
    block_diagonal_group,
    diag_full_group,
    inj,
    prod_code,
    rep,
    rep_l_code,
    singleton,
)
from hnt.errors import ParameterError
from hnt.groups import orbit
from hnt.hamming import Code, Vertex, dist_to_code, format_profile, num_profile

ROWS = ("singleton", "rep", "inj", "allq", "allpq")

# smallest parameters meeting each row's condition: (m, q, p)
SMALLEST = {
    "singleton": (3, 3, None),
    "rep": (4, 3, None),
    "inj": (4, 5, None),
    "allq": (4, 4, 1),
    "allpq": (6, 3, 2),
}


@dataclass
class WitnessReport:
    row: str
    m: int
    q: int
    p: int | None
    mu: Vertex
    nu: Vertex
    codes: list[str]          # the codes the distances were checked against
    mu_distances: list[int]
    nu_distances: list[int]
    mu_profile: frozenset
    nu_profile: frozenset
    separated: bool | None    # nu outside the diagonal orbit of mu

    @property
    def passed(self) -> bool:
        return (all(d == 2 for d in self.mu_distances + self.nu_distances)
                and self.mu_profile != self.nu_profile
                and self.separated is not False)

    def to_json(self) -> dict:
        return {
            "row": self.row, "m": self.m, "q": self.q, "p": self.p,
            "mu": list(self.mu), "nu": list(self.nu), "codes": self.codes,
            "mu_distances": self.mu_distances, "nu_distances": self.nu_distances,
            "num_mu": format_profile(self.mu_profile), "num_nu": format_profile(self.nu_profile),
            "separated": self.separated, "passed": self.passed,
        }


def _row_vertices(row: str, m: int, q: int, p: int | None):
    """(codes to check against, mu, nu) for one row, symbols 0-based."""
    if row == "singleton":
        if q < 3 or m < 2:
            raise ParameterError("singleton row needs q >= 3 and m >= 2")
        rest = (0,) * (m - 2)
        return [("singleton", singleton(m, q))], (1, 1) + rest, (1, 2) + rest
    if row == "rep":
        if not m > q >= 3:
            raise ParameterError("rep row needs m > q >= 3")
        rest = (0,) * (m - 2)
        return [("Rep", rep(m, q))], (1, 1) + rest, (1, 2) + rest
    if row == "inj":
        if m < 4 or m >= q:
            raise ParameterError("inj row needs 4 <= m < q")
        tail = tuple(range(4, m))
        return [("Inj", inj(m, q))], (0, 0, 0, 3) + tail, (0, 0, 2, 2) + tail
    if row == "allq":
        if q < 4 or m != q:
            raise ParameterError("allq row needs m = q >= 4")
        tail = tuple(range(4, q))
        alpha = tuple(range(q))
        codes = [("All", all_code(1, q)), ("{alpha}", Code.from_words([alpha], q))]
        return codes, (0, 0, 0, 3) + tail, (0, 0, 2, 2) + tail
    if row == "allpq":
        if p is None:
            p = m // q
        if not q > p >= 2 or m != p * q:
            raise ParameterError("allpq row needs q > p >= 2 and m = p*q")
        alpha = tuple(range(q))
        mu_hat = (0, 0, 0) + tuple(range(3, q))
        nu_hat = (0, 0, 2) + tuple(range(3, q))
        codes = [("All", all_code(p, q)), ("{(alpha,...,alpha)}", Code.from_words([alpha * p], q))]
        return codes, mu_hat + alpha * (p - 1), nu_hat * 2 + alpha * (p - 2)
    raise ParameterError(f"unknown row {row!r}; choose from {', '.join(ROWS)}")


def verify_table1_row(row: str, m: int | None = None, q: int | None = None,
                      p: int | None = None, orbit_limit: int = 10**6) -> WitnessReport:
    """Check one row of witnesses against its code(s).

    For the rows about subsets of All, the distances are checked against both
    the full family and the single word assumed to lie in the subset; since
    distance to a code only grows as the code shrinks, equality at both ends
    covers every subset in between.
    """
    if row not in ROWS:
        raise ParameterError(f"unknown row {row!r}; choose from {', '.join(ROWS)}")
    dm, dq, dp = SMALLEST[row]
    m = dm if m is None else m
    q = dq if q is None else q
    if row == "allq":
        m = q
    if row == "allpq" and p is None:
        p = dp if (m, q) == (dm, dq) else m // q
    codes, mu, nu = _row_vertices(row, m, q, p)
    separated = None
    if q**m <= orbit_limit:
        separated = nu not in orbit(diag_full_group(m, q), mu)
    return WitnessReport(
        row=row, m=m, q=q, p=p, mu=mu, nu=nu,
        codes=[name for name, _ in codes],
        mu_distances=[dist_to_code(mu, c) for _, c in codes],
        nu_distances=[dist_to_code(nu, c) for _, c in codes],
        mu_profile=num_profile(mu), nu_profile=num_profile(nu),
        separated=separated,
    )


@dataclass
class BlockWitness:
    k: int
    l: int
    q: int
    code: str
    mu: Vertex
    nu: Vertex
    mu_distance: int
    nu_distance: int
    separated: bool

    @property
    def passed(self) -> bool:
        return self.mu_distance == 2 and self.nu_distance == 2 and self.separated


def repetition_block_witness(k: int, l: int, q: int) -> BlockWitness:
    """Witnesses that a block-diagonal group cannot be transitive on C_2.

    The code has every block projection equal to Rep(k, q) and minimum
    distance at least 3: Prod(Rep(k,q), l) for k >= 3, and the l-fold
    repetition of Rep(2, q) for k = 2.  ``mu`` changes entries 0 and 1 of the
    constant word, ``nu`` changes the first entry of the first two blocks.
    """
    if k < 2 or l < 2 or q < 3:
        raise ParameterError("need k >= 2, l >= 2, q >= 3")
    if k >= 3:
        code, name = prod_code(rep(k, q), l), f"Prod(Rep({k},{q}),{l})"
    else:
        code, name = rep_l_code(rep(k, q), l), f"Rep_{l}(Rep({k},{q}))"
    m = k * l
    mu = [0] * m
    mu[0], mu[1] = 1, 2
    nu = [0] * m
    nu[0] = nu[k] = 1
    mu, nu = tuple(mu), tuple(nu)
    separated = nu not in orbit(block_diagonal_group(k, l, q), mu)
    return BlockWitness(k, l, q, name, mu, nu, dist_to_code(mu, code), dist_to_code(nu, code), separated)
