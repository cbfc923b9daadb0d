"""Print the distance-2 witness pairs for every row, at the smallest
parameters and a few larger ones.
"""

from hnt.errors import ParameterError
from hnt.witnesses import ROWS, verify_table1_row

LARGER = {
    "singleton": [(4, 4, None), (3, 6, None)],
    "rep": [(5, 3, None), (6, 4, None)],
    "inj": [(5, 6, None), (4, 7, None)],
    "allq": [(5, 5, 1)],
    "allpq": [(8, 4, 2)],
}


def main():
    for row in ROWS:
        cases = [(None, None, None)] + LARGER[row]
        for m, q, p in cases:
            try:
                r = verify_table1_row(row, m, q, p, orbit_limit=10**5)
            except ParameterError as exc:
                print(f"{row:10s} m={m} q={q}: {exc}")
                continue
            j = r.to_json()
            print(f"{row:10s} m={r.m} q={r.q} p={r.p}  mu={''.join(map(str, r.mu))} {j['num_mu']:20s} "
                  f"nu={''.join(map(str, r.nu))} {j['num_nu']:20s} separated={r.separated} "
                  f"{'PASS' if r.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
