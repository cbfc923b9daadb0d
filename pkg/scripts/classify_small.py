"""Brute-force diagonal 2-NT classification at small (m, q), compared with
an independent check of the known families.

Usage: python scripts/classify_small.py [--max-vertices 27] [--include-slow]

H(2,5) takes several minutes and only runs with --include-slow.
"""

import argparse
import time

from hnt.classify import classify_diagonal_2nt, diagonal_2nt_expected, families_of
from hnt.claims import matches_up_to_equivalence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=27)
    ap.add_argument("--include-slow", action="store_true")
    args = ap.parse_args()
    slow = {(2, 5)}

    for m in range(2, 6):
        for q in range(2, 6):
            if q**m > args.max_vertices or ((m, q) in slow and not args.include_slow):
                continue
            strategy = "all-subsets" if q**m <= 12 else "subgroup-orbits"
            t = time.perf_counter()
            res = classify_diagonal_2nt(m, q, strategy)
            expected = [c for _, c in diagonal_2nt_expected(m, q)]
            agree = matches_up_to_equivalence(res.codes, expected)
            fams = [families_of(c) or ["?"] for c in res.codes]
            print(f"H({m},{q}) {strategy:15s} {time.perf_counter() - t:6.2f}s "
                  f"codes={fams} agree={agree} subgroups_complete={res.all_subgroups_found}")


if __name__ == "__main__":
    main()
