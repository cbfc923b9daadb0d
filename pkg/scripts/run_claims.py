"""Run the claim suite and write a JSON log.

Usage: python scripts/run_claims.py [pattern] [--out claims.json] [--skip-stretch]
"""

import argparse
import json

from hnt.claims import run_claims


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("pattern", nargs="?")
    ap.add_argument("--out", default="claims.json")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-stretch", action="store_true")
    args = ap.parse_args()

    suite = run_claims(args.pattern, seed=args.seed, skip_stretch=args.skip_stretch,
                       progress=lambda r: print(f"{r.status:7s} {r.id} ({r.elapsed_ms:.0f} ms)", flush=True))
    with open(args.out, "w") as fh:
        json.dump(suite.to_json(), fh, indent=2)
    raise SystemExit(suite.exit_code)


if __name__ == "__main__":
    main()
