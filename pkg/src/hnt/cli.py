"""``hnt`` command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
from importlib.metadata import PackageNotFoundError, version

from hnt.errors import BudgetError, HntError, LevelError
from hnt.groups import DEFAULT_GROUP_BUDGET

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_LEVEL = 0, 1, 2, 3, 4


def _version() -> str:
    try:
        return version("hnt")
    except PackageNotFoundError:
        return "unknown"


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def _blocks(s: str) -> list[int]:
    try:
        return [int(a) for a in s.split(",") if a.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated entries, got {s!r}") from None


# --- subcommands ------------------------------------------------------------

def cmd_build(args) -> int:
    from hnt.constructions import CodeFamilySpec
    from hnt.io import format_code, read_code, write_code

    inner = read_code(args.inner) if args.inner else None
    code = CodeFamilySpec(args.family, args.m, args.q, args.p, args.l, inner).build()
    if args.output:
        write_code(code, args.output)
        if args.json:
            _emit(args, {"m": code.m, "q": code.q, "code_size": len(code), "path": args.output}, "")
    else:
        sys.stdout.write(format_code(code))
    return EXIT_OK


def cmd_group(args) -> int:
    from hnt.constructions import named_group
    from hnt.io import format_group, write_group

    X = named_group(args.name, args.m, args.q, args.l, budget=args.budget)
    if args.output:
        write_group(X, args.output)
    else:
        sys.stdout.write(format_group(X))
    return EXIT_OK


def _report_text(r) -> str:
    delta = f"{r.delta}" if r.delta is not None else f"undefined (|C|={r.code_size})"
    lines = [f"H({r.m},{r.q}), |C|={r.code_size}, δ {delta}, ρ={r.rho}"]
    for lv in r.levels:
        lines.append(f"  C_{lv.r}: {lv.size} vertices, {'transitive' if lv.transitive else 'NOT transitive'}")
    lines.append(f"diagonal group: {r.diagonal}; transitive on entries: {r.entry_transitive}")
    if r.alphabet_group_order is not None:
        lines.append(f"alphabet group order {r.alphabet_group_order}, almost simple: {r.almost_simple}")
    lines.append(f"verdict: {'(X,%d)-neighbour transitive' % r.s if r.verdict else 'not neighbour transitive'}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    from hnt.analysis import is_s_neighbour_transitive
    from hnt.io import read_code, read_group

    code, X = read_code(args.code), read_group(args.group)
    if (X.params.m, X.params.q) != (code.m, code.q):
        raise HntError(f"group acts on H({X.params.m},{X.params.q}) but code lives in H({code.m},{code.q})")
    r = is_s_neighbour_transitive(X, code, args.s, group_budget=args.budget)
    _emit(args, r.to_json(), _report_text(r))
    return EXIT_OK


def cmd_verify(args) -> int:
    from hnt.witnesses import verify_table1_row

    r = verify_table1_row(args.row, args.m, args.q, args.p)
    text = (f"row {r.row} at m={r.m}, q={r.q}" + (f", p={r.p}" if r.p else "") + "\n"
            f"  mu={r.mu}  d={r.mu_distances}  Num={r.to_json()['num_mu']}\n"
            f"  nu={r.nu}  d={r.nu_distances}  Num={r.to_json()['num_nu']}\n"
            f"  separated by diagonal group: {r.separated}\n"
            f"{'PASS' if r.passed else 'FAIL'}")
    _emit(args, r.to_json(), text)
    return EXIT_OK if r.passed else EXIT_FAIL


def cmd_classify(args) -> int:
    from hnt.classify import classify_diagonal_2nt, families_of

    res = classify_diagonal_2nt(args.m, args.q, args.strategy, budget=args.budget)
    lines = [f"H({args.m},{args.q}) [{args.strategy}]: {len(res.codes)} diagonally 2-NT code(s) up to equivalence"]
    for c in res.codes:
        fam = ", ".join(families_of(c)) or "unlisted"
        lines.append(f"  |C|={len(c)} ({fam}): " + " ".join("".join(map(str, w)) for w in c.sorted_words))
    lines += [f"note: {n}" for n in res.notes]
    _emit(args, res.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_project(args) -> int:
    from hnt.analysis import project_code
    from hnt.io import format_code, read_code, write_code

    P = project_code(read_code(args.code), args.block)
    if args.output:
        write_code(P, args.output)
    elif args.json:
        _emit(args, {"m": P.m, "q": P.q, "words": [list(w) for w in P.sorted_words]}, "")
    else:
        sys.stdout.write(format_code(P))
    return EXIT_OK


def cmd_claims(args) -> int:
    from hnt.claims import run_claims

    def show(res):
        if not args.json:
            print(f"{res.status:7s} {res.id:34s} {res.elapsed_ms:10.1f} ms  {res.detail}", flush=True)

    suite = run_claims(args.pattern, seed=args.seed, skip_stretch=args.skip_stretch, progress=show)
    if args.json:
        _emit(args, suite.to_json(), "")
    return suite.exit_code


# --- parser -----------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    # Shared flags may appear before or after the subcommand.  Each parser
    # needs its own copy: parents share action objects, and set_defaults on
    # the top-level parser would otherwise leak into the subparsers.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help="group enumeration budget")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomised checks")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hnt", parents=[_common()],
                                description="Codes in Hamming graphs and neighbour transitivity.")
    p.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    p.set_defaults(json=False, budget=DEFAULT_GROUP_BUDGET, seed=0)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[_common()], help="write a code from a named family")
    b.add_argument("family", choices=["rep", "singleton", "complete", "inj", "w", "all", "prod", "repl"])
    b.add_argument("--m", type=int)
    b.add_argument("--q", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--l", type=int)
    b.add_argument("--inner", help="code file for prod/repl")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    from hnt.constructions import GROUPS
    g = sub.add_parser("group", parents=[_common()], help="write generators of a named group")
    g.add_argument("name", choices=GROUPS)
    g.add_argument("--m", type=int, help="length (block length for block-diag and product)")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--l", type=int, help="number of blocks")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_group)

    a = sub.add_parser("analyze", parents=[_common()], help="test (X,s)-neighbour transitivity")
    a.add_argument("--code", required=True)
    a.add_argument("--group", required=True)
    a.add_argument("--s", type=int, default=2)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[_common()], help="check a row of distance-2 witnesses")
    v.add_argument("table", choices=["table1"])
    v.add_argument("--row", required=True, choices=["singleton", "rep", "inj", "allq", "allpq"])
    v.add_argument("--m", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--p", type=int)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", parents=[_common()], help="brute-force diagonal 2-NT classification")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--strategy", choices=["all-subsets", "subgroup-orbits"], default="all-subsets")
    c.set_defaults(func=cmd_classify)

    pr = sub.add_parser("project", parents=[_common()], help="project a code onto a set of entries")
    pr.add_argument("--code", required=True)
    pr.add_argument("--block", type=_blocks, required=True)
    pr.add_argument("-o", "--output")
    pr.set_defaults(func=cmd_project)

    cl = sub.add_parser("claims", parents=[_common()], help="run the claim regression suite")
    cl.add_argument("pattern", nargs="?", help="glob over claim ids, e.g. 'table1-*'")
    cl.add_argument("--skip-stretch", action="store_true", help="skip the long H(3,5) search")
    cl.set_defaults(func=cmd_claims)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"hnt: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LevelError as exc:
        print(f"hnt: {exc}", file=sys.stderr)
        return EXIT_LEVEL
    except (HntError, ValueError, OSError) as exc:
        print(f"hnt: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
