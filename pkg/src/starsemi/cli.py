"""Command-line interface.

All mathematics lives in the library modules; this file only parses
arguments, dispatches, formats, and maps errors to exit codes:

    0  success (and, for verify-bounds, no violated bound)
    1  at least one bound violated
    2  argument or spec parse error
    3  invalid semigroup (gcd, closure)
    4  search budget exceeded
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool

from .bounds import CSV_HEADER, classify_up_to, verify_supporting_bounds
from .enumeration import DEFAULT_NODE_BUDGET, dedekind, enumerate_star_operations
from .errors import EmptyInput, LimitExceeded, NotClosed, NotNumerical, StarSemiError
from .ideals import DEFAULT_GENUS_LIMIT, enumerate_F0, enumerate_nondivisorial
from .semigroups import enumerate_semigroups, parse_semigroup
from .stars import build_star_poset, q_set

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _analyze_payload(spec: str, budget: int):
    s = parse_semigroup(spec)
    f0 = enumerate_F0(s)
    g0 = enumerate_nondivisorial(s)
    q_sizes = {a: len(q_set(s, a)) for a in s.gaps}
    return s, {
        "semigroup": s.to_json(),
        "symmetric": bool(s.genus == 0 or s.is_symmetric()),
        "pseudosymmetric": bool(s.genus > 0 and s.is_pseudosymmetric()),
        "f0_size": len(f0),
        "g0_size": len(g0),
        "q_sizes": {str(a): q_sizes[a] for a in sorted(q_sizes)},
    }


def cmd_analyze(args) -> int:
    s, payload = _analyze_payload(args.spec, args.budget)
    if args.format == "json":
        args.out.write(_dump_json(payload))
    else:
        args.out.write(f"semigroup      {s}\n")
        args.out.write(f"gaps           {list(s.gaps)}\n")
        args.out.write(f"frobenius      {s.frobenius}\n")
        args.out.write(f"genus          {s.genus}\n")
        args.out.write(f"multiplicity   {s.multiplicity}\n")
        args.out.write(f"type           {list(s.pseudo_frobenius)} (t={s.type_size})\n")
        args.out.write(f"symmetric      {payload['symmetric']}\n")
        args.out.write(f"pseudosymmetric {payload['pseudosymmetric']}\n")
        args.out.write(f"|F0|           {payload['f0_size']}\n")
        args.out.write(f"|G0|           {payload['g0_size']}\n")
        for a, size in payload["q_sizes"].items():
            args.out.write(f"|Q_{a}|         {size}\n")
    return EXIT_OK


def cmd_count(args) -> int:
    s = parse_semigroup(args.spec)
    census = enumerate_star_operations(s, node_budget=args.budget, materialize_cap=0)
    if args.format == "json":
        args.out.write(_dump_json({"semigroup": s.to_json(), "star_count": census.count}))
    else:
        args.out.write(f"{census.count}\n")
    return EXIT_OK


def cmd_census(args) -> int:
    s = parse_semigroup(args.spec)
    census = enumerate_star_operations(s, node_budget=args.budget)
    if args.format == "json":
        args.out.write(_dump_json(census.to_json()))
    else:
        args.out.write(f"semigroup  {s}\n")
        args.out.write(f"star_count {census.count}\n")
        args.out.write(f"omega      {census.omega}\n")
        args.out.write(f"all_atoms  {census.all_atoms}\n")
        for x in sorted(census.by_qm):
            args.out.write(f"qm={x}      {census.by_qm[x]}\n")
    return EXIT_OK


def cmd_search(args) -> int:
    rows = classify_up_to(args.n, node_budget=args.budget)
    if args.format == "json":
        args.out.write(_dump_json([
            {"generators": list(s.min_generators), "star_count": c} for s, c in rows
        ]))
    elif args.format == "csv":
        args.out.write("generators,star_count\n")
        for s, c in rows:
            args.out.write(f"\"{str(s)}\",{c}\n")
    else:
        for s, c in rows:
            args.out.write(f"{str(s):16s} {c}\n")
    return EXIT_OK


def _report_for_gaps(item):
    gaps, budget = item
    from .semigroups import from_gaps

    return verify_supporting_bounds(from_gaps(gaps), node_budget=budget)


def cmd_verify_bounds(args) -> int:
    if args.spec:
        targets = [parse_semigroup(args.spec)]
    else:
        targets = [
            s for s in enumerate_semigroups(args.max_genus)
            if s.genus > 0 and not s.is_symmetric()
        ]
    if args.threads > 1:
        with Pool(args.threads) as pool:
            reports = pool.map(
                _report_for_gaps, [(s.gaps, args.budget) for s in targets])
    else:
        reports = [verify_supporting_bounds(s, node_budget=args.budget) for s in targets]
    violated = False
    if args.format == "json":
        args.out.write(_dump_json([r.to_json() for r in reports]))
    elif args.format == "csv":
        args.out.write(CSV_HEADER + "\n")
        for r in reports:
            for line in r.csv_rows():
                args.out.write(line + "\n")
    else:
        for r in reports:
            bad = r.violations()
            exact = "?" if r.exact is None else r.exact
            status = "VIOLATED" if bad else "ok"
            args.out.write(f"{str(r.semigroup):16s} exact={exact:<8} {status}\n")
            for e in bad:
                args.out.write(f"    {e.name} >= {e.value} fails\n")
    violated = any(r.violations() for r in reports)
    return EXIT_VIOLATION if violated else EXIT_OK


def cmd_poset(args) -> int:
    s = parse_semigroup(args.spec)
    poset = build_star_poset(s)
    if args.format == "json":
        args.out.write(_dump_json({
            "elements": [list(i.added_gaps) for i in poset.elements],
            "covers": [
                [list(poset.elements[u].added_gaps), list(poset.elements[l].added_gaps)]
                for u, l in sorted(poset.covers())
            ],
        }))
    else:
        args.out.write(poset.to_dot())
    return EXIT_OK


def cmd_dedekind(args) -> int:
    args.out.write(f"{dedekind(args.n)}\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="starsemi",
        description="Star operations on numerical semigroups: analysis, census, search, bounds.",
    )
    p.add_argument("--format", choices=["text", "json", "csv", "dot"], default="text")
    p.add_argument("--output", help="write output to this file instead of stdout")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget-f0", type=int, default=DEFAULT_GENUS_LIMIT,
                   help="genus cap for ideal enumeration")
    p.add_argument("--budget", type=int,
                   default=int(os.environ.get("STARSEMI_BUDGET", DEFAULT_NODE_BUDGET)),
                   help="antichain-sweep node budget (env STARSEMI_BUDGET)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="invariants and ideal structure of one semigroup")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("count", help="number of star operations")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("census", help="full star-operation census")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("search", help="all nonsymmetric semigroups with at most N star operations")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify-bounds", help="check every proven lower bound against exact counts")
    sp.add_argument("spec", nargs="?", default=None)
    sp.add_argument("--max-genus", type=int, default=8)
    sp.set_defaults(func=cmd_verify_bounds)

    sp = sub.add_parser("poset", help="star order on nondivisorial ideals (DOT)")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_poset)

    sp = sub.add_parser("dedekind", help="Dedekind number D(n), n <= 6")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_dedekind)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code not in (0, None) else EXIT_OK
    if args.command == "poset" and args.format == "text":
        args.format = "dot"
    out = sys.stdout
    if args.output:
        out = open(args.output, "w")
    args.out = out
    try:
        return args.func(args)
    except (NotNumerical, NotClosed, EmptyInput) as e:
        print(f"invalid semigroup: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except LimitExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except StarSemiError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        if args.output:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
