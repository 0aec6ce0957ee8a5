"""Command-line entry point.

Subcommands: enumerate, inspect, subcover, interval, verify, search.
Exit codes: 0 success, 1 a theorem FAILed, 2 parse/usage error.  All
output is deterministic: identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import realline as rl
from .covers import Cover, extract_min_subcover
from .errors import DeltaTopError
from .exprlang import eval_interval_expr, parse_implication
from .sets import PtSet
from .space import FinSpace
from .theorems import StreamSpec, aggregate_ok, run_all, theorem_ids
from .topogen import enumerate_spaces


def _read_json_input(path: Optional[str]):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return json.loads(text)


def _emit(obj, fmt: str, table_fn) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        table_fn(obj)


# -- subcommands --------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.count_only:
        print(sum(1 for _ in enumerate_spaces(args.max_points, args.up_to_homeo)))
        return 0
    for space in enumerate_spaces(args.max_points, args.up_to_homeo):
        print(json.dumps(space.to_json(), sort_keys=True))
    return 0


def cmd_inspect(args) -> int:
    space = FinSpace.from_json(_read_json_input(args.file))
    fam = lambda f: [space.set_labels(s) for s in space.sorted_family(f)]
    report = {
        "points": space.labels,
        "opens": fam(space.opens),
        "regular_open_family": fam(space.regular_open_family()),
        "delta_open_family": fam(space.delta_open_family()),
        "delta_closed_family": fam(space.delta_closed_family()),
        "separation_profile": space.separation_profile().to_json(),
    }

    def table(rep):
        print(f"points: {' '.join(rep['points'])}")
        for key in (
            "opens",
            "regular_open_family",
            "delta_open_family",
            "delta_closed_family",
        ):
            sets = " ".join("{" + ",".join(s) + "}" for s in rep[key])
            print(f"{key}: {sets}")
        prof = rep["separation_profile"]
        print("separation: " + " ".join(f"{k}={str(v).lower()}" for k, v in prof.items()))

    _emit(report, args.format, table)
    return 0


def cmd_subcover(args) -> int:
    cover = Cover.from_json(_read_json_input(args.file))
    res = extract_min_subcover(cover)
    report = {
        "subcover": [cover.space.set_labels(s) for s in res.family],
        "indices": list(res.indices),
        "certified_minimum": res.certified,
    }

    def table(rep):
        sets = " ".join("{" + ",".join(s) + "}" for s in rep["subcover"])
        cert = "exact" if rep["certified_minimum"] else "greedy (not certified)"
        print(f"subcover ({cert}): {sets}")

    _emit(report, args.format, table)
    return 0


def cmd_interval(args) -> int:
    result = eval_interval_expr(args.expr)
    if isinstance(result, bool):
        print("true" if result else "false")
    else:
        print(rl.format_interval_set(result))
    return 0


def cmd_verify(args) -> int:
    ids = args.ids.split(",") if args.ids else None
    stream = StreamSpec.up_to(args.max_points)
    reports = run_all(stream, ids=ids, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    else:
        width = max(len(r.id) for r in reports)
        for r in reports:
            print(
                f"{r.id:<{width}}  {r.verdict:<7}  "
                f"instances={r.instances_total}  hyp_true={r.instances_hypothesis_true}  "
                f"({r.elapsed:.2f}s)  {r.description}"
            )
            for ce in r.counterexamples:
                print(f"{'':<{width}}  counterexample: {json.dumps(ce, sort_keys=True)}")
    return 0 if aggregate_ok(reports) else 1


def cmd_search(args) -> int:
    template = parse_implication(args.template)
    for n in range(1, args.max_points + 1):
        for space in enumerate_spaces(n):
            for m in range(1 << space.n):
                a = PtSet(space.n, m)
                if not template.holds(space, a):
                    report = {
                        "counterexample": {
                            "space": space.to_json(),
                            "A": space.set_labels(a),
                        }
                    }
                    _emit(
                        report,
                        args.format,
                        lambda rep: print(
                            "counterexample: A="
                            + "{" + ",".join(rep["counterexample"]["A"]) + "}"
                            + " in "
                            + json.dumps(rep["counterexample"]["space"], sort_keys=True)
                        ),
                    )
                    return 0
    _emit(
        {"counterexample": None},
        args.format,
        lambda rep: print(f"no counterexample on spaces with up to {args.max_points} points"),
    )
    return 0


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltatop",
        description="Exact delta-topology engines on finite spaces and the rational line",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="emit every topology on n points as NDJSON")
    p.add_argument("--max-points", type=int, required=True, help="carrier size n (1..7)")
    p.add_argument("--up-to-homeo", action="store_true", help="one space per class")
    p.add_argument("--count-only", action="store_true", help="emit a single integer")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("inspect", help="families and separation profile of a space")
    p.add_argument("file", nargs="?", help="space JSON file (default stdin)")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(fn=cmd_inspect)

    p = sub.add_parser("subcover", help="minimum subcover of a cover JSON")
    p.add_argument("file", nargs="?", help="cover JSON file (default stdin)")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(fn=cmd_subcover)

    p = sub.add_parser("interval", help="evaluate an interval-set expression")
    p.add_argument("expr", help="e.g. 'int(cl((-1,0)U(0,1)))' or 'regular_open((0,1))'")
    p.set_defaults(fn=cmd_interval)

    p = sub.add_parser("verify", help="run the theorem suite")
    p.add_argument("--ids", help="comma-separated theorem ids (default: all)")
    p.add_argument("--max-points", type=int, default=3, help="largest carrier size (1..4)")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("search", help="hunt counterexamples for an implication template")
    p.add_argument("template", help="e.g. 'delta_open(A) implies regular_open(A)'")
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DeltaTopError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
