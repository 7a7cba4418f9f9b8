"""Command-line front end.

Subcommands: dim, seq, search, improve, oracle, verify, ratios.  Growth
and improvement commands emit JSON-lines run records; oracle table rows
and search results are single JSON objects; ratios are CSV.  Global
flags --threads, --seed and --max-exact-n may appear before or after
the subcommand.

Exit codes: 0 success (including conjecture-level warnings), 2 invalid
input, 3 a verification found a violation of a proven claim.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import YoungDiagram
from .errors import (
    BalanceNotApplicable,
    CoreMembershipError,
    EmptyDiagramError,
    EmptySearchSpace,
    InvalidK,
    InvalidM,
    InvalidPath,
    KeyMismatch,
    NotAGrowthSequence,
    PartitionError,
    RecordSchemaError,
    ShapeBlocked,
    SizeBoundExceeded,
)
from .oracle import max_dimension_diagrams, max_table
from .plancherel import branches, greedy_grow
from .records import (
    DEFAULT_MAX_EXACT_N,
    emit_records,
    format_partition,
    parse_partition,
    record_for,
    record_to_json,
    load_records,
    ratios_csv,
)
from .search import astar, sequence_improve
from .transforms import balance_sweep, reflection_hooks_sweep, symmetrize_sweep

_INPUT_ERRORS = (
    PartitionError,
    InvalidK,
    InvalidM,
    InvalidPath,
    SizeBoundExceeded,
    CoreMembershipError,
    EmptySearchSpace,
    RecordSchemaError,
    KeyMismatch,
    NotAGrowthSequence,
    BalanceNotApplicable,
    EmptyDiagramError,
    ShapeBlocked,
    OSError,
)


def _add_global_flags(parser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--threads",
        type=int,
        default=default if suppress else 1,
        help="worker task count; never changes any output byte except timings",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=default if suppress else 0,
        help="base seed for randomized heuristics",
    )
    parser.add_argument(
        "--max-exact-n",
        type=int,
        dest="max_exact_n",
        default=default if suppress else DEFAULT_MAX_EXACT_N,
        help="largest size whose exact dimension is written into records",
    )


def _write_records(records, out_path) -> None:
    if out_path:
        emit_records(records, out_path)
    else:
        for rec in records:
            print(record_to_json(rec))


def _parse_start(text) -> YoungDiagram:
    start = parse_partition(text) if text else YoungDiagram([1])
    if start.size == 0:
        raise EmptyDiagramError("start diagram must have at least one box")
    return start


def _cmd_dim(args) -> int:
    for text in args.partitions:
        diagram = parse_partition(text)
        if diagram.size == 0:
            raise EmptyDiagramError("cannot report the empty diagram")
        print(record_to_json(record_for(diagram, "oracle", args.max_exact_n)))
    return 0


def _cmd_seq(args) -> int:
    start = _parse_start(args.start)
    if args.variant is not None and args.shake is None:
        print("error: --variant requires --shake", file=sys.stderr)
        return 2
    if args.shake is not None and args.restrict_core:
        print("error: --shake cannot be combined with --restrict-core", file=sys.stderr)
        return 2
    if args.shake is None:
        seq = greedy_grow(start, args.n, args.restrict_core)
        source = "greedy"
    else:
        m = args.variant if args.variant is not None else 1
        seq = branches(start, m, args.shake, args.n, seed_base=args.seed)
        source = "shake" if m == 1 else "branches"
    records = [record_for(d, source, args.max_exact_n) for d in seq if d.size >= 1]
    _write_records(records, args.out)
    return 0


def _cmd_search_astar(args) -> int:
    if (args.n is None) == (args.depth is None):
        print("error: give exactly one of --n and --depth", file=sys.stderr)
        return 2
    start = _parse_start(args.start)
    mapped = False
    if not start.in_core_subgraph():
        flipped = start.conjugate()
        if not flipped.in_core_subgraph():
            raise CoreMembershipError(
                f"neither {start.rows} nor its conjugate is in the core subgraph"
            )
        start, mapped = flipped, True
    n_target = args.n if args.n is not None else start.size + args.depth
    result = astar(
        n_target, start=start, uniform_cost=args.uniform_cost, workers=args.threads
    )
    found = result.diagram.conjugate() if mapped else result.diagram
    payload = {
        "rows": format_partition(found),
        "n": found.size,
        "dim": str(result.dim) if found.size <= args.max_exact_n else None,
        "log_dim": result.log_dim,
        "c": result.normalized,
        "cost": result.cost,
        "nodes_expanded": result.nodes_expanded,
        "frontier_peak": result.frontier_peak,
        "mode": result.mode,
        "wall_time_s": result.elapsed,
    }
    print(json.dumps(payload))
    return 0


def _cmd_improve(args) -> int:
    old = sorted(load_records(args.infile), key=lambda r: r.n)
    seq = [parse_partition(r.rows) for r in old]
    outcome = sequence_improve(seq, args.depth, workers=args.threads)
    new_records = [
        record_for(d, "improve", args.max_exact_n) for d in outcome.sequence
    ]
    _write_records(new_records, args.out)
    if args.ratios_out:
        ratios_csv(old, new_records, args.ratios_out)
    print(
        f"improved sizes: {list(outcome.improved_sizes)};"
        f" skipped sizes: {list(outcome.skipped_sizes)}",
        file=sys.stderr,
    )
    return 0


def _entry_json(entry) -> str:
    return json.dumps(
        {
            "n": entry.n,
            "dim": str(entry.dim),
            "maximizers": [format_partition(lam) for lam in entry.maximizers],
        }
    )


def _cmd_oracle_max(args) -> int:
    print(_entry_json(max_dimension_diagrams(args.n, workers=args.threads)))
    return 0


def _cmd_oracle_table(args) -> int:
    lines = [
        _entry_json(entry) for entry in max_table(args.max_n, workers=args.threads)
    ]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_verify_theorem(args) -> int:
    sweep = symmetrize_sweep(args.max_n)
    hook_pairs, hook_failures = reflection_hooks_sweep(args.hooks_max_n)
    print(
        f"checked={sweep.checked} strict={sweep.strict} equal={sweep.equal}"
        f" skipped={sweep.skipped} violations={len(sweep.violations)}"
        f" hook_pairs={hook_pairs} hook_failures={len(hook_failures)}"
    )
    for rows, out_rows, dim_in, dim_out in sweep.violations:
        print(
            json.dumps(
                {
                    "kind": "dimension",
                    "input": list(rows),
                    "output": list(out_rows),
                    "dim_input": str(dim_in),
                    "dim_output": str(dim_out),
                }
            )
        )
    for base, upper, lower in hook_failures:
        print(
            json.dumps(
                {
                    "kind": "hooks",
                    "base": list(base),
                    "upper": list(upper),
                    "lower": list(lower),
                }
            )
        )
    if sweep.violations or hook_failures:
        return 3
    return 0


def _cmd_verify_conjecture(args) -> int:
    sweep = balance_sweep(args.max_n)
    print(
        f"checked={sweep.checked} increased={sweep.increased} equal={sweep.equal}"
        f" blocked={len(sweep.blocked)} decreases={len(sweep.decreased)}"
    )
    for rows, out_rows, dim_in, dim_out in sweep.decreased:
        print(
            json.dumps(
                {
                    "kind": "decrease",
                    "input": list(rows),
                    "output": list(out_rows),
                    "dim_input": str(dim_in),
                    "dim_output": str(dim_out),
                }
            )
        )
    for rows, stuck in sweep.blocked:
        print(
            json.dumps(
                {
                    "kind": "blocked",
                    "input": list(rows),
                    "stuck": None if stuck is None else list(stuck),
                }
            )
        )
    if sweep.decreased:
        print(
            f"warning: {len(sweep.decreased)} dimension decreases recorded",
            file=sys.stderr,
        )
    return 0


def _cmd_ratios(args) -> int:
    ratios_csv(load_records(args.old), load_records(args.new), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngdim",
        description="Young diagram dimensions: exact values, growth heuristics, and search",
    )
    _add_global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser(
        "dim", parents=[common], help="dimensions of given partitions"
    )
    p_dim.add_argument("partitions", nargs="+", metavar="ROWS", help='e.g. "4,2,2"')
    p_dim.set_defaults(func=_cmd_dim)

    p_seq = sub.add_parser(
        "seq", parents=[common], help="greedy growth sequence, optionally shaken"
    )
    p_seq.add_argument("--n", type=int, required=True, help="final size")
    p_seq.add_argument("--start", default="", metavar="ROWS", help="start diagram")
    p_seq.add_argument(
        "--restrict-core",
        action="store_true",
        dest="restrict_core",
        help="grow inside the core subgraph only",
    )
    p_seq.add_argument("--shake", type=int, help="shake the start with this k")
    p_seq.add_argument(
        "--variant", type=int, help="branch count m for seeded multi-branch shaking"
    )
    p_seq.add_argument("--out", help="write JSON-lines records here instead of stdout")
    p_seq.set_defaults(func=_cmd_seq)

    p_search = sub.add_parser("search", help="tree search for large dimensions")
    search_sub = p_search.add_subparsers(dest="search_command", required=True)
    p_astar = search_sub.add_parser(
        "astar", parents=[common], help="best-first search over the greedy path tree"
    )
    p_astar.add_argument("--n", type=int, help="absolute target size")
    p_astar.add_argument(
        "--depth", type=int, help="target size relative to the start diagram"
    )
    p_astar.add_argument("--start", default="", metavar="ROWS", help="start diagram")
    p_astar.add_argument(
        "--uniform-cost",
        action="store_true",
        dest="uniform_cost",
        help="exact mode: no heuristic, provably maximal at the target level",
    )
    p_astar.set_defaults(func=_cmd_search_astar)

    p_improve = sub.add_parser(
        "improve", parents=[common], help="deep-search improvement of a sequence"
    )
    p_improve.add_argument("--in", dest="infile", required=True, help="record file")
    p_improve.add_argument("--depth", type=int, default=3)
    p_improve.add_argument("--out", help="write improved records here")
    p_improve.add_argument(
        "--ratios-out", dest="ratios_out", help="write new/old dimension ratios CSV"
    )
    p_improve.set_defaults(func=_cmd_improve)

    p_oracle = sub.add_parser("oracle", help="exhaustive maxima")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p_omax = oracle_sub.add_parser(
        "max", parents=[common], help="all maximum-dimension diagrams at one size"
    )
    p_omax.add_argument("--n", type=int, required=True)
    p_omax.set_defaults(func=_cmd_oracle_max)
    p_otable = oracle_sub.add_parser(
        "table", parents=[common], help="maximum table for sizes 1..N"
    )
    p_otable.add_argument("--max-n", dest="max_n", type=int, required=True)
    p_otable.add_argument("--out", help="write JSON-lines table here")
    p_otable.set_defaults(func=_cmd_oracle_table)

    p_verify = sub.add_parser("verify", help="exhaustive checks of the transforms")
    verify_sub = p_verify.add_subparsers(dest="verify_command", required=True)
    p_vt = verify_sub.add_parser(
        "theorem",
        parents=[common],
        help="reflection transform strictness and hook identities",
    )
    p_vt.add_argument("--max-n", dest="max_n", type=int, default=20)
    p_vt.add_argument(
        "--hooks-max-n",
        dest="hooks_max_n",
        type=int,
        default=10,
        help="largest symmetric base size for the hook identity sweep",
    )
    p_vt.set_defaults(func=_cmd_verify_theorem)
    p_vc = verify_sub.add_parser(
        "conjecture", parents=[common], help="balance-to-core dimension monitoring"
    )
    p_vc.add_argument("--max-n", dest="max_n", type=int, default=18)
    p_vc.set_defaults(func=_cmd_verify_conjecture)

    p_ratios = sub.add_parser(
        "ratios", parents=[common], help="dimension ratio CSV from two record files"
    )
    p_ratios.add_argument("--old", required=True)
    p_ratios.add_argument("--new", required=True)
    p_ratios.add_argument("--out", required=True)
    p_ratios.set_defaults(func=_cmd_ratios)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
