"""Command-line interface.

Exit status: 0 on success, 1 for invalid arguments, 2 when a verification
finds a discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .construction import ConstructionError, construct_for_index, generate_trace, verify_trace
from .labeling import GraphShape, LabelingError
from .oracle import BudgetExceeded, Mode, OracleConfig, cross_check
from .theorem import compute_params

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipartite-ebi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_shape(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("m", type=_positive, help="size of part A (even)")
        p.add_argument("n", type=_positive, help="size of part B (even, n <= m)")
        return p

    with_shape("params", "print k, k', j, j', case and maximum index")
    with_shape("ebi", "print the edge-balanced index set as 0..max")

    p = with_shape("construct", "print a witness labeling for one index")
    p.add_argument("--index", type=_nonnegative, required=True)
    p.add_argument("--format", choices=("csv", "pretty"), default="csv")

    p = with_shape("trace", "write the switch trace as JSON")
    p.add_argument("--out", type=Path, help="output file (default: stdout)")

    p = with_shape("verify", "cross-check search, closed form and construction")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default=None)
    p.add_argument("--samples", type=_positive, default=OracleConfig.sample_count)
    p.add_argument("--seed", type=_nonnegative, default=0)
    p.add_argument("--budget", type=_positive, default=OracleConfig.exhaustive_edge_budget,
                   help="largest edge count searched exhaustively")
    p.add_argument("--report", type=Path, help="write the verdict as JSON")

    p = sub.add_parser("sweep", help="self-verify the construction for every shape up to --max-m")
    p.add_argument("--max-m", type=_positive, default=40)
    p.add_argument("--budget", type=_positive, default=OracleConfig.exhaustive_edge_budget)
    p.add_argument("--report", type=Path, help="write the summary as JSON")
    return parser


def _shape(args: argparse.Namespace) -> GraphShape:
    try:
        return GraphShape(m=args.m, n=args.n)
    except LabelingError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: Path | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def cmd_params(args: argparse.Namespace) -> int:
    p = compute_params(_shape(args))
    lines = [
        f"k={p.k}", f"k'={p.k_prime}", f"j={p.j}", f"j'={p.j_prime}",
        f"case={p.case.value}", f"max={p.max_index}",
    ]
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_ebi(args: argparse.Namespace) -> int:
    _emit(f"0..{compute_params(_shape(args)).max_index}\n")
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    shape = _shape(args)
    top = compute_params(shape).max_index
    if args.index > top:
        raise UsageError(f"--index {args.index} is outside 0..{top} for {shape}")
    lab = construct_for_index(shape, args.index)
    _emit(lab.to_csv() if args.format == "csv" else lab.to_pretty())
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    trace = generate_trace(_shape(args))
    if args.out is None:
        _emit(trace.to_json())
    else:
        _emit(trace.to_json(), args.out)
        print(f"switches={len(trace.entries)}")
        print(f"final_index={trace.final_index}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    shape = _shape(args)
    config = OracleConfig(
        exhaustive_edge_budget=max(args.budget, 4),
        sample_count=args.samples,
        rng_seed=args.seed,
    )
    mode = None if args.mode is None else Mode(args.mode.upper())
    try:
        verdict = cross_check(shape, config, mode)
    except BudgetExceeded as exc:
        raise UsageError(f"{exc}; use --mode sampled or raise --budget") from None
    print(verdict.summary())
    if args.report is not None:
        payload = {
            "m": shape.m,
            "n": shape.n,
            "mode": verdict.mode.value,
            "passed": verdict.passed,
            "achieved": sorted(verdict.oracle_set),
            "theorem": sorted(verdict.theorem_set),
            "construction_final": verdict.construction_final,
            "discrepancies": verdict.discrepancies,
            "seed": args.seed,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.report)
    return EXIT_OK if verdict.passed else EXIT_DISCREPANCY


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_m < 4:
        raise UsageError("--max-m must be at least 4")
    rows = []
    failed = 0
    for n in range(4, args.max_m + 1, 2):
        for m in range(n, args.max_m + 1, 2):
            shape = GraphShape(m, n)
            entry = {"m": m, "n": n, "max_index": compute_params(shape).max_index}
            try:
                report = verify_trace(generate_trace(shape))
                entry.update(switches=len(report.checks), passed=report.passed,
                             detail=report.summary())
            except ConstructionError as exc:
                entry.update(switches=None, passed=False, detail=str(exc))
            if shape.edges <= args.budget:
                verdict = cross_check(shape, OracleConfig(exhaustive_edge_budget=max(args.budget, 4)))
                entry["oracle"] = verdict.summary()
                entry["passed"] = entry["passed"] and verdict.passed
            failed += not entry["passed"]
            rows.append(entry)
    for entry in rows:
        if not entry["passed"]:
            print(entry["detail"], file=sys.stderr)
    print(f"shapes={len(rows)}")
    print(f"failed={failed}")
    if args.report is not None:
        summary = {"max_m": args.max_m, "shapes": len(rows), "failed": failed, "results": rows}
        _emit(json.dumps(summary, indent=2) + "\n", args.report)
    return EXIT_OK if failed == 0 else EXIT_DISCREPANCY


COMMANDS = {
    "params": cmd_params,
    "ebi": cmd_ebi,
    "construct": cmd_construct,
    "trace": cmd_trace,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bipartite-ebi: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"bipartite-ebi: construction failed: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY


if __name__ == "__main__":
    sys.exit(main())
