"""Command-line pipeline: ingest, project, measure, decompose, report.

Exit codes: 0 on success, 1 for analysis/parse failures, 2 for I/O or
usage problems.  All configuration travels through flags; no environment
variables are consulted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .io import (
    FormatError,
    csv_kind,
    parse_csv_affiliations,
    parse_degree_list_csv,
    parse_net_two_mode,
    write_dot,
    write_edge_list_csv,
    write_net_one_mode,
)
from .metrics import network_aggregates
from .projection import project_events
from .report import (
    SCHEMA_VERSION,
    TABLE_KINDS,
    aggregates_to_dict,
    build_report,
    degree_census_aggregates,
    render_table,
    report_to_json,
)


def _slice_threshold(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("slice threshold must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interlock-analyze",
        description=(
            "Analyze a board-membership dataset: project it to the valued "
            "journal network, compute centralities and cohesive subgroups, "
            "and write a JSON report plus optional table and graph exports."
        ),
    )
    parser.add_argument("--input", required=True, help="membership CSV or two-mode NET file")
    parser.add_argument(
        "--format",
        choices=["csv", "net"],
        help="input format; default is guessed from the file extension",
    )
    parser.add_argument(
        "--slice",
        action="append",
        type=_slice_threshold,
        metavar="M",
        help="add an m-slice decomposition at threshold M (repeatable)",
    )
    parser.add_argument(
        "--closeness-variant",
        choices=["paper", "component"],
        default="paper",
        help=(
            "paper: plain reachable-count over distance-sum ratio; "
            "component: the same ratio scaled by the reachable share of the network"
        ),
    )
    parser.add_argument(
        "--density-variant",
        choices=["loops", "no-loops"],
        default="no-loops",
        help="denominator convention for per-component densities",
    )
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument("--export-net", metavar="PATH", help="write the one-mode NET file")
    parser.add_argument("--export-csv", metavar="PATH", help="write the edge-list CSV")
    parser.add_argument("--export-dot", metavar="PATH", help="write the DOT rendering")
    parser.add_argument(
        "--tables", action="store_true", help="print the three report tables to stdout"
    )
    parser.add_argument(
        "--stats-only",
        action="store_true",
        help="emit only the aggregates block (also accepts a degree-census CSV)",
    )
    parser.add_argument(
        "--normalize-names",
        action="store_true",
        help="case-fold actor names when merging identities",
    )
    return parser


def _emit(json_text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(json_text, encoding="utf-8")
    else:
        sys.stdout.write(json_text)


def run_analyze(argv: list[str] | None = None) -> int:
    """Run the pipeline; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return int(exc.code or 0)

    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        print(f"no such input: {args.input}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return 2

    fmt = args.format or ("net" if path.suffix.lower() == ".net" else "csv")
    try:
        if fmt == "csv" and csv_kind(text) == "degrees":
            return _run_degree_census(args, text)
        if fmt == "net":
            two_mode, diags = parse_net_two_mode(
                text, casefold_actors=args.normalize_names
            )
        else:
            two_mode, diags = parse_csv_affiliations(
                text, casefold_actors=args.normalize_names
            )
    except FormatError as exc:
        print(f"{args.input}:{exc.line}: {exc.reason}", file=sys.stderr)
        return 1

    for line, message in diags.warnings:
        print(f"{args.input}:{line}: warning: {message}", file=sys.stderr)

    net = project_events(two_mode)

    if args.stats_only:
        payload = {
            "schema": SCHEMA_VERSION,
            "aggregates": aggregates_to_dict(network_aggregates(net)),
        }
        _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", args.out)
    else:
        report = build_report(
            net,
            slice_thresholds=tuple(args.slice or ()),
            closeness_variant=args.closeness_variant,
            component_density_variant=args.density_variant,
        )
        _emit(report_to_json(report), args.out)
        if args.tables:
            for kind in TABLE_KINDS:
                sys.stdout.write(render_table(report, kind))
                sys.stdout.write("\n")

    if args.export_net:
        Path(args.export_net).write_text(write_net_one_mode(net), encoding="utf-8")
    if args.export_csv:
        Path(args.export_csv).write_text(write_edge_list_csv(net), encoding="utf-8")
    if args.export_dot:
        Path(args.export_dot).write_text(write_dot(net), encoding="utf-8")
    return 0


def _run_degree_census(args: argparse.Namespace, text: str) -> int:
    """Handle a degree-census CSV, which supports only --stats-only."""
    if not args.stats_only:
        print("degree-census input requires --stats-only", file=sys.stderr)
        return 2
    unusable = [
        flag
        for flag, value in (
            ("--slice", args.slice),
            ("--tables", args.tables),
            ("--export-net", args.export_net),
            ("--export-csv", args.export_csv),
            ("--export-dot", args.export_dot),
        )
        if value
    ]
    if unusable:
        print(
            f"{', '.join(unusable)} not available for degree-census input",
            file=sys.stderr,
        )
        return 2
    try:
        degrees, diags = parse_degree_list_csv(text)
    except FormatError as exc:
        print(f"{args.input}:{exc.line}: {exc.reason}", file=sys.stderr)
        return 1
    for line, message in diags.warnings:
        print(f"{args.input}:{line}: warning: {message}", file=sys.stderr)
    try:
        aggregates = degree_census_aggregates(degrees)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    payload = {"schema": SCHEMA_VERSION, "aggregates": aggregates}
    _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", args.out)
    return 0


def main() -> None:
    sys.exit(run_analyze())


if __name__ == "__main__":
    main()
