"""Command-line frontend: gen, census, verify, render, and oracle subcommands.

Exit codes: 0 success / all checks pass, 1 verification or cross-check
failure, 2 usage or I/O error.  All numeric output is exact ("num/den"
strings or integers); only the SVG renderer rounds to floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import oracle
from .arrangement import (
    EuclideanCensus,
    build_arrangement,
    dualize_chain,
    euclidean_census,
)
from .chain import (
    Chain,
    ChainValidityError,
    FlatteningDivergence,
    dump_chain,
    generate_chain,
    load_chain,
    validate_chain,
)
from .projective import ProjectiveCensus, projective_census
from .render import render_arrangement, render_chain
from .verify import (
    DEFAULT_ORACLE_CAP,
    check_chain,
    full_verification,
    verify_iteration,
)

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"iteration must be >= 1, got {value}")
    return value


def _parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(lo)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if not values or values[0] < 1:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return values


def _parse_exponents(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k[,k...], got {text!r}")
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("flatten exponents must be >= 1")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kochdual",
        description="Koch chains, their dual line arrangements, and exact face censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a chain and print it as JSON")
    gen.add_argument("-s", "--size", type=_positive_int, required=True, metavar="S")
    gen.add_argument("--flatten-exp", type=_parse_exponents, metavar="K[,K...]")
    gen.add_argument("--out", type=Path)

    census = sub.add_parser("census", help="face census of the dual arrangement")
    census.add_argument("-s", "--size", type=_positive_int, required=True, metavar="S")
    census.add_argument("--projective", action="store_true")
    census.add_argument("--format", choices=("json", "table"), default="json")
    census.add_argument("--flatten-exp", type=_parse_exponents, metavar="K[,K...]")
    census.add_argument("--out", type=Path)

    verify = sub.add_parser("verify", help="run every check over a range of iterations")
    verify.add_argument("-s", "--size", type=_parse_range, metavar="S|A..B")
    verify.add_argument("--range", type=_parse_range, dest="size_range", metavar="A..B")
    verify.add_argument("--chain", type=Path, help="verify a chain JSON file instead")
    verify.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP, metavar="S")
    verify.add_argument("--format", choices=("json", "table"), default="table")
    verify.add_argument(
        "--report-dir",
        type=Path,
        help="write report.csv plus pentagon/face-size figures into this directory",
    )
    verify.add_argument("--out", type=Path)

    render = sub.add_parser("render", help="draw the chain or its dual arrangement as SVG")
    render.add_argument("-s", "--size", type=_positive_int, required=True, metavar="S")
    mode = render.add_mutually_exclusive_group(required=True)
    mode.add_argument("--primal", action="store_true", help="draw the chain")
    mode.add_argument("--dual", action="store_true", help="draw the arrangement")
    render.add_argument("--width", type=int, default=720, metavar="PX")
    render.add_argument("--flatten-exp", type=_parse_exponents, metavar="K[,K...]")
    render.add_argument("--out", type=Path)

    orc = sub.add_parser("oracle", help="brute-force census, cross-checked against the builder")
    orc.add_argument("-s", "--size", type=_positive_int, required=True, metavar="S")
    orc.add_argument("--format", choices=("json", "table"), default="json")
    orc.add_argument("--out", type=Path)

    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _census_table(census: EuclideanCensus) -> str:
    rows = ["section\tedges\tcount"]
    for k in sorted(census.bounded):
        rows.append(f"bounded\t{k}\t{census.bounded[k]}")
    rows.append(f"top\t{census.top_edges}\t1")
    rows.append(f"bottom\t{census.bottom_edges}\t1")
    for section, hist in (("left", census.left), ("right", census.right)):
        for k in sorted(hist):
            rows.append(f"{section}\t{k}\t{hist[k]}")
    return "\n".join(rows) + "\n"


def _projective_table(census: ProjectiveCensus) -> str:
    rows = ["edges\tcount"]
    for k in sorted(census.histogram):
        rows.append(f"{k}\t{census.histogram[k]}")
    return "\n".join(rows) + "\n"


def _make_chain(args) -> Chain:
    return generate_chain(args.size, getattr(args, "flatten_exp", None))


def cmd_gen(args) -> int:
    chain = _make_chain(args)
    validity = validate_chain(chain)
    if not validity.valid:
        print(f"invalid chain: {validity.violations[:5]}", file=sys.stderr)
        return CHECK_FAILURE
    _emit(dump_chain(chain), args.out)
    return 0


def cmd_census(args) -> int:
    chain = _make_chain(args)
    arr = build_arrangement(dualize_chain(chain))
    if args.projective:
        census = projective_census(arr, chain.s)
        text = (
            json.dumps(census.to_json_dict(), indent=2) + "\n"
            if args.format == "json"
            else _projective_table(census)
        )
    else:
        census = euclidean_census(arr, chain.s)
        text = (
            json.dumps(census.to_json_dict(), indent=2) + "\n"
            if args.format == "json"
            else _census_table(census)
        )
    _emit(text, args.out)
    return 0


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.chain is not None:
        chain = load_chain(args.chain.read_text())
        report = check_chain(chain)
        results = []
        if report.passed:
            result, report = verify_iteration(chain, args.oracle_cap)
            results = [result]
    else:
        s_values = args.size or args.size_range
        if s_values is None:
            parser.error("verify needs -s/--size, --range, or --chain")
        results, report = full_verification(s_values, oracle_cap=args.oracle_cap)

    if args.report_dir is not None:
        args.report_dir.mkdir(parents=True, exist_ok=True)
        with open(args.report_dir / "report.csv", "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["check", "status", "expected", "actual", "note"])
            for check in report.checks:
                name, status, expected, actual, note = check.row()
                writer.writerow([name, status, expected, actual, note])
        if results:
            from .figures import write_report_figures

            write_report_figures(results, args.report_dir)

    text = (
        json.dumps(report.to_json_dict(), indent=2) + "\n"
        if args.format == "json"
        else report.format_table() + "\n"
    )
    _emit(text, args.out)
    return 0 if report.passed else CHECK_FAILURE


def cmd_render(args) -> int:
    chain = _make_chain(args)
    if args.primal:
        svg = render_chain(chain, args.width)
    else:
        svg = render_arrangement(build_arrangement(dualize_chain(chain)), args.width)
    _emit(svg, args.out)
    return 0


def cmd_oracle(args) -> int:
    chain = _make_chain(args)
    lines = dualize_chain(chain)
    census = oracle.signvector_census(lines, chain.s)
    text = (
        json.dumps(census.to_json_dict(), indent=2) + "\n"
        if args.format == "json"
        else _census_table(census)
    )
    _emit(text, args.out)
    arr = build_arrangement(lines)
    diff = oracle.compare_census(euclidean_census(arr, chain.s), census)
    proj_match = oracle.projective_histogram(lines) == projective_census(arr).histogram
    if diff or not proj_match:
        print(f"oracle mismatch: {diff or 'projective histograms differ'}", file=sys.stderr)
        return CHECK_FAILURE
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "census":
            return cmd_census(args)
        if args.command == "verify":
            return cmd_verify(args, parser)
        if args.command == "render":
            return cmd_render(args)
        if args.command == "oracle":
            return cmd_oracle(args)
        parser.error(f"unknown command {args.command!r}")
    except (ChainValidityError, FlatteningDivergence) as exc:
        print(f"chain construction failed: {exc}", file=sys.stderr)
        return CHECK_FAILURE
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


if __name__ == "__main__":
    sys.exit(main())
