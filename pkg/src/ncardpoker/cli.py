"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, kernels, oracle, verify
from .counting import CATEGORIES, count_category, decimal_string, probability, total_hands
from .table import FORMATS, build_table, emit, find_crossover

USAGE_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncardpoker",
        description=(
            "Exact counts and probabilities of n-card hands (5 <= n <= 52) from a "
            "standard 52-card deck that contain a straight, a flush, or a full house."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="counts and probabilities for one hand size")
    p_count.add_argument("n", type=int, help="hand size, 0..52")
    p_count.add_argument(
        "--fractions", action="store_true", help="show exact fractions instead of decimals"
    )
    p_count.add_argument(
        "--digits", type=int, default=6, help="significant digits for decimals (default 6)"
    )

    p_table = sub.add_parser("table", help="counts table over a range of hand sizes")
    p_table.add_argument("--from", dest="n_min", type=int, default=5, metavar="N")
    p_table.add_argument("--to", dest="n_max", type=int, default=52, metavar="N")
    p_table.add_argument("--format", choices=FORMATS, default="csv")
    p_table.add_argument(
        "--probabilities",
        action="store_true",
        help="append probability columns (markdown format only)",
    )
    p_table.add_argument("--out", help="write to a file instead of stdout")

    p_cross = sub.add_parser(
        "crossover", help="first hand size where one category overtakes another"
    )
    p_cross.add_argument("first", choices=CATEGORIES)
    p_cross.add_argument("second", choices=CATEGORIES)
    p_cross.add_argument("--from", dest="n_min", type=int, default=5, metavar="N")
    p_cross.add_argument("--to", dest="n_max", type=int, default=52, metavar="N")

    p_verify = sub.add_parser("verify", help="run the cross-checking suite")
    p_verify.add_argument(
        "--slow", action="store_true", help="add n=7 exhaustive enumeration (~1.3e8 hands)"
    )
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    p_verify.add_argument("--workers", type=int, default=1)

    p_plot = sub.add_parser("plot", help="SVG chart of probability vs hand size")
    p_plot.add_argument("--from", dest="n_min", type=int, default=5, metavar="N")
    p_plot.add_argument("--to", dest="n_max", type=int, default=52, metavar="N")
    p_plot.add_argument("--out", help="write to a file instead of stdout")

    p_est = sub.add_parser(
        "estimate", help="seeded Monte Carlo estimate of a containment probability"
    )
    p_est.add_argument("n", type=int, help="hand size, 0..52")
    p_est.add_argument("category", choices=CATEGORIES)
    p_est.add_argument("--samples", type=int, default=10**6)
    p_est.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    p_est.add_argument("--workers", type=int, default=1)

    return parser


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _cmd_count(args, parser) -> int:
    try:
        total = total_hands(args.n)
    except ValueError as exc:
        parser.error(str(exc))
    print(f"n = {args.n}")
    print(f"{'total':<12}{total}")
    for category in CATEGORIES:
        count = count_category(args.n, category)
        prob = probability(count, args.n)
        if args.fractions:
            rendered = f"p = {prob.fraction}"
        else:
            rendered = f"p = {prob.decimal(args.digits)}"
        print(f"{category:<12}{count:<18}{rendered}")
    return 0


def _cmd_table(args, parser) -> int:
    if args.probabilities and args.format != "markdown":
        parser.error("--probabilities is only supported with --format markdown")
    try:
        counts = build_table(args.n_min, args.n_max)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "markdown" and args.probabilities:
        from .table import to_markdown

        text = to_markdown(counts, probabilities=True)
    else:
        text = emit(counts, args.format)
    _write_output(text, args.out)
    return 0


def _cmd_crossover(args, parser) -> int:
    try:
        report = find_crossover(args.first, args.second, args.n_min, args.n_max)
    except ValueError as exc:
        parser.error(str(exc))
    scanned = f"range [{report.n_min}, {report.n_max}]"
    if report.first_n is None:
        print(f"{report.first_category} never exceeds {report.second_category} in {scanned}")
    else:
        print(
            f"{report.first_category} first exceeds {report.second_category} "
            f"at n = {report.first_n} ({scanned})"
        )
    return 0


def _cmd_verify(args, parser) -> int:
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    mode = "slow" if args.slow else "fast"
    report = verify.run_verification(mode, workers=args.workers)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for line in report.summary_lines():
            print(line)
    return 0 if report.passed else 1


def _cmd_plot(args, parser) -> int:
    try:
        counts = build_table(args.n_min, args.n_max)
    except ValueError as exc:
        parser.error(str(exc))
    _write_output(emit(counts, "svg-plot"), args.out)
    return 0


def _cmd_estimate(args, parser) -> int:
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 bits")
    try:
        estimate = oracle.monte_carlo(
            args.n, args.category, args.samples, args.seed, workers=args.workers
        )
    except ValueError as exc:
        parser.error(str(exc))
    point = estimate.point
    print(f"n = {estimate.n}, category = {estimate.category}")
    print(f"hits      {estimate.hits} / {estimate.samples}")
    print(f"estimate  {decimal_string(point, 6)}")
    print(f"stderr    {estimate.stderr:.3e}")
    print(
        f"rng       {estimate.rng_algorithm}, seed = {estimate.seed}, "
        f"workers = {estimate.workers}, kernel = {kernels.BACKEND}"
    )
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "table": _cmd_table,
    "crossover": _cmd_crossover,
    "verify": _cmd_verify,
    "plot": _cmd_plot,
    "estimate": _cmd_estimate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args, parser)


def entrypoint() -> None:
    sys.exit(main())
