"""Command-line front end.

Subcommands: ``mine`` (the engine), ``oracle`` (exhaustive referee),
``baseline`` (utility-list miner), ``stats`` (paired run + CSV row), and
``gen`` (seeded synthetic datasets).  Exit codes: 0 success, 2 parse or
validation error, 3 arithmetic overflow, 4 conflicting threshold flags,
5 oracle enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .baselines import (
    STATS_CSV_HEADER,
    EnumerationBoundError,
    brute_force_mine,
    collect_stats,
    stats_csv_row,
    utility_list_mine,
)
from .datagen import GenSpec, gen_dataset
from .formats import format_results, load_native, load_spmf, write_native
from .miner import MinerConfig, SearchTrace, mine
from .model import InputError, Threshold, parse_amount

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_OVERFLOW = 3
EXIT_FLAGS = 4
EXIT_BOUND = 5


class FlagError(Exception):
    pass


def _add_dataset_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="transactions file (native) or dataset file (spmf)")
    p.add_argument("--utility-table", help="utility table file (native format only)")
    p.add_argument("--format", choices=["native", "spmf"], default="native")
    p.add_argument("--precision", type=int, default=2, help="decimal digits kept in utilities")


def _add_threshold_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-util", help="absolute minimum utility (decimal)")
    p.add_argument("--min-util-pct", help="minimum utility as a percentage of total utility")


def _add_mine_args(p: argparse.ArgumentParser) -> None:
    _add_dataset_args(p)
    _add_threshold_args(p)
    p.add_argument("--order", choices=["support", "twu"], default="support")
    p.add_argument("--output", help="result file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="huim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, title in [
        ("mine", "mine high-utility itemsets"),
        ("oracle", "exhaustive brute-force reference miner"),
        ("baseline", "utility-list reference miner"),
    ]:
        p = sub.add_parser(name, help=title)
        _add_mine_args(p)
        if name == "oracle":
            p.add_argument("--max-items", type=int, default=20,
                           help="refuse to enumerate above this many occurring items")

    p = sub.add_parser("stats", help="run both miners and emit a stats CSV row")
    _add_mine_args(p)

    p = sub.add_parser("gen", help="generate a seeded native dataset")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--items", type=int, required=True)
    p.add_argument("--transactions", type=int, required=True)
    p.add_argument("--avg-len", type=float, required=True)
    p.add_argument("--skew", type=float, default=1.0)
    p.add_argument("--precision", type=int, default=2)
    p.add_argument("--out-prefix", required=True)
    return parser


def _load(args):
    if args.format == "spmf":
        if args.utility_table:
            raise FlagError("--utility-table does not apply to --format spmf")
        return load_spmf(args.input, args.precision)
    if not args.utility_table:
        raise FlagError("--utility-table is required for --format native")
    return load_native(args.input, args.utility_table, args.precision)


def _threshold(args, precision: int) -> Threshold:
    if (args.min_util is None) == (args.min_util_pct is None):
        raise FlagError("exactly one of --min-util / --min-util-pct is required")
    if args.min_util is not None:
        return Threshold.absolute(parse_amount(args.min_util, precision))
    try:
        ratio = Fraction(args.min_util_pct) / 100
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed percentage {args.min_util_pct!r}") from None
    return Threshold.ratio(ratio)


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _threshold_label(args) -> str:
    return args.min_util if args.min_util is not None else f"{args.min_util_pct}%"


def _run(args) -> int:
    if args.command == "gen":
        spec = GenSpec(
            seed=args.seed,
            n_items=args.items,
            n_transactions=args.transactions,
            avg_tx_len=args.avg_len,
            popularity_skew=args.skew,
            precision=args.precision,
        )
        db, ut = gen_dataset(spec)
        prefix = Path(args.out_prefix)
        prefix.parent.mkdir(parents=True, exist_ok=True)
        write_native(db, ut, f"{prefix}_transactions.txt", f"{prefix}_utilities.txt")
        return EXIT_OK

    db, ut = _load(args)
    threshold = _threshold(args, args.precision)

    if args.command == "mine":
        config = MinerConfig(threshold=threshold, order_strategy=args.order)
        results = mine(db, ut, config)
        _write(format_results(results, args.precision), args.output)
        return EXIT_OK

    if args.command == "oracle":
        results = brute_force_mine(db, ut, threshold, max_items=args.max_items)
        _write(format_results(results, args.precision), args.output)
        return EXIT_OK

    if args.command == "baseline":
        results = utility_list_mine(db, ut, threshold, order_strategy=args.order)
        _write(format_results(results, args.precision), args.output)
        return EXIT_OK

    if args.command == "stats":
        mine_trace = SearchTrace()
        config = MinerConfig(threshold=threshold, order_strategy=args.order)
        engine_results = mine(db, ut, config, trace=mine_trace)
        ul_trace = SearchTrace()
        ul_results = utility_list_mine(
            db, ut, threshold, trace=ul_trace, order_strategy=args.order
        )
        if engine_results != ul_results:
            raise RuntimeError("engine and utility-list miner disagree")
        stats = collect_stats(mine_trace, ul_trace)
        row = stats_csv_row(Path(args.input).stem, _threshold_label(args), args.order, stats)
        _write(STATS_CSV_HEADER + "\n" + row + "\n", args.output)
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except EnumerationBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OverflowError as exc:
        print(f"error: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
