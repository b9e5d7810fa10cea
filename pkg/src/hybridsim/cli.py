"""Command-line interface.

Exit status: 0 on success, 1 on usage errors (bad arguments, unknown
metric), 2 on data errors (unreadable or malformed files).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .baselines import CorpusStats
from .evalharness import (
    DataError,
    MetricError,
    align_lexicon,
    calibrate_epsilon,
    format_report,
    generate_pairs_from_records,
    load_lines,
    load_pairs,
    load_records,
    rank_metrics,
    write_pairs,
)
from .registry import UnknownMetric, all_metrics, parse_metric
from .seqmetrics import to_code

USAGE_ERROR = 1
DATA_ERROR = 2

EVAL_EPILOG = """\
Pairs are ranked by descending score; ties keep dataset order.
tfidf and softtfidf take document frequencies from every string in the
dataset (both sides of every pair). --all runs the 81 liuppa:i,j
configurations and 13 baselines."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hybridsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("score", help="score one pair of strings")
    p.add_argument("metric", help="e.g. liuppa:1,1, liuppa:1,1:eps=0.9, jarowinkler")
    p.add_argument("s1")
    p.add_argument("s2")

    p = sub.add_parser(
        "eval",
        help="rank metrics by average precision on a labeled pairs file",
        epilog=EVAL_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--dataset", required=True, help="TSV: s1, s2, 1|0")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--metric", action="append", help="may be repeated")
    group.add_argument("--all", action="store_true")

    p = sub.add_parser("calibrate", help="pick a token threshold from labeled token pairs")
    p.add_argument("--tokens", required=True, help="TSV: token, token, 1|0")
    p.add_argument("--mu1", required=True, type=int, help="metric code 1..9")

    p = sub.add_parser("pairs", help="candidate pairs from records sharing a token")
    p.add_argument("--records", required=True, help="TSV: id, text")
    p.add_argument("--out", required=True)

    p = sub.add_parser("align", help="match lexicon terms against labels")
    p.add_argument("--terms", required=True, help="one term per line")
    p.add_argument("--labels", required=True, help="one label per line")
    p.add_argument("--metric", required=True)
    p.add_argument("--threshold", required=True, type=float)
    p.add_argument("--out", required=True)
    return parser


def _score(args) -> int:
    metric = parse_metric(args.metric, CorpusStats.from_strings([args.s1, args.s2]))
    print(f"{metric(args.s1, args.s2):.4f}")
    return 0


def _eval(args) -> int:
    dataset = load_pairs(args.dataset)
    if dataset.m < 1:
        raise DataError(f"{args.dataset}: no correct pairs, average precision undefined")
    stats = CorpusStats.from_strings(dataset.strings())
    if args.all:
        metrics = all_metrics(stats)
    else:
        metrics = [parse_metric(selector, stats) for selector in args.metric]
    sys.stdout.write(format_report(rank_metrics(metrics, dataset)))
    return 0


def _calibrate(args) -> int:
    try:
        code = to_code(args.mu1)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dataset = load_pairs(args.tokens)
    try:
        eps = calibrate_epsilon([(p.s1, p.s2, p.correct) for p in dataset], code)
    except ValueError as exc:
        raise DataError(f"{args.tokens}: {exc}") from None
    print(f"{eps:.2f}")
    return 0


def _pairs(args) -> int:
    dataset = generate_pairs_from_records(load_records(args.records))
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_pairs(dataset, fh)
    except OSError as exc:
        raise DataError(f"cannot write {args.out}: {exc}") from None
    print(f"{dataset.n} pairs ({dataset.m} correct) written to {args.out}")
    return 0


def _align(args) -> int:
    if not 0 <= args.threshold <= 1:
        raise UsageError("--threshold must lie in [0, 1]")
    terms, labels = load_lines(args.terms), load_lines(args.labels)
    metric = parse_metric(args.metric, CorpusStats.from_strings(terms + labels))
    rows = align_lexicon(terms, labels, metric, args.threshold)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            for term, label, score in rows:
                fh.write(f"{term}\t{label}\t{score:.4f}\n")
    except OSError as exc:
        raise DataError(f"cannot write {args.out}: {exc}") from None
    print(f"{len(rows)} matches written to {args.out}")
    return 0


COMMANDS = {
    "score": _score,
    "eval": _eval,
    "calibrate": _calibrate,
    "pairs": _pairs,
    "align": _align,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except (UsageError, UnknownMetric) as exc:
        print(exc, file=sys.stderr)
        return USAGE_ERROR
    except (DataError, MetricError) as exc:
        print(f"hybridsim: {exc}", file=sys.stderr)
        return DATA_ERROR


run = main

if __name__ == "__main__":
    sys.exit(main())
