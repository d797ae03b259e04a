"""Command-line front end.

Subcommands: `order` runs an ordering strategy over a corpus file and
prints one theme id per line, `analyze` reports distances and blocks
for an orderings file, `stats fisher` computes the exact one-sided
Fisher test, and `validate` lists corpus violations.

Exit status: 0 on success, 1 on validation failure, 2 on parse or
usage errors. Primary output goes to stdout (or --output); diagnostics
go to stderr (or --diagnostics), so the main stream stays a clean
permutation.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

from .analysis import cluster_blocks, distance_matrix, fisher_exact_one_sided
from .chronological import chronological_order, theme_timestamp
from .cohesion import DEFAULT_THRESHOLD, augmented_order
from .io import (
    CorpusFormatError,
    OrderingFormatError,
    parse_corpus,
    parse_ordering_set,
)
from .majority import majority_order
from .model import BlockPartition, Corpus, CorpusValidationError, OrderingResult


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _tie_break(text: str):
    if text == "id":
        return "id"
    try:
        return int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"tie-break must be 'id' or an integer seed, got {text!r}"
        ) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="themeorder",
        description="Order cross-document sentence themes for summarization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    order = sub.add_parser("order", help="order the themes of a corpus file")
    order.add_argument("input", type=Path, help="corpus JSON file")
    order.add_argument(
        "--strategy", required=True, choices=("mo", "co", "augmented"),
        help="mo: majority, co: chronological, augmented: cohesion blocks + co",
    )
    order.add_argument(
        "--threshold", type=_rational, default=None,
        help="relatedness ratio cutoff (augmented only, default 3/5)",
    )
    order.add_argument(
        "--threshold-inclusive", action="store_true",
        help="link theme pairs at ratio == threshold too (augmented only)",
    )
    order.add_argument(
        "--tie-break", type=_tie_break, default=None, metavar="id|SEED",
        help="greedy tie handling (mo only): 'id' or an integer seed",
    )
    order.add_argument(
        "--emit", choices=("order", "graph", "timestamps", "blocks"), default="order",
        help="extra diagnostics to write on the diagnostics stream",
    )
    order.add_argument(
        "--with-text", action="store_true",
        help="append each theme's time stamp sentence text",
    )
    order.add_argument("--output", type=Path, default=None, help="write primary output here")
    order.add_argument(
        "--diagnostics", type=Path, default=None,
        help="write diagnostics here instead of stderr",
    )

    analyze = sub.add_parser("analyze", help="distances and blocks for an orderings file")
    analyze.add_argument("input", type=Path, help="orderings text file")
    stop = analyze.add_mutually_exclusive_group(required=True)
    stop.add_argument("--k", type=int, help="number of blocks to produce")
    stop.add_argument(
        "--threshold", type=_rational, help="stop merging above this distance"
    )
    analyze.add_argument("--output", type=Path, default=None)

    stats = sub.add_parser("stats", help="significance statistics")
    stats_sub = stats.add_subparsers(dest="stat", required=True)
    fisher = stats_sub.add_parser("fisher", help="exact one-sided Fisher test on a 2x2 table")
    fisher.add_argument("cells", type=int, nargs=4, metavar="N", help="table cells a b c d")

    validate = sub.add_parser("validate", help="list corpus invariant violations")
    validate.add_argument("input", type=Path, help="corpus JSON file")

    return parser


@contextmanager
def _open_out(path: Path | None, fallback):
    if path is None:
        yield fallback
    else:
        with open(path, "w", encoding="utf-8") as handle:
            yield handle


def _read(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as exc:
        raise CorpusFormatError(f"cannot read {path}: {exc}") from exc


def _run_strategy(args, corpus: Corpus) -> OrderingResult:
    if args.strategy == "mo":
        return majority_order(corpus, tie_break=args.tie_break or "id")
    if args.strategy == "co":
        return chronological_order(corpus)
    threshold = DEFAULT_THRESHOLD if args.threshold is None else args.threshold
    return augmented_order(
        corpus, threshold=threshold, inclusive=args.threshold_inclusive
    )


def _check_order_flags(args, parser: argparse.ArgumentParser) -> None:
    if args.strategy != "augmented":
        if args.threshold is not None:
            parser.error("--threshold applies only to --strategy augmented")
        if args.threshold_inclusive:
            parser.error("--threshold-inclusive applies only to --strategy augmented")
    if args.strategy != "mo" and args.tie_break is not None:
        parser.error("--tie-break applies only to --strategy mo")
    allowed_emit = {"mo": "graph", "co": "timestamps", "augmented": "blocks"}
    if args.emit != "order" and args.emit != allowed_emit[args.strategy]:
        parser.error(f"--emit {args.emit} applies only to --strategy "
                     f"{next(s for s, e in allowed_emit.items() if e == args.emit)}")


def _block_lines(partition: BlockPartition, with_times: bool) -> list[str]:
    lines = []
    for k, block in enumerate(partition.blocks):
        members = " ".join(block.members)
        if with_times:
            lines.append(f"block_{k} {block.time.isoformat()}: {members}")
        else:
            lines.append(f"block_{k}: {members}")
    return lines


def _cmd_order(args, parser) -> int:
    _check_order_flags(args, parser)
    corpus = parse_corpus(_read(args.input))
    result = _run_strategy(args, corpus)

    lines = []
    for theme_id in result.sequence:
        if args.with_text:
            stamp = theme_timestamp(corpus.themes_by_id[theme_id], corpus)
            lines.append(f"{theme_id}\t{corpus.sentence(stamp.stamp_sentence)}")
        else:
            lines.append(theme_id)
    with _open_out(args.output, sys.stdout) as out:
        if lines:
            out.write("\n".join(lines) + "\n")

    if args.emit != "order":
        if args.emit == "graph":
            diag_lines = result.diagnostics.graph.edge_lines()
        elif args.emit == "timestamps":
            diag_lines = [
                f"{s.theme_id} {s.time.isoformat()} "
                f"{s.stamp_sentence.doc_id} {s.stamp_sentence.position}"
                for s in result.diagnostics.timestamps
            ]
        else:
            diag_lines = _block_lines(result.diagnostics.partition, with_times=True)
        with _open_out(args.diagnostics, sys.stderr) as diag:
            if diag_lines:
                diag.write("\n".join(diag_lines) + "\n")
    return 0


def _cmd_analyze(args) -> int:
    ordering_set = parse_ordering_set(_read(args.input))
    matrix = distance_matrix(ordering_set)
    partition = cluster_blocks(matrix, n_clusters=args.k, threshold=args.threshold)
    with _open_out(args.output, sys.stdout) as out:
        out.write(matrix.tsv())
        out.write("\n")
        out.write("\n".join(_block_lines(partition, with_times=False)) + "\n")
    return 0


def _cmd_fisher(args) -> int:
    a, b, c, d = args.cells
    p = fisher_exact_one_sided(((a, b), (c, d)))
    print(f"{p.numerator}/{p.denominator} {float(p)!r}")
    return 0


def _cmd_validate(args) -> int:
    try:
        parse_corpus(_read(args.input))
    except CorpusValidationError as exc:
        for violation in exc.violations:
            print(violation)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "order":
            return _cmd_order(args, parser)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "stats":
            return _cmd_fisher(args)
        return _cmd_validate(args)
    except (CorpusFormatError, OrderingFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CorpusValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
