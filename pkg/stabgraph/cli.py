from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from stabgraph.constants import DEFAULT_SEED, DEFAULT_TREE_NMAX, DEFAULT_VERIFY_NMAX, ENUMERATION_MAX_N
from stabgraph.report import get_version
from stabgraph.runner import (
    INPUT_FORMATS,
    OUTPUT_FORMATS,
    PROG_NAME,
    cmd_classify,
    cmd_enum,
    cmd_random,
    cmd_verify,
)

VERSION = get_version()
DESCRIPTION = "Classify graphs by how their stability number reacts to added edges."
EPILOG = """\
Examples:
  stabgraph classify graphs.g6
  echo 'C~' | stabgraph classify --output text
  stabgraph classify --format edgelist --output dot graph.txt
  stabgraph verify --suite th2,cycle_parity --nmax 5
  stabgraph verify --list
  stabgraph enum --n 4 --canonical
  stabgraph random --n 10 --count 5 --p 0.3 --seed 7

Exit codes: 0 ok, 1 violations found, 2 input error, 3 enumeration budget exceeded.
Set STABILITY_BUDGET to change the cap on enumerated maximum stable sets.
"""

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class StabgraphArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.stderr.write(f"For help, run: {self.prog} -h\n")
        self.exit(2)


def _probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid probability: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {value}")
    return value


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def create_parser() -> StabgraphArgumentParser:
    parser = StabgraphArgumentParser(
        prog=PROG_NAME,
        description=DESCRIPTION,
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "-V",
        "--version",
        action="version",
        version=f"%(prog)s {VERSION}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-v for info, -vv for debug)",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    classify = commands.add_parser(
        "classify",
        help="classify every graph of a graph6 or edge-list stream",
        description="Classify every graph of a graph6 or edge-list stream.",
    )
    classify.add_argument("--format", choices=INPUT_FORMATS, default="graph6", help="input format")
    classify.add_argument("--output", choices=OUTPUT_FORMATS, default="json", help="report format")
    classify.add_argument(
        "path",
        metavar="FILE",
        type=Path,
        nargs="?",
        help="input file (default: standard input)",
    )

    verify = commands.add_parser(
        "verify",
        help="check the theorem suites over graph populations",
        description="Check the theorem suites over graph populations.",
    )
    verify.add_argument("--suite", default="all", help="comma-separated suite ids, or 'all'")
    verify.add_argument(
        "--nmax",
        type=_non_negative,
        default=DEFAULT_VERIFY_NMAX,
        help=f"largest order of the exhaustive populations, at most {ENUMERATION_MAX_N} (default: {DEFAULT_VERIFY_NMAX})",
    )
    verify.add_argument(
        "--tree-nmax",
        type=_non_negative,
        default=DEFAULT_TREE_NMAX,
        help=f"largest order of the tree population (default: {DEFAULT_TREE_NMAX})",
    )
    verify.add_argument(
        "--labeled-trees",
        action="store_true",
        help="every labeled tree by Prüfer decoding instead of one per isomorphism class",
    )
    verify.add_argument("--seed", type=_non_negative, default=DEFAULT_SEED, help="random seed")
    verify.add_argument(
        "--canonical",
        action="store_true",
        help="one graph per isomorphism class instead of every labeled graph",
    )
    verify.add_argument(
        "--random",
        type=_non_negative,
        default=0,
        metavar="COUNT",
        help="append COUNT seeded random graphs to each exhaustive population",
    )
    verify.add_argument("--jobs", type=int, default=1, help="worker processes (-1: all cores)")
    verify.add_argument("--progress", action="store_true", help="show a progress bar on stderr")
    verify.add_argument("--json", action="store_true", help="write the outcomes as JSON")
    verify.add_argument("--list", action="store_true", help="list the suites and exit")

    enum = commands.add_parser(
        "enum",
        help="print every graph on n vertices as graph6",
        description="Print every graph on n vertices as graph6.",
    )
    enum.add_argument("--n", type=int, required=True, help="number of vertices")
    enum.add_argument("--canonical", action="store_true", help="one graph per isomorphism class")

    random = commands.add_parser(
        "random",
        help="print seeded G(n, p) random graphs as graph6",
        description="Print seeded G(n, p) random graphs as graph6.",
    )
    random.add_argument("--n", type=int, required=True, help="number of vertices")
    random.add_argument("--count", type=_non_negative, default=1, help="number of graphs")
    random.add_argument("--p", type=_probability, default=0.5, help="edge probability")
    random.add_argument("--seed", type=_non_negative, default=DEFAULT_SEED, help="random seed")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if args.command == "classify":
        return cmd_classify(args.path, fmt=args.format, output=args.output)
    if args.command == "verify":
        return cmd_verify(
            args.suite,
            nmax=args.nmax,
            seed=args.seed,
            canonical=args.canonical,
            tree_nmax=args.tree_nmax,
            labeled_trees=args.labeled_trees,
            random_count=args.random,
            jobs=args.jobs,
            progress=args.progress,
            as_json=args.json,
            list_only=args.list,
        )
    if args.command == "enum":
        return cmd_enum(args.n, canonical=args.canonical)
    return cmd_random(args.n, args.count, args.p, args.seed)


if __name__ == "__main__":
    sys.exit(main())
