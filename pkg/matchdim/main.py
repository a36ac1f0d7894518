"""
matchdim - exact matching invariants and the (a, b, c, d) graph constructions.

Command-line entry point.
"""
import argparse
import sys
from typing import List, Optional

import structlog

from matchdim import __version__
from matchdim.cli.commands import (
    EXIT_INPUT,
    cmd_construct,
    cmd_invariants,
    cmd_lemmas,
    cmd_suspend,
    cmd_verify,
)
from matchdim.cli.formats import FORMATS
from matchdim.config import get_settings
from matchdim.exceptions import MatchDimError
from matchdim.log_setup import configure_logging

logger = structlog.get_logger()


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="matchdim",
        description="Exact matching invariants and realising constructions for simple graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress (INFO)")
    parser.add_argument("--debug", action="store_true", help="Log solver details (DEBUG)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # construct
    construct = subparsers.add_parser("construct", help="Build the graph realising (a, b, c, d)")
    for name in ("a", "b", "c", "d"):
        construct.add_argument(name, type=int)
    construct.add_argument("-f", "--format", choices=FORMATS, default="json")
    construct.add_argument("-o", "--out", help="Output file (default: standard output)")
    construct.add_argument("--witness", action="store_true", help="Also print the witness sets")
    construct.set_defaults(handler=cmd_construct)

    # invariants
    invariants = subparsers.add_parser("invariants", help="Compute the profile of a graph file")
    invariants.add_argument("path", help="JSON or edge-list file ('-' for standard input)")
    invariants.add_argument("--oracle", action="store_true", help="Cross-check by exhaustive enumeration")
    invariants.add_argument("--witness", action="store_true", help="Include optimal witnesses")
    invariants.set_defaults(handler=cmd_invariants)

    # verify
    verify = subparsers.add_parser("verify", help="Construct and solve every feasible tuple up to a bound")
    verify.add_argument("--max-b", type=int, default=3)
    verify.add_argument("--d-slack", type=int, default=2)
    verify.add_argument("--jobs", type=int, default=settings.default_jobs)
    verify.add_argument("--timings", action="store_true", help="Include elapsed seconds per tuple")
    verify.set_defaults(handler=cmd_verify)

    # suspend
    suspend = subparsers.add_parser("suspend", help="Write the S-suspension of a graph file")
    suspend.add_argument("path")
    suspend.add_argument("--set", default="", help="Comma-separated independent vertex set S")
    suspend.add_argument("-f", "--format", choices=FORMATS, default="json")
    suspend.add_argument("-o", "--out")
    suspend.set_defaults(handler=cmd_suspend)

    # lemmas
    lemmas = subparsers.add_parser("lemmas", help="Run the structural property suites")
    lemmas.add_argument("--corpus-size", type=int, default=200)
    lemmas.add_argument("--seed", type=int, default=None)
    lemmas.set_defaults(handler=cmd_lemmas)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    level = get_settings().log_level
    if args.verbose:
        level = "INFO"
    if args.debug:
        level = "DEBUG"
    configure_logging(level)

    try:
        return args.handler(args)
    except MatchDimError as e:
        logger.debug("Command failed", command=args.command, error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
