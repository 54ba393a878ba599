# -*- coding: utf-8 -*-
"""
Command-line front end.

Usage:
    python -m degenerate_eulerian.cli table eulerian --n-max 5 --format csv
    python -m degenerate_eulerian.cli expand deg-eulerian --order 4 --bind t=2
    python -m degenerate_eulerian.cli verify all --n-max 8
    python -m degenerate_eulerian.cli verify --identity EQ09_WORPITZKY --n-max 6
    python -m degenerate_eulerian.cli list

The document goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 an identity failed, 2 usage error, 3 a binding hit a pole.
"""

import argparse
import logging
import sys
from typing import Dict, List, Optional, Sequence

from .algebra import Rational, rational, variable_name
from .catalog import list_identities, verify, verify_all
from .config import DEFAULT_M_MAX, DEFAULT_N_MAX, EXIT_CODES, GF_KINDS, LOG_FORMAT, OUTPUT_FORMATS, TABLE_KINDS
from .errors import EulerianError, PoleEncountered, UnknownIdentity
from .output import expand_document, list_document, render_document, table_document, verify_document
from .registry import get_check

logger = logging.getLogger(__name__)


def parse_binding(text: str) -> Dict[str, Rational]:
    """Parse "var=p/q" (var may be an ASCII alias such as lambda)."""
    name, sep, value = text.partition("=")
    if not sep:
        raise ValueError(f"binding must look like var=p/q, got {text!r}")
    return {variable_name(name.strip()): rational(value)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenerate_eulerian",
        description="Exact tables, generating-function expansions and identity checks "
                    "for classical and degenerate Eulerian polynomials",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO logging (-vv for DEBUG)")
    commands = parser.add_subparsers(dest="command", required=True)

    table = commands.add_parser("table", help="Emit a triangle or sequence table")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Last row to emit")
    table.add_argument("--format", choices=OUTPUT_FORMATS, default="json")

    expand = commands.add_parser("expand", help="Expand a generating function")
    expand.add_argument("gf", choices=GF_KINDS)
    expand.add_argument("--order", type=int, default=DEFAULT_N_MAX, help="Truncation order")
    expand.add_argument(
        "--bind",
        action="append",
        default=[],
        metavar="VAR=P/Q",
        help="Fix a free parameter to an exact rational (repeatable)",
    )
    expand.add_argument("--format", choices=OUTPUT_FORMATS, default="json")

    verify_cmd = commands.add_parser("verify", help="Verify identities")
    verify_cmd.add_argument("ids", nargs="*", help='Identity tags, or "all"')
    verify_cmd.add_argument("--identity", action="append", default=[], help="Identity tag (repeatable)")
    verify_cmd.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    verify_cmd.add_argument("--m-max", type=int, default=DEFAULT_M_MAX, help="Second index bound for two-index identities")
    verify_cmd.add_argument("--fast", action="store_true", help="Random-point comparison (not for acceptance)")
    verify_cmd.add_argument("--workers", type=int, default=1, help="Parallel identities for 'all'")
    verify_cmd.add_argument("--format", choices=OUTPUT_FORMATS, default="json")

    listing = commands.add_parser("list", help="List the registered identities")
    listing.add_argument("--format", choices=OUTPUT_FORMATS, default="text")

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def cmd_table(args: argparse.Namespace) -> int:
    doc = table_document(args.kind, args.n_max, fmt=args.format)
    sys.stdout.write(render_document(doc))
    return EXIT_CODES["ok"]


def cmd_expand(args: argparse.Namespace) -> int:
    bindings: Dict[str, Rational] = {}
    for text in args.bind:
        bindings.update(parse_binding(text))
    doc = expand_document(args.gf, args.order, bindings, fmt=args.format)
    sys.stdout.write(render_document(doc))
    return EXIT_CODES["ok"]


def cmd_verify(args: argparse.Namespace) -> int:
    tags: List[str] = list(args.ids) + list(args.identity)
    run_all = not tags or "all" in tags
    if run_all:
        reports = verify_all(args.n_max, args.m_max, fast=args.fast, workers=args.workers)
    else:
        for tag in tags:
            get_check(tag)  # reject unknown tags before running anything
        reports = [
            verify(tag, args.n_max, args.m_max if get_check(tag).two_index else None, fast=args.fast)
            for tag in tags
        ]
    params = {
        "ids": "all" if run_all else tags,
        "n_max": args.n_max,
        "m_max": args.m_max,
        "mode": "fast" if args.fast else "exact",
    }
    doc = verify_document(reports, params, fmt=args.format)
    sys.stdout.write(render_document(doc))
    if all(report.passed for report in reports):
        return EXIT_CODES["ok"]
    return EXIT_CODES["identity_failed"]


def cmd_list(args: argparse.Namespace) -> int:
    sys.stdout.write(render_document(list_document(list_identities(), fmt=args.format)))
    return EXIT_CODES["ok"]


COMMANDS = {
    "table": cmd_table,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "list": cmd_list,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_CODES["usage"]

    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except PoleEncountered as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CODES["pole"]
    except UnknownIdentity as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]
    except (EulerianError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]


if __name__ == "__main__":
    sys.exit(main())
