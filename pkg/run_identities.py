#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Degenerate Eulerian Identity Verifier - Runner

Verify the whole identity catalog and print a summary table.

Usage:
    python run_identities.py                  # n_max = 8, exact comparison
    python run_identities.py --n-max 10       # larger index range
    python run_identities.py --workers 4      # identities in parallel
    python run_identities.py --fast           # random rational points
"""

import argparse
import sys

from degenerate_eulerian.config import DEFAULT_M_MAX, DEFAULT_N_MAX


def main() -> int:
    parser = argparse.ArgumentParser(description="Verify every registered identity")
    parser.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="Main index bound")
    parser.add_argument("--m-max", type=int, default=DEFAULT_M_MAX, help="Second index bound")
    parser.add_argument("--workers", type=int, default=1, help="Identities run in parallel")
    parser.add_argument("--fast", action="store_true", help="Compare at random rational points")
    args = parser.parse_args()

    argv = [
        "verify", "all",
        "--n-max", str(args.n_max),
        "--m-max", str(args.m_max),
        "--workers", str(args.workers),
        "--format", "text",
    ]
    if args.fast:
        argv.append("--fast")

    from degenerate_eulerian.cli import main as cli_main

    try:
        return cli_main(argv)
    except KeyboardInterrupt:
        print("\nVerification interrupted by user.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
