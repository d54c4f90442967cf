#!/usr/bin/env python3
"""Exact central probabilities of Rademacher sums.

This is a thin entrypoint that delegates to the CLI runner.
"""

import argparse
import logging
import sys

from cli.runner import run
from common.constants import DEFAULT_DIGITS, DEFAULT_MAX_K, DEFAULT_MAX_N

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = "1"
DEFAULT_ENGINE = "direct"
DEFAULT_WORKERS = 1


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--a",
        type=str,
        default=DEFAULT_THRESHOLD,
        help=f"Threshold in standard deviations, as p/q (default: {DEFAULT_THRESHOLD})",
    )
    common.add_argument(
        "--format",
        type=str,
        choices=["csv", "json", "text"],
        default=None,
        help="Output format (default: text for pn/compare/deltas, csv for table/envelopes, json for verify)",
    )
    common.add_argument(
        "--digits",
        type=int,
        default=DEFAULT_DIGITS,
        help=f"Decimal digits shown next to exact values (default: {DEFAULT_DIGITS})",
    )
    common.add_argument(
        "--engine",
        type=str,
        choices=["direct", "recursive", "enumerate", "convolve"],
        default=DEFAULT_ENGINE,
        help=f"How P_n is computed (default: {DEFAULT_ENGINE})",
    )
    common.add_argument(
        "--workers",
        type=int,
        default=DEFAULT_WORKERS,
        help=f"Processes used by exhaustive enumeration (default: {DEFAULT_WORKERS})",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-v info, -vv debug)",
    )
    return common


def main() -> int:
    common = _common_options()
    parser = argparse.ArgumentParser(
        description="Exact P{|S_n| <= a*sqrt(n)} for sums of n Rademacher signs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  Single value:        %(prog)s pn 7
  Reproduce a table:   %(prog)s table 3 23 --format csv
  Full verification:   %(prog)s verify --max-n 2000 --max-k 100

Exit codes: 0 success, 1 verification failure, 2 usage error.
""",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pn = sub.add_parser("pn", parents=[common], help="P_n for one n")
    pn.add_argument("n", type=int, help="Number of summands (n >= 0)")

    table = sub.add_parser("table", parents=[common], help="P_n for a range of n")
    table.add_argument("first", type=int, help="First n")
    table.add_argument("last", type=int, help="Last n (inclusive)")

    envelopes = sub.add_parser("envelopes", parents=[common], help="Block envelopes Q_k^- and Q_k^+")
    envelopes.add_argument(
        "--max-k", type=int, default=DEFAULT_MAX_K, help=f"Last block (default: {DEFAULT_MAX_K})"
    )

    deltas = sub.add_parser("deltas", parents=[common], help="Delta sequence of block k")
    deltas.add_argument("k", type=int, help="Block index (k >= 2)")

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suite")
    verify.add_argument(
        "--max-n", type=int, default=DEFAULT_MAX_N, help=f"Last n checked (default: {DEFAULT_MAX_N})"
    )
    verify.add_argument(
        "--max-k", type=int, default=DEFAULT_MAX_K, help=f"Last block checked (default: {DEFAULT_MAX_K})"
    )

    compare = sub.add_parser("compare", parents=[common], help="Exact value against Chebyshev and normal")
    compare.add_argument("n", type=int, help="Number of summands (n >= 1)")

    args = parser.parse_args()

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level)
    logger.info(f"Command: {args.command}")

    return run(args)


if __name__ == "__main__":
    sys.exit(main())
