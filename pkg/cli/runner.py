"""CLI runner for tailprob.

Contains run() which dispatches a parsed command line to its command,
prints the result and returns the process exit code.
"""

import argparse
import logging
import sys
from enum import IntEnum

from cli.commands import (
    EngineName,
    cmd_compare,
    cmd_deltas,
    cmd_envelopes,
    cmd_pn,
    cmd_table,
    cmd_verify,
)
from cli.output import TABLE_COLUMNS, emit
from common.errors import DomainError
from distribution.threshold import SigmaThreshold

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    """Exit codes for tailprob commands."""

    SUCCESS = 0
    VERIFICATION_FAILED = 1  # verify ran and at least one check failed
    USAGE_ERROR = 2  # bad arguments, same code argparse uses


# Output format used when --format is not given
DEFAULT_FORMATS = {
    "pn": "text",
    "compare": "text",
    "deltas": "text",
    "table": "csv",
    "envelopes": "csv",
    "verify": "json",
}


def _dispatch(args: argparse.Namespace, fmt: str) -> int:
    if args.workers < 1:
        raise DomainError(f"workers must be >= 1, got {args.workers}")
    a = SigmaThreshold.parse(args.a)
    engine = EngineName(args.engine)

    match args.command:
        case "pn":
            emit([cmd_pn(args.n, a, engine, args.digits, args.workers)], fmt, TABLE_COLUMNS, single=True)
        case "table":
            emit(cmd_table(args.first, args.last, a, engine, args.digits, args.workers), fmt, TABLE_COLUMNS)
        case "envelopes":
            emit(cmd_envelopes(args.max_k, args.digits), fmt)
        case "deltas":
            emit(cmd_deltas(args.k, args.digits), fmt)
        case "compare":
            emit([cmd_compare(args.n, a, args.digits)], fmt, single=True)
        case "verify":
            report = cmd_verify(args.max_n, args.max_k, fmt, args.workers)
            report.print()
            if not report.success():
                failed = [c.name for c in report.checks if not c.passed]
                logger.warning(f"Verification failed: {', '.join(failed)}")
                return ExitCode.VERIFICATION_FAILED
        case _:
            raise DomainError(f"unknown command {args.command!r}")
    return ExitCode.SUCCESS


def run(args: argparse.Namespace) -> int:
    """Run the parsed command. Returns exit code."""
    fmt = args.format or DEFAULT_FORMATS[args.command]
    if args.command == "verify" and fmt == "csv":
        print("error: verify reports are json or text", file=sys.stderr)
        return ExitCode.USAGE_ERROR

    try:
        return _dispatch(args, fmt)
    except DomainError as e:
        logger.debug(f"Rejected arguments: {e}")
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE_ERROR
