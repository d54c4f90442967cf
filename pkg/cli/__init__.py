"""Command-line surface of tailprob.

This package contains:
- output: Records and csv/json/text emitters
- compare: Exact values against Chebyshev and the normal limit
- verify: The verification suite
- report: VerificationReport
- commands: One function per subcommand
- runner: Dispatch and exit codes
"""

from cli.commands import EngineName, cmd_compare, cmd_deltas, cmd_envelopes, cmd_pn, cmd_table, cmd_verify
from cli.report import VerificationReport
from cli.runner import ExitCode, run

__all__ = [
    "EngineName",
    "ExitCode",
    "VerificationReport",
    "cmd_compare",
    "cmd_deltas",
    "cmd_envelopes",
    "cmd_pn",
    "cmd_table",
    "cmd_verify",
    "run",
]
