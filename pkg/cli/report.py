"""Verification reporting for tailprob.

Contains:
- VerificationReport: Report after the verification suite completes
"""

from dataclasses import dataclass, field
from typing import Any

from cli.verify import CheckResult, Flag
from common.report import Report


@dataclass
class VerificationReport(Report):
    """Report after the verification suite completes.

    JSON schema, keys in this order: {config, checks: [...], flags: [...]}.
    """

    max_n: int
    max_k: int
    checks: list[CheckResult]
    flags: list[Flag] = field(default_factory=list)
    fmt: str = "json"

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": {"max_n": self.max_n, "max_k": self.max_k},
            "checks": [c.as_dict() for c in self.checks],
            "flags": [f.as_dict() for f in self.flags],
        }

    def print(self) -> None:
        """Print the report as JSON, or one line per check in text mode."""
        if self.fmt == "json":
            super().print()
            return

        failed = [c for c in self.checks if not c.passed]
        if failed:
            print(f"Verification: FAILED ({len(failed)} of {len(self.checks)} checks)")
        else:
            print(f"Verification: SUCCESS ({len(self.checks)} checks, max_n={self.max_n}, max_k={self.max_k})")
        for c in self.checks:
            print(f"  {'PASS' if c.passed else 'FAIL'} {c.name} [{c.range}] ({c.checked} checked)")
            if c.counterexample is not None:
                print(f"       first counterexample: {c.counterexample}")
        for f in self.flags:
            print(f"  FLAG {f.name}: {f.detail}")

    def success(self) -> bool:
        """Return True if every check passed; flags never fail a run."""
        return all(c.passed for c in self.checks)
