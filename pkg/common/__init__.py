"""Common modules for tailprob.

This package contains code shared by the library packages and the CLI:
- constants: TRACE level, progress interval, default limits
- errors: Exception hierarchy
- report: Report ABC
"""

from common.constants import (
    DEFAULT_DIGITS,
    DEFAULT_MAX_K,
    DEFAULT_MAX_N,
    ENUMERATE_MAX_N,
    LOG_PROGRESS_INTERVAL,
    MAX_DIGITS,
    ONE_SIGMA_MASS,
    TRACE,
)
from common.errors import DomainError, InvariantViolationError, TailProbError
from common.report import Report

__all__ = [
    # Constants
    "TRACE",
    "LOG_PROGRESS_INTERVAL",
    "DEFAULT_DIGITS",
    "MAX_DIGITS",
    "DEFAULT_MAX_N",
    "DEFAULT_MAX_K",
    "ENUMERATE_MAX_N",
    "ONE_SIGMA_MASS",
    # Exceptions
    "TailProbError",
    "DomainError",
    "InvariantViolationError",
    # Reporting
    "Report",
]
