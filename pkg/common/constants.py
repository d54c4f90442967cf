"""Shared constants for tailprob.

Contains:
- TRACE logging level for per-n chatter inside sweeps
- LOG_PROGRESS_INTERVAL for periodic sweep progress
- Default limits used by the library and the CLI
"""

import logging
import os

# TRACE logging level (below DEBUG)
TRACE = 5
logging.addLevelName(TRACE, "TRACE")

# Progress logging interval (configurable via envvar)
LOG_PROGRESS_INTERVAL = int(os.environ.get("TAILPROB_LOG_INTERVAL", "500"))

# Decimal rendering
DEFAULT_DIGITS = 4
MAX_DIGITS = 50

# Verification ranges
DEFAULT_MAX_N = 2000
DEFAULT_MAX_K = 100

# Exhaustive enumeration ceiling: 2**26 sign vectors
ENUMERATE_MAX_N = 26

# Oracle agreement ranges inside the verification suite
ORACLE_ENUMERATE_LIMIT = 20
ORACLE_CONVOLVE_LIMIT = 500

# P{|Z| <= 1} for a standard normal Z, to 10 digits
ONE_SIGMA_MASS = "0.6826894921"

# Envelope distance to ONE_SIGMA_MASS required once k reaches CONVERGENCE_MIN_K
CONVERGENCE_TOLERANCE = "0.01"
CONVERGENCE_MIN_K = 100

# Pascal rows kept by sweeps that walk n upwards
SWEEP_CACHE_ROWS = 4
