"""pytest configuration and fixtures for tailprob tests.

Provides:
- run_cli: Run tailprob.py in a subprocess
- rng: Seeded random generator for property checks
- Markers for unit vs integration tests
"""

import random
import subprocess
import sys
from pathlib import Path

import pytest

# Path to tailprob.py (parent directory of test/)
SCRIPT_DIR = Path(__file__).parent.parent
TAILPROB = SCRIPT_DIR / "tailprob.py"

RANDOM_SEED = 20240611


def run_cli(*args: str, timeout: float = 300) -> subprocess.CompletedProcess[str]:
    """Run tailprob.py with the given arguments and capture its output."""
    return subprocess.run(
        [sys.executable, str(TAILPROB), *args],
        capture_output=True,
        text=True,
        cwd=SCRIPT_DIR,
        timeout=timeout,
    )


def pytest_configure(config: pytest.Config) -> None:
    """Register custom markers."""
    config.addinivalue_line("markers", "unit: mark test as unit test")
    config.addinivalue_line("markers", "integration: mark test as integration test (full-range sweeps)")


@pytest.fixture
def rng() -> random.Random:
    """Random generator with a fixed seed."""
    return random.Random(RANDOM_SEED)
