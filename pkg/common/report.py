"""Reporting abstractions for tailprob.

Contains:
- Report ABC: Base class for reports printed at the end of a command
"""

import json
from abc import ABC, abstractmethod
from typing import Any


class Report(ABC):
    """Base class for reports; JSON on stdout unless a subclass says otherwise."""

    @abstractmethod
    def to_dict(self) -> dict[str, Any]:
        """Return the report as plain data with a stable key order."""
        pass

    @abstractmethod
    def success(self) -> bool:
        """Return True if the report indicates success."""
        pass

    def print(self) -> None:
        """Print the report to stdout as indented JSON."""
        print(json.dumps(self.to_dict(), indent=2))
