from abc import ABC, abstractmethod
from pathlib import Path

from latskew.models import RunConfig


__all__ = ["ABCWriter", "ABCHarness"]


class ABCWriter(ABC):
    """Abstract sink for documents and report files."""
    @abstractmethod
    def __init__(self, *args, **kwargs) -> None:
        pass

    @abstractmethod
    def emit(self, text: str) -> None:
        """Write the main document of a command."""

    @abstractmethod
    def write(self, path: Path, text: str) -> Path:
        """Write a named file and return its path."""

    @abstractmethod
    def announce(self, path: Path) -> None:
        """Report a written file to the user."""


class ABCHarness(ABC):
    """Abstract experiment harness."""
    @abstractmethod
    def __init__(self, config: RunConfig, writer: ABCWriter) -> None:
        pass

    @abstractmethod
    def run(self) -> None:
        """Execute the configured command."""
