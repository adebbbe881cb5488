import sys
from pathlib import Path
from typing import Optional, TextIO

from loguru import logger

from .abc import ABCWriter
from latskew import constants as const, errors


__all__ = ["OutputWriter"]


class OutputWriter(ABCWriter):
    """Writes documents to ``out`` or, when it is not given, to standard output."""
    def __init__(self, out: Optional[Path] = None, stream: Optional[TextIO] = None) -> None:
        self.out = out
        self.stream = stream or sys.stdout

    def emit(self, text: str) -> None:
        if self.out is None:
            self.stream.write(text)
            self.stream.flush()
            return
        self.write(self.out, text)

    def write(self, path: Path, text: str) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline=const.LINE_TERMINATOR) as file:
                file.write(text)
        except OSError as e:
            raise errors.OutputError(path=path, reason=e.strerror)

        logger.debug(f"Wrote {len(text)} characters to {path}")
        return path

    def announce(self, path: Path) -> None:
        """Print a written file path on standard output."""
        self.stream.write(f"{path}{const.LINE_TERMINATOR}")
