from .writer import OutputWriter
from .commands import *


__all__ = ["OutputWriter", "Harness"]


class Harness(  # noqa
    EnumerateCommand,
    StatsCommand,
    OrbitCountCommand,
    SeriesCommand,
    ReportCommand
):
    """Harness running every command of the command line."""
