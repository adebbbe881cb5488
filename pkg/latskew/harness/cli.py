"""Command line entry point: ``latskew <command> [options]``."""

import argparse
import sys
from typing import Optional
from collections.abc import Sequence

from loguru import logger
from pydantic import ValidationError

from latskew import constants as const, errors, models as mdl, types
from latskew.types import ExitCode
from latskew.utils import from_locals
from . import Harness


__all__ = ["build_parser", "main"]


_HELP = {
    types.Command.ENUMERATE: "write every primitive vector with its minimal completion",
    types.Command.STATS: "equidistribution statistics of sk and rho as JSON",
    types.Command.WEYL: "Weyl sums of sk only",
    types.Command.ORBIT_COUNT: "count cosets with Im(gamma z) > eps along a grid",
    types.Command.SERIES: "truncated series V_m(z, s), optionally with the Laplacian check",
    types.Command.REPORT: "histogram SVG, discrepancy CSV and Markdown summary",
}


def _common() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    lattice = parser.add_argument_group("lattice")
    lattice.add_argument("--z", help="x,y with z = x + iy; exact when both are rational (default 0,1)")
    lattice.add_argument("--z-norm", help="x,n with n = |z|^2, exact for irrational y such as sqrt(3)/2")
    lattice.add_argument("--float", action="store_true", default=False, help="force float arithmetic")

    bound = parser.add_mutually_exclusive_group()
    bound.add_argument("--max-norm", help="enumerate |v| <= T")
    bound.add_argument("--epsilon", help="enumerate cosets with Im(gamma z) > eps")

    parser.add_argument("--workers", type=int, help=f"worker processes (default {const.DEFAULT_WORKERS})")
    parser.add_argument("--chunk", type=int, help=f"c-range per work unit (default {const.DEFAULT_CHUNK})")
    parser.add_argument("--out", help="output file, or directory for report")
    parser.add_argument("--format", choices=[f.value for f in types.OutputFormat])

    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", default=False)
    verbosity.add_argument("-q", "--quiet", action="store_true", default=False)
    return parser


def _statistics(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m-list", help="comma separated nonzero frequencies (default 1..5)")
    parser.add_argument("--bins", type=int, help=f"histogram bins (default {const.DEFAULT_BINS})")
    parser.add_argument("--interval", help="alpha,beta for the rho frequency (default -1/4,0)")
    parser.add_argument("--input", help="recompute from a CSV written by enumerate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latskew",
        description="Minimal completions of primitive lattice vectors and their skewness statistics."
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = _common()
    commands = {
        command: subparsers.add_parser(command.value, parents=[common], help=_HELP[command])
        for command in types.Command
    }

    _statistics(commands[types.Command.STATS])
    _statistics(commands[types.Command.WEYL])
    _statistics(commands[types.Command.REPORT])
    commands[types.Command.ORBIT_COUNT].add_argument("--eps-grid", help="strictly decreasing e1,e2,...")
    commands[types.Command.REPORT].add_argument("--t-grid", help="norm bounds of the discrepancy table")

    series = commands[types.Command.SERIES]
    series.add_argument("--m", type=int, help="frequency (default 0)")
    series.add_argument("--s", help="re[,im] with re > 1")
    series.add_argument("--trunc", type=float, help="norm cutoff of the partial sum")
    series.add_argument("--laplacian-check", action="store_true", default=False)
    series.add_argument("--h", type=float, help=f"stencil step (default {const.DEFAULT_STEP})")
    series.add_argument("--tolerance", type=float, help=f"Richardson tolerance (default {const.DEFAULT_TOLERANCE})")
    series.add_argument("--fixed-cosets", action="store_true", default=False,
                        help="reuse the cosets of z at every stencil point")
    return parser


def _configure_logging(verbose: bool, quiet: bool) -> None:
    level = "DEBUG" if verbose else "WARNING" if quiet else "INFO"
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> {message}")
    logger.enable("latskew")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or ExitCode.OK)

    _configure_logging(args.verbose, args.quiet)
    options = from_locals(vars(args), exclude=("verbose", "quiet"))
    try:
        config = mdl.RunConfig(**options)
        Harness(config).run()
    except ValidationError as e:
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or "options"
            logger.error(f"{location}: {error['msg']}")
        return ExitCode.CONFIG
    except errors.LatskewError as e:
        logger.error(str(e))
        return e.exit_code
    return ExitCode.OK
