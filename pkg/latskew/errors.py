from typing import Optional

from latskew.types import ExitCode


__all__ = [
    "LatskewError",
    "ParametrizedError",
    "ConfigError",
    "InvalidLattice",
    "NotCoprime",
    "NotUnimodular",
    "OverflowGuard",
    "GeometryViolation",
    "NonFinite",
    "EmptySample",
    "ZeroFrequency",
    "ConvergenceDomain",
    "StepTooLarge",
    "OutputError",
    "LastChunk"
]


class LatskewError(Exception):
    """Base error class for raising exceptions without any special params."""
    msg: str = ""
    exit_code: ExitCode = ExitCode.CONFIG

    def __init__(self, msg: Optional[str] = None) -> None:
        self.msg = msg or self.msg

    def __repr__(self) -> str:
        return repr(self.msg)

    def __str__(self) -> str:
        return str(self.msg)


class ParametrizedError(LatskewError):
    """Error class for exceptions that carry their operands."""
    def __init__(self, msg: Optional[str] = None, **kwargs) -> None:
        self.kwargs = kwargs

        str_kwargs = ", ".join(f"{k}={v}" for k, v in self.kwargs.items())
        delimiter = ": " if self.kwargs else ""
        self.msg = f"{msg or self.msg}{delimiter}{str_kwargs}."


class ConfigError(LatskewError):
    msg = "Invalid run configuration."


class EmptySample(LatskewError):
    msg = "Sample is empty (n=0)."
    exit_code = ExitCode.EMPTY_SAMPLE


class ZeroFrequency(LatskewError):
    msg = "Frequency m=0 is the sample count, not a Weyl sum."


class LastChunk(LatskewError):
    msg = "Last available chunk reached."


class InvalidLattice(ParametrizedError):
    msg = "Lattice shape must lie in the upper half-plane"


class NotCoprime(ParametrizedError):
    msg = "Coefficients are not coprime"

    @property
    def gcd(self) -> int:
        return self.kwargs["gcd"]


class NotUnimodular(ParametrizedError):
    msg = "Completion does not satisfy ad - bc = 1"


class OverflowGuard(ParametrizedError):
    msg = "Integer coordinates would exceed the 64-bit guard"
    exit_code = ExitCode.OVERFLOW


class GeometryViolation(ParametrizedError):
    msg = "Geometric inequality violated"
    exit_code = ExitCode.GEOMETRY


class NonFinite(ParametrizedError):
    msg = "Sample contains a non-finite value"


class ConvergenceDomain(ParametrizedError):
    msg = "Series converges only for Re(s) > 1"
    exit_code = ExitCode.CONVERGENCE


class StepTooLarge(ParametrizedError):
    msg = "Finite-difference error dominates the tolerance"
    exit_code = ExitCode.STEP


class OutputError(ParametrizedError):
    msg = "Unable to write output"
    exit_code = ExitCode.OUTPUT
