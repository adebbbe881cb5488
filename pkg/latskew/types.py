from enum import Enum, IntEnum


__all__ = [
    "EnumMode",
    "OutputFormat",
    "GeometryCheck",
    "ExitCode",
    "Command",
    "SampleField"
]


class EnumMode(str, Enum):
    BY_NORM = "by-norm"  # |v| <= T
    BY_EPSILON = "by-epsilon"  # Im(gamma z) > eps


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class GeometryCheck(str, Enum):
    DETERMINANT = "determinant"
    SKEW_RANGE = "skew_range"
    COMPLETION_BOUND = "completion_bound"
    ANGLE_BOUND = "angle_bound"
    HEIGHT_IDENTITY = "height_identity"


class ExitCode(IntEnum):
    OK = 0
    GEOMETRY = 1
    CONFIG = 2
    OVERFLOW = 3
    EMPTY_SAMPLE = 4
    CONVERGENCE = 5
    OUTPUT = 6
    STEP = 7


class Command(str, Enum):
    ENUMERATE = "enumerate"
    STATS = "stats"
    WEYL = "weyl"
    ORBIT_COUNT = "orbit-count"
    SERIES = "series"
    REPORT = "report"


class SampleField(str, Enum):
    SKEWNESS = "sk"
    SIGNED_RATIO = "rho"
