"""Necessary constants such as integer guards, tolerances, default values of
parameters, serialization settings etc.
"""

import math
from fractions import Fraction


# Integer coordinates are kept below this so that products of two fit in int64
INT_GUARD = 2 ** 30
INT64_SAFE = 2 ** 62

DEFAULT_Z = "0,1"
DEFAULT_REPORT_NORM = 1000

DEFAULT_CHUNK = 1024
DEFAULT_WORKERS = 1
DEFAULT_BAND_COUNT = 16

DEFAULT_BINS = 50
DEFAULT_FREQUENCIES = (1, 2, 3, 4, 5)
DEFAULT_INTERVAL = (-0.25, 0.0)

DEFAULT_STEP = 1e-3
DEFAULT_TOLERANCE = 1e-2
CONVERGENCE_MARGIN = 1e-6

FLOAT_REL_TOL = 1e-12
BOUNDARY_REL_TOL = 1e-9
TINY = 1e-30

# Limit of eps * N(eps) for +-classes of coprime pairs, independent of the lattice
ORBIT_SCALING_LIMIT = 3 / math.pi
ZETA_2 = math.pi ** 2 / 6

EISENSTEIN_DPS = 30

SCHEMA_VERSION = 1
FLOAT_DIGITS = 17
CSV_HEADER = ("c", "d", "a", "b", "norm_sq", "sk", "rho", "im")
DISCREPANCY_HEADER = ("T", "n", "discrepancy_sk", "discrepancy_rho")
LINE_TERMINATOR = "\n"

REPORT_DIR = "report"
REPORT_SVG = "histogram.svg"
REPORT_CSV = "discrepancy.csv"
REPORT_MD = "summary.md"
REPORT_T_FRACTIONS = (Fraction(1, 10), Fraction(3, 10), Fraction(1))

SVG_WIDTH = 640
SVG_HEIGHT = 360
SVG_MARGIN = 40
