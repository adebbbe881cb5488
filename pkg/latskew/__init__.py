from loguru import logger

from .models import LatticeShape, PrimitiveVector, Completion, OrbitSample, EnumSpec
from .lattice import *
from .orbits import *
from .equidist import *
from .spectral import *
from .harness import Harness


__all__ = [
    "LatticeShape",
    "PrimitiveVector",
    "Completion",
    "OrbitSample",
    "EnumSpec",
    "Harness",
    "bezout",
    "skewness",
    "minimal_completion",
    "signed_ratio",
    "minimal_vector_length",
    "mobius",
    "height",
    "check_geometry",
    "check_table",
    "enumerate_primitive",
    "stream",
    "count_primitive",
    "count_vs_asymptotic",
    "orbit_count_scaling",
    "predicted_count",
    "reduce_mod_one",
    "star_discrepancy",
    "weyl_sums",
    "histogram",
    "interval_frequency",
    "abs_ratio_discrepancy",
    "eval_v",
    "eisenstein_reference",
    "tail_bound",
    "laplacian_residual"
]


logger.disable("latskew")
