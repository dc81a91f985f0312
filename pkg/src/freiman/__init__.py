"""Exact invariants of equigenerated monomial ideals and Freiman classification checks."""

from .errors import (
    FreimanError,
    InternalInvariantError,
    InvalidArgument,
    ParseError,
    ResourceLimit,
    UnsupportedInput,
)
from .ideal import (
    Monomial,
    MonomialIdeal,
    frobenius_primitive_root,
    height,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_equigenerated,
    minimalize,
    pseudo_frobenius_power,
)
from .invariants import (
    FreimanReport,
    HVectorPrefix,
    analytic_spread,
    delta,
    freiman_lower_bound,
    h_vector_prefix,
    minimal_multiplicity_gap,
    power_count_formula,
    power_formula_holds,
    reduction_step_test,
)
from .kernels import BACKEND

__version__ = "0.1.0"
FORMAT_VERSION = 1

__all__ = [
    "BACKEND",
    "FORMAT_VERSION",
    "FreimanError",
    "FreimanReport",
    "HVectorPrefix",
    "InternalInvariantError",
    "InvalidArgument",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "ResourceLimit",
    "UnsupportedInput",
    "analytic_spread",
    "delta",
    "freiman_lower_bound",
    "frobenius_primitive_root",
    "h_vector_prefix",
    "height",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "is_equigenerated",
    "minimal_multiplicity_gap",
    "minimalize",
    "power_count_formula",
    "power_formula_holds",
    "pseudo_frobenius_power",
    "reduction_step_test",
]
