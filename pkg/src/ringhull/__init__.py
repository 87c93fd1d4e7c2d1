"""Hulls of cyclic codes over Z4 and over Z4[v]/(v^2 - v).

Factor x^n - 1 over Z4, build cyclic codes from factor partitions, compute
duals and hulls, enumerate the achievable hull types, average hull sizes,
and Gray-image parameters.
"""

from .analysis import (
    achievable_check,
    average_dim2_bruteforce,
    average_dim2_formula,
    enumerate_hull_types,
    table1,
)
from .codes_ring import (
    CyclicCodeR,
    HullTypeR,
    RElement,
    RWord,
    dual_r,
    gray_map,
    gray_parameters,
    hull_r,
    make_code_r,
    min_lee_distance,
    parse_r_generator,
    span_of_r_generator,
)
from .codes_z4 import CyclicCodeZ4, dual, hull, make_code
from .cyclotomic import FactorTable, factor_xn_minus_1
from .errors import RingHullError
from .z4poly import Z4Poly, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "CyclicCodeR",
    "CyclicCodeZ4",
    "FactorTable",
    "HullTypeR",
    "RElement",
    "RWord",
    "RingHullError",
    "Z4Poly",
    "achievable_check",
    "average_dim2_bruteforce",
    "average_dim2_formula",
    "dual",
    "dual_r",
    "enumerate_hull_types",
    "factor_xn_minus_1",
    "format_poly",
    "gray_map",
    "gray_parameters",
    "hull",
    "hull_r",
    "make_code",
    "make_code_r",
    "min_lee_distance",
    "parse_poly",
    "parse_r_generator",
    "span_of_r_generator",
    "table1",
]
