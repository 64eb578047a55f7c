"""Exact complete weight enumerators of p-ary trace codes built from
power-map defining sets, with closed-form predictions and verification."""

from .cyclo import CyclotomicInteger, canonicalize, root_power
from .gfield import (
    FieldContext,
    SolutionSet,
    build_field,
    gcd_exponent,
    get_field,
    legendre,
    linearized_solve,
)
from .charsum import (
    SumReport,
    a_sum,
    b_sum,
    gauss_ext,
    gauss_prime,
    quad_sum,
    solvable_count,
    weil_s,
)
from .codebuild import (
    CodeSpec,
    CompleteWeightEnumerator,
    DefiningSet,
    WeightDistribution,
    defining_set,
    enumerate_bar_direct,
    enumerate_cwe,
    lift_bar,
    power_moments_check,
    set_size_closed,
    symbol_count,
    weight_distribution,
    wmin_wmax,
)
from .oracle import VerifyReport, applicability, predict_cwe, predict_wd, verify

__all__ = [
    "CyclotomicInteger",
    "canonicalize",
    "root_power",
    "FieldContext",
    "SolutionSet",
    "build_field",
    "get_field",
    "gcd_exponent",
    "legendre",
    "linearized_solve",
    "SumReport",
    "gauss_prime",
    "gauss_ext",
    "quad_sum",
    "weil_s",
    "a_sum",
    "b_sum",
    "solvable_count",
    "CodeSpec",
    "DefiningSet",
    "CompleteWeightEnumerator",
    "WeightDistribution",
    "defining_set",
    "set_size_closed",
    "symbol_count",
    "enumerate_cwe",
    "enumerate_bar_direct",
    "lift_bar",
    "weight_distribution",
    "power_moments_check",
    "wmin_wmax",
    "applicability",
    "predict_wd",
    "predict_cwe",
    "verify",
    "VerifyReport",
]
