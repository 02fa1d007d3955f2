"""Exact values and numerical cross-checks for int_0^inf sin(x)^n / x^q dx."""
from sincpow.exact_core import (
    DivergentIntegral,
    ExactValue,
    GaussianRational,
    IntegralSpec,
    InvalidDomain,
    SincPowError,
    alternating_sum,
    binomial,
    c_constant,
    closed_form,
)

__all__ = [
    "DivergentIntegral",
    "ExactValue",
    "GaussianRational",
    "IntegralSpec",
    "InvalidDomain",
    "SincPowError",
    "alternating_sum",
    "binomial",
    "c_constant",
    "closed_form",
]
