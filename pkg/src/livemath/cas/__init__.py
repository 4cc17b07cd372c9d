"""Symbolic services behind the augmentation features."""

from .curves import DEFAULT_SAMPLES, Polyline, plot_relation, sample_curve
from .exact import NotRationalError, RationalEnv, rational_eval
from .expansion import ELLIPSIS_THRESHOLD, ExampleExpansion, expand_summation
from .poly import NotPolynomialError, poly_coefficients
from .rootfind import DEFAULT_TOL, MAX_DOUBLINGS, invert_around, invert_numeric
from .simplify import simplify
from .steps import (
    ADD_BOTH_SIDES,
    COMBINE_LIKE_TERMS,
    DIVIDE_BOTH_SIDES,
    FACTOR,
    MULTIPLY_BOTH_SIDES,
    SOLUTION,
    SUBTRACT_BOTH_SIDES,
    ZERO_PRODUCT,
    Step,
    StepTrace,
    factor_quadratic_steps,
    solve_linear_steps,
    step_membership,
)

__all__ = [
    "ADD_BOTH_SIDES",
    "COMBINE_LIKE_TERMS",
    "DEFAULT_SAMPLES",
    "DEFAULT_TOL",
    "DIVIDE_BOTH_SIDES",
    "ELLIPSIS_THRESHOLD",
    "ExampleExpansion",
    "FACTOR",
    "MAX_DOUBLINGS",
    "MULTIPLY_BOTH_SIDES",
    "NotPolynomialError",
    "NotRationalError",
    "Polyline",
    "RationalEnv",
    "SOLUTION",
    "SUBTRACT_BOTH_SIDES",
    "Step",
    "StepTrace",
    "ZERO_PRODUCT",
    "expand_summation",
    "factor_quadratic_steps",
    "invert_around",
    "invert_numeric",
    "plot_relation",
    "poly_coefficients",
    "rational_eval",
    "sample_curve",
    "simplify",
    "solve_linear_steps",
    "step_membership",
]
