"""Exact arithmetic substrate: Gaussian rationals, polynomials, rational
functions, truncated Laurent series, and exact linear solving."""

from .scalars import GaussianRational, QQi, I, ONE, ZERO, ExactDomain, FloatDomain
from .poly import Poly, FieldOps, QQI_FIELD
from .ratfunc import RationalFunction, normalize
from .series import INF, LaurentSeries, TruncationError, laurent_expand, series_sqrt
from .linsolve import LinearSolution, solve_linear_exact

__all__ = [
    "GaussianRational",
    "QQi",
    "I",
    "ONE",
    "ZERO",
    "ExactDomain",
    "FloatDomain",
    "Poly",
    "FieldOps",
    "QQI_FIELD",
    "RationalFunction",
    "normalize",
    "INF",
    "LaurentSeries",
    "TruncationError",
    "laurent_expand",
    "series_sqrt",
    "LinearSolution",
    "solve_linear_exact",
]
