"""Exact analysis of finite-dimensional Leibniz n-algebras.

Structure constants over the rationals, the fundamental identity, Lie-central
series and classification flags, upper bounds for the dimension of the Schur
Lie-multiplier, and a Pascal-triangle identity with an enumeration check.
"""

from .algebra import (
    IdentityViolation,
    StructureConstants,
    check_fundamental_identity,
    eval_bracket,
    eval_lie_bracket,
    eval_lie_bracket_alt,
    ideal_closure,
    is_ideal,
    is_n_lie,
    leibnizator,
    quotient,
)
from .bounds import AlgebraParams, BoundItem, BoundReport, best_bounds, binom, bound_value, relative_constraints
from .io import builtin, builtin_algebra, format_algebra, parse_algebra
from .linalg import Subspace, intersect, kernel, member, rref, span, subspace_sum, vec
from .report import AnalysisReport, analyze, render_report
from .series import (
    ClassificationReport,
    classify,
    lie_center,
    lie_product_subspace,
    lower_lie_series,
    lower_series,
    relative_gap,
    upper_lie_series,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams", "AnalysisReport", "BoundItem", "BoundReport", "ClassificationReport",
    "IdentityViolation", "StructureConstants", "Subspace", "analyze", "best_bounds", "binom",
    "bound_value", "builtin", "builtin_algebra", "check_fundamental_identity", "classify",
    "eval_bracket", "eval_lie_bracket", "eval_lie_bracket_alt", "format_algebra",
    "ideal_closure", "intersect", "is_ideal", "is_n_lie", "kernel", "leibnizator",
    "lie_center", "lie_product_subspace", "lower_lie_series", "lower_series", "member",
    "parse_algebra", "quotient", "relative_constraints", "relative_gap", "render_report",
    "rref", "span", "subspace_sum", "upper_lie_series", "vec",
]
