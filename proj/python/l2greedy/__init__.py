"""Greedy L2-discrepancy sequences, discrepancy evaluators and verification suites.

Exact values are returned as fractions.Fraction; discrepancies are squared.
"""

from ._core import (
    DomainError,
    ParseError,
    SearchQualityError,
    argmin_G,
    centered_grid,
    eval_G,
    greedy_1d,
    greedy_nd,
    l2_sq,
    l2_sq_curve,
    radical_inverse,
    star_sup,
    symmetrized_van_der_corput,
    van_der_corput,
    verify,
)

__all__ = [
    "DomainError",
    "ParseError",
    "SearchQualityError",
    "argmin_G",
    "centered_grid",
    "eval_G",
    "greedy_1d",
    "greedy_nd",
    "l2_sq",
    "l2_sq_curve",
    "radical_inverse",
    "star_sup",
    "symmetrized_van_der_corput",
    "van_der_corput",
    "verify",
]
