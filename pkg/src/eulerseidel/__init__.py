"""Exact Euler-Seidel matrices for Stirling, Bell and Fubini numbers and polynomials."""
from .euler_seidel import ESMatrix, binomial_transform, build_matrix, first_column, inverse_binomial_transform
from .exact_core import (
    IntPolynomial,
    PolySeries,
    PowerSeries,
    binomial,
    poly_derivative,
    poly_eval_int,
    poly_mul,
    series_compose,
    series_derivative,
    series_exp,
    series_mul,
    series_recip,
)
from .identity_suite import check, check_all
from .sequences import (
    SeqKind,
    SequenceTables,
    bell_number,
    bell_polynomial,
    fubini_number,
    fubini_polynomial,
    gamma_transform,
    stirling2,
)
from .series_engine import egf_dual, egf_dual_poly, ogf_dual, run_series_checks

__version__ = "0.1.0"
