"""Exact multivariate Pascal matrices, Stirling polynomials and Riordan arrays."""
from .errors import (DimensionMismatch, ExpressionSyntaxError, InfiniteSet, MissingValue,
                     MonomialConditionViolated, NonIntegralEntry, NonNilpotent, NonUnit,
                     NonUnitDenominator, NonzeroConstantTerm, SingularJacobian,
                     WindowExceedsCap)
from .mindex import MultiIndex, grevlex_cmp, multi_binom, partial_leq
from .pascal import (ExactMatrix, binomial_transform, build_A, build_D, build_L,
                     build_L_power, build_S, build_U, determinant, inverse,
                     inverse_binomial_transform, matrix_exponential_nilpotent)
from .parser import parse_polynomial, parse_rational_expr
from .pointset import (MonomialIdeal, PointSet, check_monomial_condition, degree_window,
                       minimal_generators, standard_monomials)
from .poly import Polynomial, hasse_derivative, monomial_power, poly_eval
from .riordan import (RiordanBasis, pascal_basis, riordan_inverse, riordan_matrix,
                      riordan_product)
from .series import TruncatedSeries, ts_comp_inverse, ts_compose, ts_recip
from .stirling import (build_stirling_matrix, build_vandermonde_matrix, stirling_number,
                       stirling_poly, stirling_poly_egf, verify_decomposition)

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch",
    "ExactMatrix",
    "ExpressionSyntaxError",
    "InfiniteSet",
    "MissingValue",
    "MonomialConditionViolated",
    "MonomialIdeal",
    "MultiIndex",
    "NonIntegralEntry",
    "NonNilpotent",
    "NonUnit",
    "NonUnitDenominator",
    "NonzeroConstantTerm",
    "PointSet",
    "Polynomial",
    "RiordanBasis",
    "SingularJacobian",
    "TruncatedSeries",
    "WindowExceedsCap",
    "binomial_transform",
    "build_A",
    "build_D",
    "build_L",
    "build_L_power",
    "build_S",
    "build_U",
    "build_stirling_matrix",
    "build_vandermonde_matrix",
    "check_monomial_condition",
    "degree_window",
    "determinant",
    "grevlex_cmp",
    "hasse_derivative",
    "inverse",
    "inverse_binomial_transform",
    "matrix_exponential_nilpotent",
    "minimal_generators",
    "monomial_power",
    "multi_binom",
    "parse_polynomial",
    "parse_rational_expr",
    "partial_leq",
    "pascal_basis",
    "poly_eval",
    "riordan_inverse",
    "riordan_matrix",
    "riordan_product",
    "standard_monomials",
    "stirling_number",
    "stirling_poly",
    "stirling_poly_egf",
    "ts_comp_inverse",
    "ts_compose",
    "ts_recip",
    "verify_decomposition",
]
