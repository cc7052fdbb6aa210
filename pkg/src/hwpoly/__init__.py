"""Exact Hermite and Laguerre polynomials built from Heisenberg-Weyl operator algebra."""

from .algebra import (
    IDENTITY, P, X, GradingError, NonTerminatingSeriesError, OperatorPoly, ScalarGradePoly,
    ad_series, apply_to_constant, bch_factorize_check, commutator, graded_exp,
    op_normal_product, op_power, similarity_conjugate,
)
from .checks import (
    MUTATIONS, SuiteConfig, check_addition_theorem, check_generating_function,
    check_hermite_consistency, check_laguerre_consistency, check_operator_identities, run_all,
)
from .families import (
    GaussWeightedPoly, LaguerreOrder, LaguerreWeightedPoly, falling_factorial, gbinom,
    hermite_addition_rhs, hermite_bivariate_shift, hermite_operator, hermite_recurrence,
    hermite_rodrigues, laguerre_operator, laguerre_recurrence, laguerre_rodrigues, laguerre_sum,
    poly_eval, poly_eval_f,
)
from .opexpr import format_canonical, format_univariate, lower_ast, parse_opexpr
from .poly import BivariatePoly, UnivariatePoly
from .report import CheckReport
from .scalar import I, ONE, SQRT2, ZERO, QuadComplexScalar, scalar_arith

__version__ = "0.1.0"
