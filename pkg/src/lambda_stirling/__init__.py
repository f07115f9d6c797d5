"""Exact arithmetic for the lambda-deformed Stirling, Whitney/Dowling and
higher-order Bernoulli families.

The deformation replaces ordinary powers by generalized falling factorials
(x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda).  Everything is
computed over the rationals (or over polynomials in lambda when the
parameter is kept symbolic); no floating point enters except in the explicit
numeric series evaluator, which reports a rigorous truncation bound.

Public surface:

* triangles: :func:`stirling2_lambda`, :func:`rstirling2_lambda`,
  :func:`stirling1_lambda`, :func:`rstirling1_lambda`,
  :func:`unsigned_rstirling1_lambda`, :func:`whitney`, :func:`whitney_r`
* polynomials: :func:`dowling_poly`, :func:`bell_poly_lambda`,
  :func:`bernoulli_higher`
* generating functions: :class:`TruncatedSeries`,
  :func:`second_kind_series`, :func:`whitney_series`, :func:`dowling_series`,
  :func:`bernoulli_base_series`
* numeric evaluation: :func:`dobinski_eval`
* verification: :func:`run_suite`, :func:`check_identity`,
  :func:`resolve_theorem13_variant`, :class:`SuiteConfig`
* exact scalars: :class:`LambdaScalar`, :data:`SYMBOLIC`, :class:`Poly`
"""

from .bernoulli import BernoulliTable, bernoulli_base_series, bernoulli_higher
from .identities import (
    CHECKS,
    IdentityReport,
    Providers,
    SuiteConfig,
    SuiteResult,
    Theorem13Resolution,
    check_identity,
    resolve_theorem13_variant,
    run_suite,
)
from .poly import (
    ExactDivisionError,
    LambdaScalar,
    Poly,
    SYMBOLIC,
    eval_element,
    exact_div,
    falling_factorial_poly,
    format_element,
)
from .rational import Rational, format_rational, parse_rational
from .series import TruncatedSeries
from .stirling import (
    BasisExpansion,
    classical_rstirling2,
    convert_plain_from_r,
    convert_r_to_plain,
    expand_in_falling_basis,
    rstirling1_lambda,
    rstirling2_by_difference,
    rstirling2_by_expansion,
    rstirling2_lambda,
    second_kind_series,
    stirling1_lambda,
    stirling2_lambda,
    unsigned_rstirling1_lambda,
)
from .whitney import (
    DowlingValue,
    EgfCheck,
    UnsupportedDomainError,
    bell_poly_lambda,
    dobinski_eval,
    dowling_egf_check,
    dowling_poly,
    dowling_series,
    whitney,
    whitney_r,
    whitney_r_by_expansion,
    whitney_series,
)

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion",
    "BernoulliTable",
    "CHECKS",
    "DowlingValue",
    "EgfCheck",
    "ExactDivisionError",
    "IdentityReport",
    "LambdaScalar",
    "Poly",
    "Providers",
    "Rational",
    "SYMBOLIC",
    "SuiteConfig",
    "SuiteResult",
    "Theorem13Resolution",
    "TruncatedSeries",
    "UnsupportedDomainError",
    "bell_poly_lambda",
    "bernoulli_base_series",
    "bernoulli_higher",
    "check_identity",
    "classical_rstirling2",
    "convert_plain_from_r",
    "convert_r_to_plain",
    "dobinski_eval",
    "dowling_egf_check",
    "dowling_poly",
    "dowling_series",
    "eval_element",
    "exact_div",
    "expand_in_falling_basis",
    "falling_factorial_poly",
    "format_element",
    "format_rational",
    "parse_rational",
    "resolve_theorem13_variant",
    "rstirling1_lambda",
    "rstirling2_by_difference",
    "rstirling2_by_expansion",
    "rstirling2_lambda",
    "run_suite",
    "second_kind_series",
    "stirling1_lambda",
    "stirling2_lambda",
    "unsigned_rstirling1_lambda",
    "whitney",
    "whitney_r",
    "whitney_r_by_expansion",
    "whitney_series",
    "__version__",
]
