"""Whitney-type numbers, Dowling and Bell polynomials, and the numeric
Dobinski-style evaluator.

The Whitney-type numbers W(n, k) of parameter m (and shift r) are defined by
expanding (m x + r)^n in the generalized falling-factorial basis with the
powers of m factored out:

    (m x + r)^n = sum_k  W(n, k)  m^k  (x)_{k,lam}.

They satisfy the triangular recurrence W(n+1, k) = W(n, k-1) + (lam*m*k + r) W(n, k),
which is what the tabulation uses; the basis-expansion oracle below is the
independent check.  Dowling polynomials are the row sums d(n, x) =
sum_k W(n, k) x^k with r = 1, and the Bell polynomials are the same row sums
for the plain second-kind triangle.

``dobinski_eval`` sums the infinite-series representation

    d(n, x) = e^{-x/(lam m)} sum_{k>=0} x^k / (k! m^k lam^k) * (lam m k + 1)^n

in high-precision floating point (lam > 0, x >= 0) with a rigorous
geometric-ratio tail bound, and records the exact rational reference value
next to the numeric one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from threading import Lock
from typing import NamedTuple

import mpmath

from .poly import LambdaScalar, Poly, RingElement, exact_div
from .series import TruncatedSeries
from .stirling import NumberTriangle, _triangle, expand_in_falling_basis, stirling2_lambda

_ZERO = Fraction(0)


class UnsupportedDomainError(ValueError):
    """Parameters outside the domain where the numeric series converges."""


def _check_params(m: int, r: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError("parameter m must be a positive integer")
    if not isinstance(r, int) or r < 0:
        raise ValueError("shift r must be a nonnegative integer")


def whitney_r(n: int, k: int, m: int, r: int, lam: LambdaScalar) -> RingElement:
    """Shifted Whitney-type number, tabulated by the recurrence
    W(n+1, k) = W(n, k-1) + (lam*m*k + r) * W(n, k)."""
    _check_params(m, r)
    lam_elem = lam.element
    tri = _triangle(
        ("whitney", m, r, lam),
        lambda: NumberTriangle(lambda row, col: lam_elem * (m * col) + r),
    )
    return tri.value(n, k)


def whitney(n: int, k: int, m: int, lam: LambdaScalar) -> RingElement:
    """Whitney-type number with unit shift (the Dowling-lattice case)."""
    return whitney_r(n, k, m, 1, lam)


_expansion_lock = Lock()
_expansions: dict = {}


def whitney_r_by_expansion(n: int, k: int, m: int, r: int, lam: LambdaScalar) -> RingElement:
    """Definitional oracle: expand (m x + r)^n in the falling-factorial
    basis and divide coefficient k by m^k (the division is exact)."""
    _check_params(m, r)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return _ZERO
    key = (n, m, r, lam)
    with _expansion_lock:
        coefficients = _expansions.get(key)
    if coefficients is None:
        target = Poly([Fraction(r), Fraction(m)]) ** n
        coefficients = expand_in_falling_basis(target, lam).coefficients
        with _expansion_lock:
            _expansions[key] = coefficients
    return exact_div(coefficients[k], Fraction(m) ** k)


def whitney_series(k: int, m: int, r: int, lam: LambdaScalar, order: int) -> TruncatedSeries:
    """EGF route: ((e^{lam m t} - 1)/m)^k e^{r t} / (lam^k k!) carries the
    shifted Whitney-type numbers as EGF coefficients; r = 1 gives the plain
    family.  Symbolic lam divides exactly or raises."""
    _check_params(m, r)
    if k < 0:
        raise ValueError("k must be nonnegative")
    lam_elem = lam.element
    p = (TruncatedSeries.exp_linear(lam_elem * m, order) - 1) ** k
    p = p * TruncatedSeries.exp_linear(Fraction(r), order)
    return p.exact_scale_div(lam_elem**k * Fraction(m) ** k * factorial(k))


def dowling_poly(n: int, x, m: int, lam: LambdaScalar) -> RingElement:
    """Dowling polynomial d(n, x) = sum_k W(n, k) x^k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    return sum(whitney(n, k, m, lam) * x**k for k in range(n + 1))


def bell_poly_lambda(n: int, x, lam: LambdaScalar) -> RingElement:
    """Deformed Bell polynomial: row sum of the plain second-kind triangle
    against powers of x."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    return sum(stirling2_lambda(n, k, lam) * x**k for k in range(n + 1))


def dowling_series(x, m: int, lam: LambdaScalar, order: int) -> TruncatedSeries:
    """Closed Dowling EGF e^t * exp(x (e^{lam m t} - 1)/(lam m)), truncated.
    Needs a fixed rational lambda (the exponential has lambda in a
    denominator)."""
    if lam.is_symbolic:
        raise ValueError("the closed Dowling EGF needs a fixed rational lambda")
    if order < 0:
        raise ValueError("order must be nonnegative")
    _check_params(m, 1)
    x = Fraction(x)
    lm = lam.value * m
    inner = (TruncatedSeries.exp_linear(lm, order) - 1) * (x / lm)
    return inner.exp() * TruncatedSeries.exp_linear(Fraction(1), order)


class EgfCheck(NamedTuple):
    ok: bool
    checked: int
    mismatch: tuple | None


def dowling_egf_check(n_max: int, x, m: int, lam: LambdaScalar) -> EgfCheck:
    """Compare the closed EGF e^t * exp(x (e^{lam m t} - 1)/(lam m)) against
    the Dowling polynomial rows, coefficient by coefficient, for a fixed
    rational lambda."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    series = dowling_series(x, m, lam, n_max)
    x = Fraction(x)
    mismatch = None
    for n in range(n_max + 1):
        lhs = series.coeff(n)
        rhs = dowling_poly(n, x, m, lam)
        if lhs != rhs:
            mismatch = (n, lhs, rhs)
            break
    return EgfCheck(ok=mismatch is None, checked=n_max + 1, mismatch=mismatch)


@dataclass(frozen=True)
class DowlingValue:
    """Numeric Dowling value with its exact reference and error accounting.

    ``numeric`` is an ``mpmath.mpf`` carrying at least 30 significant decimal
    digits; ``tail_bound`` bounds |numeric - true sum| from the truncation
    (conversion round-off is far below it at the working precision).
    """

    n: int
    x: Fraction
    m: int
    lam: Fraction
    exact: Fraction
    numeric: object
    truncation_terms: int
    tail_bound: float


def _to_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / mpmath.mpf(q.denominator)


def dobinski_eval(n: int, x, m: int, lam, tol: float = 1e-12) -> DowlingValue:
    """Sum the Dobinski-style series for d(n, x) at fixed lam > 0, x >= 0.

    Terms t_k = x^k / (k! m^k lam^k) * (lam m k + 1)^n are positive and
    eventually decay super-geometrically; once t_{k+1}/t_k < 1/2 the
    remaining tail is below 2 t_{k+1}.  Summation stops when that bound,
    scaled by the e^{-x/(lam m)} prefactor twice over, falls below tol.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_params(m, 1)
    x = Fraction(x)
    lam = Fraction(lam)
    if lam <= 0:
        raise UnsupportedDomainError("the numeric series needs lambda > 0")
    if x < 0:
        raise UnsupportedDomainError("the numeric series needs x >= 0")
    if not tol > 0:
        raise ValueError("tolerance must be positive")

    exact = dowling_poly(n, x, m, LambdaScalar.fixed(lam))
    with mpmath.workdps(40):
        c = _to_mpf(x / (lam * m))
        prefactor = mpmath.exp(-c)
        tol_scaled = mpmath.mpf(tol) * prefactor
        base = mpmath.mpf(1)  # x^k / (k! m^k lam^k)
        lam_m = _to_mpf(Fraction(lam * m))
        xf = _to_mpf(x)

        def term(k: int, base_k):
            return base_k * (lam_m * k + 1) ** n

        total = term(0, base)
        terms = 1
        previous = total
        for k in range(1, 100000):
            base = base * xf / (lam_m * k)
            t_k = term(k, base)
            if previous > 0 and t_k < previous / 2 and 2 * t_k < tol_scaled:
                tail = float(prefactor * 2 * t_k)
                return DowlingValue(
                    n=n, x=x, m=m, lam=lam, exact=exact,
                    numeric=prefactor * total,
                    truncation_terms=terms, tail_bound=tail,
                )
            total += t_k
            terms += 1
            previous = t_k
        raise ArithmeticError("series failed to reach the tail bound")
