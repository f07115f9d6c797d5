"""Lambda-deformed Stirling-family numbers, computed along independent routes.

The central objects are the second-kind numbers defined by expanding shifted
powers in the generalized falling-factorial basis,

    (x + r)^n = sum_k  T(n, k)  (x)_{k,lam},      (x)_{k,lam} = x(x-lam)...(x-(k-1)lam),

and the first-kind companions obtained by expanding shifted falling (and
rising) factorials in plain powers of x.  Every family satisfies a triangular
recurrence of the shared shape

    T(n+1, k) = T(n, k-1) + c(n, k) * T(n, k),

which ``NumberTriangle`` tabulates lazily.  Alongside the recurrences the
module carries the definitional basis-expansion oracle, the finite-difference
closed form and the EGF route, so every value can be cross-checked by
computations that share no code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from threading import Lock

from .poly import LambdaScalar, Poly, RingElement, falling_factorial_poly
from .series import TruncatedSeries

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NumberTriangle:
    """Lazily grown triangular table driven by a row-extension coefficient.

    ``coeff(n, k)`` supplies the multiplier c(n, k) used to extend row n to
    row n+1.  Values outside 0 <= k <= n are zero.  Growth is guarded by a
    lock so a shared triangle may be queried from several threads; the values
    handed out are immutable.
    """

    __slots__ = ("_rows", "_coeff", "_lock")

    def __init__(self, coeff):
        self._rows = [[_ONE]]
        self._coeff = coeff
        self._lock = Lock()

    def _grow(self, n: int) -> None:
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows) - 1
                prev = self._rows[-1]
                new = []
                for k in range(m + 2):
                    value = _ZERO
                    if 1 <= k:
                        value = value + prev[k - 1]
                    if k <= m:
                        value = value + self._coeff(m, k) * prev[k]
                    new.append(value)
                self._rows.append(new)

    def row(self, n: int) -> tuple:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        self._grow(n)
        return tuple(self._rows[n])

    def value(self, n: int, k: int) -> RingElement:
        if n < 0 or k < 0 or k > n:
            return _ZERO
        self._grow(n)
        return self._rows[n][k]


_cache_lock = Lock()
_triangles: dict = {}


def _triangle(key, make) -> NumberTriangle:
    with _cache_lock:
        tri = _triangles.get(key)
        if tri is None:
            tri = _triangles[key] = make()
    return tri


def _check_shift(r: int) -> None:
    if not isinstance(r, int) or r < 0:
        raise ValueError("shift r must be a nonnegative integer")


def rstirling2_lambda(n: int, k: int, r: int, lam: LambdaScalar) -> RingElement:
    """Entry T(n, k) of the r-shifted second-kind triangle, tabulated by the
    recurrence T(n+1, k) = T(n, k-1) + (lam*k + r) * T(n, k)."""
    _check_shift(r)
    lam_elem = lam.element
    tri = _triangle(
        ("second", r, lam),
        lambda: NumberTriangle(lambda row, col: lam_elem * col + r),
    )
    return tri.value(n, k)


def stirling2_lambda(n: int, k: int, lam: LambdaScalar) -> RingElement:
    """Plain second-kind number: coefficient of (x)_{k,lam} in x^n."""
    return rstirling2_lambda(n, k, 0, lam)


def rstirling1_lambda(n: int, k: int, r: int, lam: LambdaScalar) -> RingElement:
    """Coefficient of x^k in the shifted falling factorial
    (x+r)(x+r-lam)...(x+r-(n-1)lam); row extension multiplies by (x+r-n*lam)."""
    _check_shift(r)
    lam_elem = lam.element
    tri = _triangle(
        ("first-signed", r, lam),
        lambda: NumberTriangle(lambda row, col: r - lam_elem * row),
    )
    return tri.value(n, k)


def stirling1_lambda(n: int, k: int, lam: LambdaScalar) -> RingElement:
    """Coefficient of x^k in the plain falling factorial (x)_{n,lam}."""
    return rstirling1_lambda(n, k, 0, lam)


def unsigned_rstirling1_lambda(n: int, k: int, r: int, lam: LambdaScalar) -> RingElement:
    """Coefficient of x^k in the shifted rising product
    (x+r)(x+r+lam)...(x+r+(n-1)lam)."""
    _check_shift(r)
    lam_elem = lam.element
    tri = _triangle(
        ("first-unsigned", r, lam),
        lambda: NumberTriangle(lambda row, col: r + lam_elem * row),
    )
    return tri.value(n, k)


def rstirling2_by_difference(n: int, k: int, r: int, lam_value) -> Fraction:
    """Finite-difference closed form for a fixed rational lambda:

        lam^(n-k) / k! * sum_{l=0}^{k} C(k,l) (-1)^(k-l) (l + r/lam)^n

    Equals the triangle entry for n >= k and vanishes for 0 <= n < k.
    """
    _check_shift(r)
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    lam_value = Fraction(lam_value)
    if lam_value == 0:
        raise ValueError("lambda must be nonzero")
    shift = Fraction(r) / lam_value
    total = sum(
        comb(k, l) * (-1) ** (k - l) * (l + shift) ** n for l in range(k + 1)
    )
    return lam_value ** (n - k) * Fraction(total, factorial(k))


@dataclass(frozen=True)
class BasisExpansion:
    """A polynomial written in the generalized falling-factorial basis."""

    target: Poly
    lam: LambdaScalar
    coefficients: tuple

    def reconstruct(self) -> Poly:
        """Re-expand sum_k c_k (x)_{k,lam}; must reproduce the target."""
        total = Poly.zero()
        for k, c in enumerate(self.coefficients):
            total = total + falling_factorial_poly(k, self.lam).scale(c)
        return total


def expand_in_falling_basis(target: Poly, lam: LambdaScalar) -> BasisExpansion:
    """Expand a polynomial in the basis (x)_{k,lam} by leading-term
    elimination: the basis is monic of degree k, so coefficients are read
    off from the top degree downward.  This is the definitional oracle the
    recurrences are tested against."""
    if target.is_zero:
        return BasisExpansion(target=target, lam=lam, coefficients=())
    d = target.degree
    basis = [Poly.one()]
    lam_elem = lam.element
    for i in range(d):
        basis.append(basis[-1] * Poly([-(i * lam_elem), 1]))
    coefficients = [Fraction(0)] * (d + 1)
    work = target
    for k in range(d, -1, -1):
        c = work.coeff(k)
        coefficients[k] = c
        if not c == 0:
            work = work - basis[k].scale(c)
    if not work.is_zero:
        raise ArithmeticError("elimination left a nonzero remainder")
    return BasisExpansion(target=target, lam=lam, coefficients=tuple(coefficients))


_expansion_lock = Lock()
_expansions: dict = {}


def rstirling2_by_expansion(n: int, k: int, r: int, lam: LambdaScalar) -> RingElement:
    """Definitional route for the r-shifted second kind: expand (x+r)^n in
    the falling-factorial basis and read off coefficient k."""
    _check_shift(r)
    if n < 0:
        raise ValueError("n must be nonnegative")
    key = (n, r, lam)
    with _expansion_lock:
        coefficients = _expansions.get(key)
    if coefficients is None:
        target = Poly([Fraction(r), Fraction(1)]) ** n
        coefficients = expand_in_falling_basis(target, lam).coefficients
        with _expansion_lock:
            _expansions[key] = coefficients
    if 0 <= k < len(coefficients):
        return coefficients[k]
    return _ZERO


def second_kind_series(k: int, r: int, lam: LambdaScalar, order: int) -> TruncatedSeries:
    """EGF route: the series (e^{lam t} - 1)^k e^{r t} / (lam^k k!) carries
    the r-shifted second-kind numbers T(n, k) as its EGF coefficients.  In
    symbolic mode the lam^k division is exact polynomial division and raises
    if a remainder ever appears."""
    _check_shift(r)
    if k < 0:
        raise ValueError("k must be nonnegative")
    lam_elem = lam.element
    p = (TruncatedSeries.exp_linear(lam_elem, order) - 1) ** k
    p = p * TruncatedSeries.exp_linear(Fraction(r), order)
    return p.exact_scale_div(lam_elem**k * factorial(k))


def convert_r_to_plain(n: int, k: int, r: int, lam: LambdaScalar) -> RingElement:
    """Binomial mix of the plain triangle that reproduces the r-shifted one:
    sum_{l=k}^{n} C(n,l) S2(l,k) r^(n-l)."""
    _check_shift(r)
    return sum(
        (comb(n, l) * Fraction(r) ** (n - l)) * stirling2_lambda(l, k, lam)
        for l in range(k, n + 1)
    )


def convert_plain_from_r(n: int, k: int, r: int, lam: LambdaScalar) -> RingElement:
    """Inverse mix recovering the plain triangle from the r-shifted one:
    sum_{l=k}^{n} C(n,l) T(l,k) (-r)^(n-l)."""
    _check_shift(r)
    return sum(
        (comb(n, l) * Fraction(-r) ** (n - l)) * rstirling2_lambda(l, k, r, lam)
        for l in range(k, n + 1)
    )


def classical_rstirling2(n: int, k: int, r: int) -> int:
    """Ordinary r-shifted second-kind number over the integers, via the
    alternating-sum closed form.  Serves as the independent reference for
    the lam -> 1 specialization."""
    _check_shift(r)
    if n < 0 or k < 0:
        return 0
    total = sum(comb(k, l) * (-1) ** (k - l) * (l + r) ** n for l in range(k + 1))
    value = Fraction(total, factorial(k))
    if value.denominator != 1:
        raise ArithmeticError("alternating sum was not divisible by k!")
    return int(value)
