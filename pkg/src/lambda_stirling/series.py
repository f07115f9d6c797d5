"""Truncated exponential generating functions over the exact rings.

A ``TruncatedSeries`` of order N stores coefficients a_0..a_N under the EGF
convention: the series represents sum a_n t^n / n!.  Products are therefore
binomial convolutions and coefficients are read off without factorial
bookkeeping.  Binary operations between series of different orders truncate
to the smaller order.  Coefficients are rationals, or lambda-polynomials in
symbolic mode; instances are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, perm

from .poly import Poly, RingElement, _coerce, exact_div, format_element


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        items = tuple(_coerce(c) for c in coeffs)
        if not items:
            raise ValueError("a series needs at least the order-0 coefficient")
        self.coeffs = items

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def exp_linear(cls, c, order: int) -> "TruncatedSeries":
        """e^{c t}: EGF coefficients are the powers c^n."""
        c = _coerce(c)
        coeffs = [Fraction(1)]
        for _ in range(order):
            coeffs.append(coeffs[-1] * c)
        return cls(coeffs)

    @classmethod
    def t_power(cls, m: int, order: int) -> "TruncatedSeries":
        """The monomial t^m, whose EGF coefficient at index m is m!."""
        if m < 0:
            raise ValueError("monomial degree must be nonnegative")
        coeffs = [Fraction(0)] * (order + 1)
        if m <= order:
            coeffs[m] = Fraction(factorial(m))
        return cls(coeffs)

    def coeff(self, n: int) -> RingElement:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _align(self, other: "TruncatedSeries"):
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            coeffs = list(self.coeffs)
            coeffs[0] = coeffs[0] + other
            return TruncatedSeries(coeffs)
        a, b = self._align(other)
        return TruncatedSeries([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self + (-_coerce(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return TruncatedSeries([c * other for c in self.coeffs])
        a, b = self._align(other)
        out = []
        for n in range(len(a)):
            out.append(sum((comb(n, l) * a[l]) * b[n - l] for l in range(n + 1)))
        return TruncatedSeries(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative series power; use inverse()")
        result = TruncatedSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be invertible
        (nonzero rational, or a nonzero constant polynomial)."""
        c0 = self.coeffs[0]
        if isinstance(c0, Poly):
            if c0.degree != 0:
                raise ValueError("constant term is not invertible in the ring")
            c0 = c0.coeffs[0]
        if c0 == 0:
            raise ValueError("constant term is not invertible in the ring")
        inv0 = Fraction(1) / c0
        out: list = [inv0]
        for n in range(1, self.order + 1):
            acc = sum(
                (comb(n, l) * self.coeffs[l]) * out[n - l] for l in range(1, n + 1)
            )
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def divide_by_t_power(self, m: int) -> "TruncatedSeries":
        """Exact division by t^m with EGF reindexing: requires the first m
        coefficients to vanish, returns b with b_n = a_{n+m} * n!/(n+m)! and
        order reduced by m, so that multiplying back by the t^m series
        recovers the input exactly."""
        if m < 1:
            raise ValueError("division order must be positive")
        if m > self.order:
            raise ValueError("division order exceeds truncation order")
        for i in range(m):
            if not self.coeffs[i] == 0:
                raise ValueError(
                    f"coefficient {i} is nonzero; series is not divisible by t^{m}"
                )
        return TruncatedSeries(
            [
                self.coeffs[n + m] * Fraction(1, perm(n + m, m))
                for n in range(self.order - m + 1)
            ]
        )

    def exp(self) -> "TruncatedSeries":
        """Exponential of a series with zero constant term, built from the
        finite power sum 1 + a + a^2/2! + ... up to the truncation order."""
        if not self.coeffs[0] == 0:
            raise ValueError("exp needs a zero constant term")
        acc = TruncatedSeries.one(self.order)
        power = TruncatedSeries.one(self.order)
        for k in range(1, self.order + 1):
            power = power * self * Fraction(1, k)
            acc = acc + power
        return acc

    def exact_scale_div(self, divisor) -> "TruncatedSeries":
        """Divide every coefficient by a ring element, requiring exactness
        (used for the 1/lambda^k prefactors, symbolically as well)."""
        return TruncatedSeries([exact_div(c, divisor) for c in self.coeffs])

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "egf_coeffs": [format_element(c) for c in self.coeffs],
        }

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"
