"""Dense univariate polynomials over exact scalars, and the deformation scalar.

``Poly`` stores coefficients lowest degree first, trailing zeros stripped, so
equal polynomials have equal coefficient tuples.  The class is deliberately
variable-agnostic: the same representation serves polynomials in the
deformation parameter lambda (rational coefficients) and polynomials in an
evaluation variable x, whose coefficients may themselves be lambda-polynomials
when lambda is kept symbolic.  Arithmetic freely mixes ``Fraction`` and ``int``
scalars with ``Poly`` values, so downstream code never branches on the mode.

Two multiplications exist and must not be confused when polynomials nest:
``p * q`` convolves p and q as polynomials in the *same* variable, while
``p.scale(c)`` multiplies every coefficient of p by the ring element c.  Use
``scale`` whenever c lives one level down (a lambda-polynomial acting on the
coefficients of an x-polynomial).

``LambdaScalar`` selects the coefficient ring: a fixed nonzero rational value
of lambda, or lambda left as a formal symbol.  Instances are immutable and
hashable, which makes them usable as cache keys; all values produced here are
immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RingElement = Union[Fraction, "Poly"]


class ExactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


def _coerce(value) -> RingElement:
    if isinstance(value, (Poly, Fraction)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


class Poly:
    """Dense univariate polynomial with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        items = [_coerce(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        self.coeffs = tuple(items)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        # zero polynomial reports -1; callers treat it as the "minus
        # infinity" sentinel and check is_zero before relying on it
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> RingElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -_coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Poly":
        """Multiply every coefficient by the ring element c."""
        c = _coerce(c)
        if c == 0:
            return Poly()
        return Poly([a * c for a in self.coeffs])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        """Long division; coefficients must form a field (rationals)."""
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(quot), Poly(rem)

    def __call__(self, point):
        """Horner evaluation; works for nested coefficients as well."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = f"({c})" if isinstance(c, Poly) else str(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*x")
            else:
                parts.append(f"{cs}*x^{i}")
        return " + ".join(parts)


def exact_div(a: RingElement, b) -> RingElement:
    """Divide a by b, requiring the division to be exact in the ring."""
    if isinstance(b, int):
        b = Fraction(b)
    if isinstance(b, Poly):
        if b.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if b.degree == 0:
            b = b.coeffs[0]
        else:
            numerator = a if isinstance(a, Poly) else Poly([a])
            q, rem = divmod(numerator, b)
            if not rem.is_zero:
                raise ExactDivisionError(f"{a!r} is not divisible by {b!r}")
            return q
    if b == 0:
        raise ZeroDivisionError("division by zero")
    if isinstance(a, Poly):
        return a.scale(Fraction(1) / b)
    return a / b


def eval_element(value: RingElement, point: Fraction) -> Fraction:
    """Evaluate a ring element at a rational lambda (constants pass through)."""
    if isinstance(value, Poly):
        return value(point)
    return value


def format_element(value: RingElement):
    """Serialize a ring element: ``"p/q"`` string, or a list of coefficient
    strings (lowest degree first) for a genuinely non-constant polynomial."""
    if isinstance(value, Poly):
        if value.degree <= 0:
            return str(value.coeff(0))
        return [str(c) for c in value.coeffs]
    return str(value)


def csv_element(value: RingElement) -> str:
    """Single-cell form: polynomial coefficients joined by commas."""
    as_json = format_element(value)
    if isinstance(as_json, list):
        return ",".join(as_json)
    return as_json


@dataclass(frozen=True)
class LambdaScalar:
    """Deformation parameter: a fixed nonzero rational, or symbolic.

    ``element`` is the ring representation of lambda itself, a ``Fraction``
    in fixed mode and the degree-1 ``Poly`` in symbolic mode.
    """

    value: Fraction | None = None

    def __post_init__(self):
        if self.value is not None and self.value == 0:
            raise ValueError("lambda must be nonzero in fixed mode")

    @classmethod
    def fixed(cls, value) -> "LambdaScalar":
        return cls(Fraction(value))

    @classmethod
    def symbolic(cls) -> "LambdaScalar":
        return cls(None)

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def element(self) -> RingElement:
        if self.value is None:
            return Poly([0, 1])
        return self.value

    def __str__(self) -> str:
        return "symbolic" if self.value is None else str(self.value)


SYMBOLIC = LambdaScalar.symbolic()


def falling_factorial_poly(n: int, lam: LambdaScalar) -> Poly:
    """Generalized falling factorial x(x-lam)(x-2*lam)...(x-(n-1)*lam) as a
    polynomial in x; the empty product (n=0) is 1."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    result = Poly.one()
    lam_elem = lam.element
    for i in range(n):
        result = result * Poly([-(i * lam_elem), 1])
    return result
