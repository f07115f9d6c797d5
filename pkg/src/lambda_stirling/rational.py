"""Exact rational scalars.

Everything in this library computes over ``fractions.Fraction``: operations
are exact, results are kept in lowest terms with a positive denominator, and
division by zero raises ``ZeroDivisionError``.  ``Rational`` is an alias so
call sites read as the domain intends.  Rationals cross serialization
boundaries as the string ``"p/q"`` (or ``"p"`` when the denominator is 1),
never as floats.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(value)
