"""Exact rational scalars and small combinatorial helpers.

Everything here is arbitrary precision: integers are Python ints, rationals
are ``fractions.Fraction`` (always stored reduced, denominator positive).
All functions are pure and all values immutable, so concurrent use is safe.
"""

from __future__ import annotations

import math
from fractions import Fraction


class DomainError(ValueError):
    """Raised when a request falls outside an operation's mathematical domain."""


def factorial(k: int) -> int:
    """k! as an exact integer; k must be a nonnegative integer."""
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"factorial requires a nonnegative integer, got {k!r}")
    return math.factorial(k)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient n!/(k!(n-k)!); requires 0 <= k <= n."""
    if not isinstance(n, int) or not isinstance(k, int) or n < 0 or k < 0:
        raise DomainError(f"binomial requires nonnegative integers, got {n!r}, {k!r}")
    if k > n:
        raise DomainError(f"binomial requires k <= n, got n={n}, k={k}")
    return math.comb(n, k)


def catalan(g: int) -> int:
    """Catalan number binomial(2g, g)/(g + 1); requires g >= 1.

    The division is always exact.
    """
    if not isinstance(g, int) or g < 1:
        raise DomainError(f"catalan requires a positive integer, got {g!r}")
    return binomial(2 * g, g) // (g + 1)


def parse_rational(text: str) -> Fraction:
    """Parse the wire form "p/q" (or just "p") into a reduced Fraction."""
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def format_rational(value: Fraction | int) -> str:
    """Render an exact rational as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))
