from __future__ import annotations

import random
from fractions import Fraction

import pytest

from thetachi import (
    DomainError,
    binomial,
    catalan,
    factorial,
    format_rational,
    parse_rational,
)


def test_factorial_small():
    assert [factorial(k) for k in range(6)] == [1, 1, 2, 6, 24, 120]


def test_factorial_rejects_negative():
    with pytest.raises(DomainError):
        factorial(-1)
    with pytest.raises(DomainError):
        factorial(Fraction(3, 2))


def test_binomial_pascal():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 40)
        k = rng.randrange(0, n + 1)
        if 0 < k:
            assert binomial(n, k) == binomial(n - 1, k - 1) + (
                binomial(n - 1, k) if k <= n - 1 else 0
            )
        assert binomial(n, k) == binomial(n, n - k)


def test_binomial_rejects_out_of_range():
    with pytest.raises(DomainError):
        binomial(3, 4)
    with pytest.raises(DomainError):
        binomial(3, -1)
    with pytest.raises(DomainError):
        binomial(-2, 0)


def test_catalan_values():
    assert [catalan(g) for g in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_catalan_matches_binomial_form():
    for g in range(1, 30):
        assert catalan(g) * (g + 1) == binomial(2 * g, g)


def test_catalan_rejects_nonpositive():
    with pytest.raises(DomainError):
        catalan(0)


def test_parse_rational():
    assert parse_rational("-21") == -21
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-6/8") == Fraction(-3, 4)


def test_parse_rational_rejects_garbage():
    for bad in ("", "1.5", "1/0", "a/b", "1/2/3", "0x10"):
        with pytest.raises(DomainError):
            parse_rational(bad)


def test_format_parse_roundtrip():
    rng = random.Random(11)
    for _ in range(100):
        x = Fraction(rng.randrange(-10**6, 10**6), rng.randrange(1, 10**4))
        assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(7)) == "7"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
