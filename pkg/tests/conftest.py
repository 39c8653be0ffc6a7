"""Shared independent oracles for the test suite.

Everything here deliberately avoids the library's own algorithms: monomial
counts by brute-force enumeration, series by naive list convolution against
explicit geometric series, ranks by plain fraction Gauss-Jordan, and numeric
values via mpmath.  Tests compare library output against these.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from mpmath import mp


def brute_monomial_count(weights, degree):
    ranges = [range(degree // w + 1) for w in weights]
    return sum(
        1
        for exps in itertools.product(*ranges)
        if sum(e * w for e, w in zip(exps, weights)) == degree
    )


def naive_expand(char, order):
    """Coefficient list of char up to (excluding) order, aligned at char.shift.

    Numerator factors are multiplied in as explicit two-term polynomials and
    denominator factors as explicit truncated geometric series, through a
    generic fresh-list convolution.
    """
    length = order - char.shift
    coeffs = [0] * length
    coeffs[0] = char.sign

    def convolve(a, b):
        out = [0] * length
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if i + j >= length:
                    break
                out[i + j] += x * y
        return out

    for e in char.numer:
        factor = [0] * length
        factor[0] = 1
        if e < length:
            factor[e] = -1
        coeffs = convolve(coeffs, factor)
    for d in char.denom:
        geometric = [1 if k % d == 0 else 0 for k in range(length)]
        coeffs = convolve(coeffs, geometric)
    return coeffs


def fraction_rank(rows):
    """Rank by textbook Gauss-Jordan over Fraction, no fraction-free tricks."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def mp_char_value(char, q, dps=50):
    """Numeric value of a character product at 0 < q < 1."""
    q = Fraction(q)
    with mp.workdps(dps):
        qv = mp.mpf(q.numerator) / q.denominator
        value = mp.mpf(char.sign) * qv ** char.shift
        for e in char.numer:
            value *= 1 - qv ** e
        for d in char.denom:
            value /= 1 - qv ** d
        return value


def mp_gamma_value(product, dps=60):
    """Numeric value of a Gamma product via mpmath's gamma."""
    with mp.workdps(dps):
        value = mp.mpf(product.prefactor.numerator) / product.prefactor.denominator
        for arg, exp in product.factors:
            value *= mp.gamma(mp.mpf(arg.numerator) / arg.denominator) ** exp
        return value


def rel_err(a, b):
    return abs(a - b) / max(abs(a), abs(b))
