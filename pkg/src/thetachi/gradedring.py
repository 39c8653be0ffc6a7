"""Weighted-homogeneous polynomial systems and a degreewise regularity oracle.

Polynomials are plain dicts mapping exponent tuples to nonzero Fraction
coefficients.  A ``WeightedSystem`` fixes positive variable weights and a
list of homogeneous generators; ``verify_prop1`` then compares, degree by
degree, the actual dimensions of the quotient by the generated ideal
against the dimensions predicted by the product-form character of a
quotient by a regular sequence.  Agreement up to a truncation degree is
reported as CONSISTENT; the first disagreement proves the generators are
not a regular sequence and is reported with its degree.

All ranks are computed exactly (fraction-free elimination on denominator-
cleared integer rows), so a verdict can never be an artifact of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .arith import DomainError, format_rational, parse_rational
from .qchar import char_quotient, expand

Monomial = tuple[int, ...]
Polynomial = dict[Monomial, Fraction]


def _check_weights(weights) -> tuple[int, ...]:
    weights = tuple(weights)
    if not weights:
        raise DomainError("need at least one variable weight")
    for w in weights:
        if not isinstance(w, int) or w < 1:
            raise DomainError(f"variable weights must be positive integers, got {w!r}")
    return weights


def weighted_degree(exps: Monomial, weights) -> int:
    """Total degree of a monomial under the given variable weights."""
    if len(exps) != len(weights):
        raise DomainError(
            f"exponent vector has {len(exps)} entries for {len(weights)} variables"
        )
    return sum(e * w for e, w in zip(exps, weights))


def monomials_of_degree(weights, degree: int) -> list[Monomial]:
    """All exponent vectors of the given weighted degree, ascending
    lexicographic.  The count equals the degree-d coefficient of the
    polynomial-ring character for these weights.
    """
    weights = _check_weights(weights)
    if not isinstance(degree, int) or degree < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {degree!r}")
    out: list[Monomial] = []
    exps = [0] * len(weights)
    last = len(weights) - 1

    def fill(i: int, remaining: int) -> None:
        w = weights[i]
        if i == last:
            if remaining % w == 0:
                exps[i] = remaining // w
                out.append(tuple(exps))
                exps[i] = 0
            return
        for e in range(remaining // w + 1):
            exps[i] = e
            fill(i + 1, remaining - e * w)
        exps[i] = 0

    fill(0, degree)
    return out


def _clean_poly(p, nvars: int) -> Polynomial:
    out: Polynomial = {}
    for exps, coeff in p.items():
        exps = tuple(exps)
        if len(exps) != nvars or any(not isinstance(e, int) or e < 0 for e in exps):
            raise DomainError(f"bad exponent vector {exps!r} for {nvars} variables")
        coeff = Fraction(coeff)
        if coeff:
            out[exps] = out.get(exps, Fraction(0)) + coeff
    return {e: c for e, c in out.items() if c}


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product of two polynomials given as exponent-tuple -> coefficient
    maps over the same variables.
    """
    arities = {len(e) for e in p} | {len(e) for e in q}
    if len(arities) > 1:
        raise DomainError(f"mixed variable counts {sorted(arities)} in product")
    out: Polynomial = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            acc = out.get(key, 0) + c1 * c2
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


class WeightedSystem:
    """Positive variable weights plus homogeneous generators of an ideal.

    Generators are validated at construction: nonzero, consistent arity,
    and weighted-homogeneous (every monomial of generator i has one and the
    same degree, recorded in ``degrees``).
    """

    def __init__(self, weights, generators):
        self.weights = _check_weights(weights)
        clean = []
        degrees = []
        for i, gen in enumerate(generators):
            poly = _clean_poly(gen, len(self.weights))
            if not poly:
                raise DomainError(f"generator {i} is zero")
            degs = {weighted_degree(e, self.weights) for e in poly}
            if len(degs) > 1:
                raise DomainError(
                    f"generator {i} is not homogeneous: degrees {sorted(degs)}"
                )
            clean.append(poly)
            degrees.append(degs.pop())
        self.generators = tuple(clean)
        self.degrees = tuple(degrees)

    def __eq__(self, other):
        if not isinstance(other, WeightedSystem):
            return NotImplemented
        return self.weights == other.weights and self.generators == other.generators

    def __repr__(self):
        return (
            f"WeightedSystem(weights={list(self.weights)}, "
            f"{len(self.generators)} generators of degrees {list(self.degrees)})"
        )

    def as_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "generators": [
                [
                    {"coeff": format_rational(c), "exps": list(e)}
                    for e, c in sorted(gen.items())
                ]
                for gen in self.generators
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "WeightedSystem":
        try:
            weights = doc["weights"]
            generators = [
                {tuple(term["exps"]): parse_rational(term["coeff"]) for term in gen}
                for gen in doc["generators"]
            ]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed system document: {exc}") from None
        return cls(weights, generators)


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    mat = []
    for row in rows:
        scale = lcm(*(c.denominator for c in row))
        ints = [int(c * scale) for c in row]
        shrink = gcd(*ints)
        if shrink > 1:
            ints = [c // shrink for c in ints]
        mat.append(ints)
    return mat


def _rank(rows: list[list[Fraction]], ncols: int) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Rows are denominator-cleared first; every intermediate entry is then a
    minor of the integer matrix and the division by the previous pivot is
    exact, so there is no coefficient blowup beyond determinant size.
    """
    mat = _integer_rows(rows)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot = mat[rank][col]
        top = mat[rank]
        for r in range(rank + 1, len(mat)):
            row = mat[r]
            f = row[col]
            for c in range(col, ncols):
                row[c] = (row[c] * pivot - f * top[c]) // prev
        prev = pivot
        rank += 1
        if rank == len(mat):
            break
    return rank


def ideal_dim(sys: WeightedSystem, degree: int) -> int:
    """Dimension of the degree-d slice of the ideal: the rank of the span of
    all products (monomial of degree d - deg(f_i)) * f_i inside the space
    spanned by the degree-d monomials.
    """
    if not isinstance(degree, int) or degree < 0:
        raise DomainError(f"degree must be a nonnegative integer, got {degree!r}")
    basis = monomials_of_degree(sys.weights, degree)
    column = {m: i for i, m in enumerate(basis)}
    rows = []
    for gen, gen_degree in zip(sys.generators, sys.degrees):
        if degree < gen_degree:
            continue
        for shift in monomials_of_degree(sys.weights, degree - gen_degree):
            row = [Fraction(0)] * len(basis)
            for exps, coeff in gen.items():
                # distinct exps stay distinct after the shift: no accumulation
                row[column[tuple(a + b for a, b in zip(shift, exps))]] = coeff
            rows.append(row)
    return _rank(rows, len(basis))


def quotient_dims(sys: WeightedSystem, up_to: int) -> list[int]:
    """Actual dimensions of (polynomial ring)/(ideal) in degrees 0 .. up_to-1."""
    if not isinstance(up_to, int) or up_to < 1:
        raise DomainError(f"truncation degree must be a positive integer, got {up_to!r}")
    return [
        len(monomials_of_degree(sys.weights, d)) - ideal_dim(sys, d)
        for d in range(up_to)
    ]


@dataclass(frozen=True)
class Prop1Report:
    """Outcome of the degreewise regular-sequence check.

    ``predicted`` holds the character-predicted dimensions (clamped at 0:
    the product form can go negative precisely when regularity fails),
    ``computed`` the true dimensions.  NOT_REGULAR iff they first disagree
    at ``first_mismatch``; a CONSISTENT verdict certifies nothing beyond
    max_degree.
    """

    max_degree: int
    predicted: tuple[int, ...]
    computed: tuple[int, ...]
    first_mismatch: Optional[int]
    verdict: str

    def as_json(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "predicted": list(self.predicted),
            "computed": list(self.computed),
            "first_mismatch": self.first_mismatch,
            "verdict": self.verdict,
        }


def verify_prop1(sys: WeightedSystem, up_to: int = 12) -> Prop1Report:
    """Compare true quotient dimensions with the regular-sequence prediction
    prod(1 - q^deg_f)/prod(1 - q^weight) for all degrees below ``up_to``.

    The prediction is exact iff the generators form a regular sequence, and
    the first divergence (always an excess of the computed dimension) is a
    proof of non-regularity; agreement is only evidence, bounded by up_to.
    """
    if not isinstance(up_to, int) or up_to < 1:
        raise DomainError(f"truncation degree must be a positive integer, got {up_to!r}")
    series = expand(char_quotient(list(sys.weights), list(sys.degrees)), up_to)
    predicted = tuple(max(series.coefficient(d), 0) for d in range(up_to))
    computed = tuple(quotient_dims(sys, up_to))
    first = next((d for d in range(up_to) if predicted[d] != computed[d]), None)
    return Prop1Report(
        max_degree=up_to,
        predicted=predicted,
        computed=computed,
        first_mismatch=first,
        verdict="CONSISTENT" if first is None else "NOT_REGULAR",
    )
