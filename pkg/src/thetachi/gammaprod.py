"""Exact products of Gamma values at positive rational arguments.

A ``GammaProduct`` is a rational prefactor times a finite multiset of
Gamma(argument)**exponent factors.  The only rewriting rule used is the
functional equation Gamma(x) = (x - 1) * Gamma(x - 1), applied downward
until every argument lies in (0, 1]; Gamma(1) = 1 disappears into the
prefactor.  A product whose reduced form has no surviving factors is an
exact rational, and that is the only evaluation this module performs:
no floating point, no reflection formula.

The payoff is ``chi_theta_spectral``: the Euler characteristic of the
theta divisor of the Jacobian of a smooth N-sheeted spectral curve is a
closed-form Gamma product whose fractional factors cancel in pairs, so
it evaluates to an exact integer here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arith import DomainError, factorial, format_rational, parse_rational


class IrrationalResidueError(DomainError):
    """Raised when a Gamma product does not reduce to a rational number."""


def _as_positive_rational(value) -> Fraction:
    arg = Fraction(value)
    if arg <= 0:
        raise DomainError(f"Gamma argument must be positive, got {arg}")
    return arg


@dataclass(frozen=True)
class GammaProduct:
    """prefactor * prod Gamma(argument)**exponent, arguments positive rational.

    Factors sharing an argument are merged and zero net exponents dropped on
    construction, so cancellation tests are exact multiset lookups.
    """

    prefactor: Fraction
    factors: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefactor", Fraction(self.prefactor))
        merged: Counter = Counter()
        for arg, exp in self.factors:
            if not isinstance(exp, int):
                raise DomainError(f"Gamma exponent must be an integer, got {exp!r}")
            merged[_as_positive_rational(arg)] += exp
        object.__setattr__(
            self,
            "factors",
            tuple(sorted((a, e) for a, e in merged.items() if e)),
        )

    def as_json(self) -> dict:
        return {
            "prefactor": format_rational(self.prefactor),
            "factors": [
                {"arg": format_rational(a), "exp": e} for a, e in self.factors
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "GammaProduct":
        try:
            prefactor = parse_rational(doc["prefactor"])
            factors = tuple(
                (parse_rational(f["arg"]), f["exp"]) for f in doc["factors"]
            )
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed Gamma product document: {exc}") from None
        return cls(prefactor, factors)

    def __str__(self):
        parts = [format_rational(self.prefactor)]
        for arg, exp in self.factors:
            base = f"Gamma({format_rational(arg)})"
            parts.append(base if exp == 1 else f"{base}**{exp}")
        return " * ".join(parts)


def reduce(x: GammaProduct) -> GammaProduct:
    """Rewrite ``x`` so every surviving Gamma argument is non-integer in (0,1).

    Applies Gamma(a) = (a-1) * Gamma(a-1) repeatedly; the rational
    multipliers (raised to the factor's exponent) accumulate in the
    prefactor, so the value of the product is unchanged.
    """
    prefactor = x.prefactor
    residues = []
    for arg, exp in x.factors:
        mult = Fraction(1)
        while arg > 1:
            arg -= 1
            mult *= arg
        # mult is a product of positive rationals: safe under negative exp
        prefactor *= mult ** exp
        if arg != 1:
            residues.append((arg, exp))
    return GammaProduct(prefactor, tuple(residues))


def eval_exact(x: GammaProduct) -> Fraction:
    """Value of ``x`` as an exact rational.

    Succeeds iff reduction leaves no Gamma factors behind; otherwise the
    value is irrational (Gamma is irrational on non-integer rationals in
    (0,1)) and an IrrationalResidueError reports what survived.
    """
    reduced = reduce(x)
    if reduced.factors:
        leftover = ", ".join(
            f"Gamma({format_rational(a)})**{e}" for a, e in reduced.factors
        )
        raise IrrationalResidueError(f"irrational residue: {leftover}")
    return reduced.prefactor


@dataclass(frozen=True)
class SpectralCurveParams:
    """Shape of a smooth spectral curve: N sheets over a base line, with the
    j-th coefficient of its defining polynomial of degree j*n in the base
    coordinate.  Pairs with genus g = (N-1)(N*n-2)/2; the degenerate g = 0
    pair N=2, n=1 is rejected.
    """

    N: int
    n: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise DomainError(f"need at least two sheets, got N={self.N!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"coefficient degree scale must be >= 1, got n={self.n!r}")
        if (self.N - 1) * (self.N * self.n - 2) <= 0:
            raise DomainError(f"N={self.N}, n={self.n} gives a genus-0 curve")


def genus(p: SpectralCurveParams) -> int:
    """Genus (N-1)(N*n-2)/2 of the smooth spectral curve; always an integer
    since (N-1) and (N*n-2) cannot both be odd.
    """
    return (p.N - 1) * (p.N * p.n - 2) // 2


def chi_theta_gamma_product(p: SpectralCurveParams) -> GammaProduct:
    """Closed-form Euler characteristic of the theta divisor, as a symbolic
    Gamma product:

        (-1)^(g-1) * N^(N^2 n - 2N + 1) * (Nn-1)^(N-1) * Gamma(N)^2
          * prod_{j=1}^{N-1} [Gamma(j)/Gamma(nN+j)] * [Gamma(j(nN-1)/N)/Gamma(j/N)]^2

    The fractional arguments pair up: j(nN-1)/N is congruent to (N-j)/N
    modulo 1, so the j-th positive square cancels the (N-j)-th negative one
    under reduce, leaving an exact rational.
    """
    N, n = p.N, p.n
    g = genus(p)
    prefactor = (
        Fraction(-1 if (g - 1) % 2 else 1)
        * Fraction(N) ** (N * N * n - 2 * N + 1)
        * Fraction(N * n - 1) ** (N - 1)
    )
    factors = [(Fraction(N), 2)]
    for j in range(1, N):
        factors.append((Fraction(j), 1))
        factors.append((Fraction(n * N + j), -1))
        factors.append((Fraction(j * (n * N - 1), N), 2))
        factors.append((Fraction(j, N), -2))
    return GammaProduct(prefactor, tuple(factors))


def chi_theta_spectral(p, n: int | None = None) -> Fraction:
    """Euler characteristic of the theta divisor of the Jacobian of a smooth
    spectral curve, exact.  Accepts a SpectralCurveParams or the pair (N, n).

    The value is always an integer of sign (-1)^(g-1); a non-integer result
    would mean the construction in chi_theta_gamma_product is wrong, so it
    is reported as an error rather than returned.
    """
    if n is not None:
        p = SpectralCurveParams(p, n)
    value = eval_exact(chi_theta_gamma_product(p))
    if value.denominator != 1:
        raise DomainError(f"expected an integer characteristic, got {value}")
    return value


def chi_theta_generic(g: int) -> Fraction:
    """Euler characteristic (-1)^(g-1) * g! of the theta divisor of a generic
    principally polarized abelian variety of dimension g, for comparison
    against the spectral-curve value.
    """
    if not isinstance(g, int) or g < 1:
        raise DomainError(f"dimension must be a positive integer, got {g!r}")
    return Fraction(-factorial(g) if (g - 1) % 2 else factorial(g))
