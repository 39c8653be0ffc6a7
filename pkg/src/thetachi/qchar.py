"""Characters of weighted graded rings in canonical q-product form.

A character here is always of the shape

    sign * q^shift * prod_e (1 - q^e) / prod_d (1 - q^d)

with positive integer exponent multisets.  Every character this library
manipulates (polynomial rings, quotients by homogeneous regular sequences,
q-Euler characteristics of graded complexes) has this form, which makes the
q -> 1 limit a multiset-size check followed by an exact rational product.

Exponent multisets are cancelled against each other and sorted on
construction, so equality of ``CharProduct`` values is structural equality.
Expansions are truncated Laurent series with exact integer coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .arith import DomainError


def _check_exponents(exps, what: str) -> None:
    for e in exps:
        if not isinstance(e, int) or e < 1:
            raise DomainError(f"{what} must be positive integers, got {e!r}")


@dataclass(frozen=True)
class CharProduct:
    """Canonical product form of a graded character.

    ``numer`` and ``denom`` hold the exponents e of the (1 - q^e) factors in
    the numerator and denominator.  Common entries are cancelled and both
    multisets stored sorted ascending, so two equal characters of this shape
    are structurally equal objects.
    """

    sign: int = 1
    shift: int = 0
    numer: tuple[int, ...] = ()
    denom: tuple[int, ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        if not isinstance(self.shift, int):
            raise DomainError(f"shift must be an integer, got {self.shift!r}")
        _check_exponents(self.numer, "numerator exponents")
        _check_exponents(self.denom, "denominator exponents")
        top = Counter(self.numer)
        bot = Counter(self.denom)
        common = top & bot
        object.__setattr__(self, "numer", tuple(sorted((top - common).elements())))
        object.__setattr__(self, "denom", tuple(sorted((bot - common).elements())))

    def inverse(self) -> "CharProduct":
        # sign is its own reciprocal in {+1, -1}
        return CharProduct(self.sign, -self.shift, self.denom, self.numer)

    def __mul__(self, other: "CharProduct") -> "CharProduct":
        if not isinstance(other, CharProduct):
            return NotImplemented
        return CharProduct(
            self.sign * other.sign,
            self.shift + other.shift,
            self.numer + other.numer,
            self.denom + other.denom,
        )

    def __truediv__(self, other: "CharProduct") -> "CharProduct":
        if not isinstance(other, CharProduct):
            return NotImplemented
        return self * other.inverse()

    def as_json(self) -> dict:
        return {
            "sign": self.sign,
            "shift": self.shift,
            "numer": list(self.numer),
            "denom": list(self.denom),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CharProduct":
        try:
            return cls(doc["sign"], doc["shift"], tuple(doc["numer"]), tuple(doc["denom"]))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed character document: {exc}") from None

    def __str__(self):
        def factors(exps):
            counted = Counter(exps)
            parts = []
            for e in sorted(counted):
                base = "(1 - q)" if e == 1 else f"(1 - q^{e})"
                parts.append(base if counted[e] == 1 else f"{base}^{counted[e]}")
            return parts

        head = []
        if self.shift:
            head.append(f"q^{self.shift}")
        head.extend(factors(self.numer))
        if not head:
            head.append("1")
        out = ("-" if self.sign < 0 else "") + " ".join(head)
        bot = factors(self.denom)
        if bot:
            out += " / " + (bot[0] if len(bot) == 1 else "(" + " ".join(bot) + ")")
        return out


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Laurent series with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of q^(offset + i); coefficients are
    valid (exact) for all exponents below ``order``.
    """

    offset: int
    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.order - self.offset:
            raise DomainError(
                f"need order - offset = {self.order - self.offset} coefficients, "
                f"got {len(self.coeffs)}"
            )

    def coefficient(self, exponent: int) -> int:
        """Coefficient of q^exponent; exact zeros below the offset are free."""
        if exponent >= self.order:
            raise DomainError(
                f"coefficient of q^{exponent} is beyond truncation order {self.order}"
            )
        if exponent < self.offset:
            return 0
        return self.coeffs[exponent - self.offset]

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        # the unknown tail of either factor first pollutes exponent
        # order + other.offset, so the product keeps the tighter bound
        offset = self.offset + other.offset
        order = min(self.order + other.offset, other.order + self.offset)
        out = [0] * (order - offset)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= len(out):
                    break
                out[k] += a * b
        return PowerSeries(offset, tuple(out), order)

    def as_json(self) -> dict:
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> "PowerSeries":
        try:
            coeffs = tuple(int(c) for c in doc["coeffs"])
            offset = doc["offset"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed series document: {exc}") from None
        return cls(offset, coeffs, offset + len(coeffs))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.offset + i
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "q" if k == 1 else f"q^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            out = "0"
        else:
            sign, body = terms[0]
            out = ("-" if sign == "-" else "") + body
            for sign, body in terms[1:]:
                out += f" {sign} {body}"
        return out + f" + O(q^{self.order})"


def mul(x: CharProduct, y: CharProduct) -> CharProduct:
    """Product of two characters in canonical form."""
    return x * y


def div(x: CharProduct, y: CharProduct) -> CharProduct:
    """Quotient of two characters in canonical form; always defined since
    every factor (1 - q^e) is invertible as a formal Laurent object.
    """
    return x / y


def char_poly_ring(weights: list[int]) -> CharProduct:
    """Character of a graded polynomial ring with the given variable weights.

    One variable of weight d contributes a factor 1/(1 - q^d).
    """
    weights = list(weights)
    if not weights:
        raise DomainError("a polynomial ring needs at least one variable")
    _check_exponents(weights, "variable weights")
    return CharProduct(denom=tuple(weights))


def char_quotient(weights: list[int], gen_degrees: list[int]) -> CharProduct:
    """Character of the quotient of a weighted polynomial ring by a
    homogeneous regular sequence with the given generator degrees:
    prod(1 - q^deg_f) / prod(1 - q^weight), in canonical form.
    """
    weights = list(weights)
    gen_degrees = list(gen_degrees)
    _check_exponents(weights, "variable weights")
    _check_exponents(gen_degrees, "generator degrees")
    if len(gen_degrees) > len(weights):
        raise DomainError(
            f"more generators ({len(gen_degrees)}) than variables ({len(weights)}): "
            "nominal dimension would be negative"
        )
    return CharProduct(numer=tuple(gen_degrees), denom=tuple(weights))


def q_euler(weights: list[int], gen_degrees: list[int],
            deriv_degrees: list[int]) -> CharProduct:
    """q-Euler characteristic of the graded complex built from ``deriv_degrees``
    commuting degree-raising operators acting on the quotient ring.

    Equals (-1)^g q^(-sum deriv) * char_quotient * prod(1 - q^deg_D) with
    g the number of operators.  Requires exactly as many variables as
    generators plus operators, so the q -> 1 limit exists.
    """
    weights = list(weights)
    gen_degrees = list(gen_degrees)
    deriv_degrees = list(deriv_degrees)
    _check_exponents(weights, "variable weights")
    _check_exponents(gen_degrees, "generator degrees")
    _check_exponents(deriv_degrees, "operator degrees")
    if len(weights) != len(gen_degrees) + len(deriv_degrees):
        raise DomainError("limit undefined: factor counts differ")
    g = len(deriv_degrees)
    return CharProduct(
        sign=-1 if g % 2 else 1,
        shift=-sum(deriv_degrees),
        numer=tuple(gen_degrees) + tuple(deriv_degrees),
        denom=tuple(weights),
    )


def limit_q1(x: CharProduct) -> Fraction:
    """Exact value of the character at q -> 1.

    Each (1 - q^e)/(1 - q^d) pair tends to e/d and q^shift tends to 1, so
    the limit is sign * prod(numer)/prod(denom); it exists precisely when
    the two multisets have equal size.
    """
    if len(x.numer) != len(x.denom):
        raise DomainError(
            "limit undefined: character has a zero or pole at q = 1 "
            f"({len(x.numer)} numerator vs {len(x.denom)} denominator factors)"
        )
    return Fraction(x.sign * prod(x.numer), prod(x.denom))


def expand(x: CharProduct, order: int) -> PowerSeries:
    """Truncated Laurent expansion of ``x``, exact for exponents < order.

    Every factor has constant term 1, so the window starting at the q^shift
    leading term is closed under the in-place convolutions used here.
    """
    if not isinstance(order, int) or order <= x.shift:
        raise DomainError(f"expansion order must exceed the shift {x.shift}, got {order!r}")
    length = order - x.shift
    coeffs = [0] * length
    coeffs[0] = x.sign
    for e in x.numer:  # multiply by (1 - q^e)
        for k in range(length - 1, e - 1, -1):
            coeffs[k] -= coeffs[k - e]
    for d in x.denom:  # multiply by 1/(1 - q^d) = sum_j q^(j*d)
        for k in range(d, length):
            coeffs[k] += coeffs[k - d]
    return PowerSeries(x.shift, tuple(coeffs), order)
