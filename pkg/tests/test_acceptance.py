"""Acceptance suite: one test per shipped criterion, one printed verdict line
each.  Run with ``pytest tests/test_acceptance.py -s`` to see the lines.

Every expected value is either a frozen independently computed constant or an
exact identity checked against an oracle implemented apart from the library
(see conftest).  Stated runtime bounds are asserted, not just hoped for.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import prod

from thetachi import (
    GammaProduct,
    catalan,
    char_poly_ring,
    chi_theta_spectral,
    eval_exact,
    expand,
    genus,
    limit_q1,
    monomials_of_degree,
    q_euler,
    reduce,
    verify_prop1,
    SpectralCurveParams,
    WeightedSystem,
)

from conftest import mp_char_value, mp_gamma_value, rel_err


def check(number, description, body, seconds=None):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"criterion {number}: FAIL - {description}")
        raise
    elapsed = time.perf_counter() - start
    if seconds is not None:
        assert elapsed < seconds, f"criterion {number} took {elapsed:.2f}s"
    print(f"criterion {number}: PASS - {description} [{elapsed:.3f}s]")


def test_criterion_1():
    check(
        1,
        "chi_theta_spectral(4, 1) == 6 exactly",
        lambda: _expect(chi_theta_spectral(4, 1), 6),
        seconds=1.0,
    )


def test_criterion_2():
    check(
        2,
        "chi_theta_spectral(3, 2) == -21 exactly",
        lambda: _expect(chi_theta_spectral(3, 2), -21),
        seconds=1.0,
    )


def test_criterion_3():
    def body():
        assert chi_theta_spectral(2, 2) == 1
        assert chi_theta_spectral(2, 3) == -2
        for g in range(1, 21):
            want = catalan(g) if g % 2 else -catalan(g)
            _expect(chi_theta_spectral(2, g + 1), want)

    check(3, "hyperelliptic family equals signed Catalan numbers, g = 1..20",
          body, seconds=1.0)


def test_criterion_4():
    def body():
        cases = 0
        for N in range(2, 7):
            for n in range(1, 5):
                if (N - 1) * (N * n - 2) <= 0:
                    continue
                value = chi_theta_spectral(N, n)
                g = genus(SpectralCurveParams(N, n))
                assert value.denominator == 1
                assert (value > 0) == (g % 2 == 1) and value != 0
                cases += 1
        assert cases == 19  # every pair except N=2, n=1

    check(4, "integrality and sign law over 2 <= N <= 6, 1 <= n <= 4",
          body, seconds=5.0)


def test_criterion_5():
    def body():
        rng = random.Random(2026)
        for _ in range(120):
            g = rng.randrange(0, 4)
            nf = rng.randrange(0, 4)
            a = [rng.randrange(1, 10) for _ in range(nf + g)]
            if not a:
                continue
            f = [rng.randrange(1, 10) for _ in range(nf)]
            D = [rng.randrange(1, 10) for _ in range(g)]
            character = q_euler(a, f, D)
            exact = limit_q1(character)
            sign = -1 if g % 2 else 1
            assert exact == Fraction(sign * prod(f) * prod(D), prod(a))
            numeric = mp_char_value(character, 1 - Fraction(1, 10**6))
            assert rel_err(numeric, float(exact)) <= 1e-4

    check(5, "q -> 1 limit matches closed form and numeric value at q = 1 - 1e-6",
          body)


def test_criterion_6():
    def body():
        circle = WeightedSystem([1, 1], [{(2, 0): 1, (0, 2): 1}])
        report = verify_prop1(circle, 12)
        assert report.verdict == "CONSISTENT"
        assert report.predicted == report.computed == (1,) + (2,) * 11

    check(6, "verify_prop1: smooth conic system CONSISTENT to degree 12",
          body, seconds=1.0)

    def body2():
        shared = WeightedSystem([1, 1], [{(1, 1): 1}, {(2, 0): 1}])
        report = verify_prop1(shared, 12)
        assert report.verdict == "NOT_REGULAR"
        assert report.first_mismatch == 3

    check(6, "verify_prop1: shared-factor system NOT_REGULAR at degree 3",
          body2, seconds=1.0)


def test_criterion_7():
    def body():
        rng = random.Random(1789)
        for _ in range(24):
            weights = [rng.randrange(1, 5) for _ in range(rng.randrange(1, 5))]
            series = expand(char_poly_ring(weights), 15)
            counts = [len(monomials_of_degree(weights, d)) for d in range(15)]
            assert list(series.coeffs) == counts

    check(7, "ring character coefficients equal monomial counts, 24 random weight vectors",
          body)


def test_criterion_8():
    def body():
        for N, n in ((4, 1), (3, 2)):
            paired = []
            for j in range(1, N):
                paired.append((Fraction(j * (n * N - 1), N), 2))
                paired.append((Fraction(j, N), -2))
            eval_exact(GammaProduct(Fraction(1), tuple(paired)))  # must not raise

    check(8, "fractional Gamma factors cancel pairwise for (4,1) and (3,2)", body)

    def body2():
        rng = random.Random(271828)
        for _ in range(110):
            factors = []
            for _ in range(rng.randrange(1, 5)):
                arg = Fraction(rng.randrange(1, 121), rng.randrange(1, 13))
                if arg > 10:
                    arg = Fraction(rng.randrange(1, 11))
                factors.append((arg, rng.choice((-3, -2, -1, 1, 2, 3))))
            x = GammaProduct(
                Fraction(rng.choice((1, -1)) * rng.randrange(1, 30), rng.randrange(1, 30)),
                tuple(factors),
            )
            assert rel_err(mp_gamma_value(x), mp_gamma_value(reduce(x))) <= 1e-6

    check(8, "reduce preserves value to 1e-6 relative on 110 random products", body2)


def _expect(got, want):
    assert got == want, f"got {got}, wanted {want}"
