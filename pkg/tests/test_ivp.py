"""Integer-valued polynomials: basis change, membership, duality pairing."""

import random
from fractions import Fraction

import pytest

from adamsops.ivp import (
    IvpPoly,
    assert_integer_valued,
    from_power_basis,
    is_integer_valued,
    pairing,
    pi_lambda,
)
from adamsops.opring import (
    LambdaSeq,
    SigmaCoeffs,
    lambda_to_sigma,
    sigma_eigenvalues,
    sigma_to_lambda,
)


def brute_force_integer_valued(f, lo=-20, hi=20):
    return all(f.evaluate(w).denominator == 1 for w in range(lo, hi + 1))


def random_poly(rng, max_degree=8, den_max=12):
    degree = rng.randint(0, max_degree)
    power = [
        Fraction(rng.randint(-8, 8), rng.randint(1, den_max))
        for _ in range(degree + 1)
    ]
    return from_power_basis(power)


# -- basis change ---------------------------------------------------------


def test_from_power_basis_w_squared():
    assert from_power_basis((0, 0, 1)).binom_coeffs == (0, 1, 2)


def test_from_power_basis_constant():
    assert from_power_basis((1,)).binom_coeffs == (1,)


def test_from_power_basis_w_cubed():
    assert from_power_basis((0, 0, 0, 1)).binom_coeffs == (0, 1, 6, 6)


def test_power_basis_round_trip():
    rng = random.Random(23)
    for _ in range(50):
        f = random_poly(rng)
        assert from_power_basis(f.to_power_basis()) == f


def test_evaluation_agrees_between_bases():
    rng = random.Random(29)
    for _ in range(25):
        f = random_poly(rng, max_degree=6)
        power = f.to_power_basis()
        for w in range(-6, 7):
            direct = sum(
                (c * Fraction(w) ** k for k, c in enumerate(power)), Fraction(0)
            )
            assert f.evaluate(w) == direct


# -- integer-valuedness -----------------------------------------------------


def test_binomial_basis_polynomials_are_integer_valued():
    f = from_power_basis((0, Fraction(-1, 2), Fraction(1, 2)))  # w(w-1)/2
    assert f == IvpPoly.binom_unit(2)
    assert is_integer_valued(f)
    assert brute_force_integer_valued(f)


def test_half_w_is_not_integer_valued():
    f = from_power_basis((0, Fraction(1, 2)))
    assert not is_integer_valued(f)
    assert f.evaluate(1) == Fraction(1, 2)


def test_cube_minus_w_over_six():
    f = from_power_basis((0, Fraction(-1, 6), 0, Fraction(1, 6)))  # (w^3 - w)/6
    assert f.binom_coeffs == (0, 0, 1, 1)
    assert is_integer_valued(f)
    assert brute_force_integer_valued(f)


def test_membership_matches_brute_force_on_random_polynomials():
    rng = random.Random(31)
    for _ in range(200):
        f = random_poly(rng)
        assert is_integer_valued(f) == brute_force_integer_valued(f)


def test_assert_integer_valued_raises_with_index():
    with pytest.raises(ValueError, match="c_1"):
        assert_integer_valued(from_power_basis((0, Fraction(1, 2))))


def test_product_of_integer_valued_is_integer_valued():
    rng = random.Random(37)
    produced = 0
    while produced < 40:
        f = random_poly(rng, max_degree=5)
        g = random_poly(rng, max_degree=5)
        if not (is_integer_valued(f) and is_integer_valued(g)):
            continue
        produced += 1
        assert is_integer_valued(f * g)


def test_integer_valued_products_of_binomials():
    for a in range(5):
        for b in range(5):
            prod = IvpPoly.binom_unit(a) * IvpPoly.binom_unit(b)
            assert is_integer_valued(prod)
            for w in range(-8, 9):
                assert prod.evaluate(w) == IvpPoly.binom_unit(a).evaluate(
                    w
                ) * IvpPoly.binom_unit(b).evaluate(w)


# -- pairing -----------------------------------------------------------------


def test_pairing_adams_with_power():
    a = lambda_to_sigma(LambdaSeq.adams(3, 4))
    assert pairing(a, from_power_basis((0, 0, 1))) == 9


def test_pairing_dual_bases():
    for n in range(5):
        for m in range(5):
            a = SigmaCoeffs.unit(n, 5)
            value = pairing(a, IvpPoly.binom_unit(m))
            assert value == (1 if n == m else 0)


def test_pairing_sigma2_with_w_squared():
    a = SigmaCoeffs.unit(2, 3)
    assert pairing(a, from_power_basis((0, 0, 1))) == 2


def test_pairing_recovers_eigenvalues():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(0, 8)
        a = SigmaCoeffs(
            tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n + 1))
        )
        lam = sigma_to_lambda(a)
        for h in range(n + 1):
            power = [Fraction(0)] * h + [Fraction(1)]
            assert pairing(a, from_power_basis(power)) == lam[h]


def test_pairing_degree_guard():
    a = SigmaCoeffs.unit(1, 1)
    with pytest.raises(ValueError):
        pairing(a, IvpPoly.binom_unit(2))


def test_integral_pairing_is_integer():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(0, 8)
        a = SigmaCoeffs(tuple(Fraction(rng.randint(-9, 9)) for _ in range(n + 1)))
        f = IvpPoly(tuple(Fraction(rng.randint(-9, 9)) for _ in range(n + 1)))
        assert pairing(a, f).denominator == 1


# -- pi_lambda ----------------------------------------------------------------


def test_pi_lambda_values():
    assert pi_lambda(0, 3, LambdaSeq.adams(2, 4)) == 8
    lam = LambdaSeq((7, 3, 1))
    assert pi_lambda(5, 0, lam) == 7
    assert pi_lambda(-1, 1, sigma_eigenvalues(1, 3)) == 1


def test_pi_lambda_ignores_u_exponent():
    lam = LambdaSeq.adams(3, 5)
    assert pi_lambda(-4, 2, lam) == pi_lambda(9, 2, lam) == 9


def test_pi_lambda_range_guard():
    with pytest.raises(ValueError):
        pi_lambda(0, 4, LambdaSeq((1, 2)))
