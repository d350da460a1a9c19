"""Sequence transforms, congruence certificates, ring structure, coproduct."""

import json
import math
import random
from fractions import Fraction

import pytest

from adamsops.opring import (
    LambdaSeq,
    SigmaCoeffs,
    act_on_homotopy,
    check_congruences,
    congruence_vector,
    coproduct_sigma,
    lambda_to_sigma,
    multiply,
    sigma_eigenvalues,
    sigma_to_lambda,
)
from adamsops.stirling import binomial


def eigenvalues_via_psi_expansion(a, m):
    """Independent route: expand every sigma_n into psi-operations and sum
    the k^m eigenvalues directly."""
    total = Fraction(0)
    for n, coeff in enumerate(a.entries):
        total += coeff * sum(
            (-1) ** (n + k) * binomial(n, k) * Fraction(k) ** m for k in range(n + 1)
        )
    return total


def random_rational_vector(rng, length, den_max=10, num_max=30):
    return tuple(
        Fraction(rng.randint(-num_max, num_max), rng.randint(1, den_max))
        for _ in range(length)
    )


# -- sigma_to_lambda -------------------------------------------------------


def test_sigma_to_lambda_rank_functional():
    a = SigmaCoeffs((1, 0, 0, 0))
    assert sigma_to_lambda(a).entries == (1, 0, 0, 0)


def test_sigma_to_lambda_adams_square():
    a = SigmaCoeffs((1, 2, 1, 0, 0))
    lam = sigma_to_lambda(a)
    assert lam == LambdaSeq.adams(2, 4)
    for m in range(5):
        assert lam[m] == eigenvalues_via_psi_expansion(a, m)


def test_sigma_to_lambda_unit_leading_value():
    for m in range(7):
        lam = sigma_eigenvalues(m, 8)
        assert all(lam[j] == 0 for j in range(m))
        assert lam[m] == math.factorial(m)


def test_sigma_to_lambda_matches_psi_expansion_on_random_vectors():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(0, 8)
        a = SigmaCoeffs(random_rational_vector(rng, n + 1))
        lam = sigma_to_lambda(a)
        for m in range(n + 1):
            assert lam[m] == eigenvalues_via_psi_expansion(a, m)


# -- lambda_to_sigma -------------------------------------------------------


def test_lambda_to_sigma_adams_gives_binomials():
    for k in range(0, 6):
        a = lambda_to_sigma(LambdaSeq.adams(k, 6))
        assert a.entries == tuple(binomial(k, n) for n in range(7))


def test_lambda_to_sigma_identity_operation():
    a = lambda_to_sigma(LambdaSeq((1, 1, 1, 1, 1)))
    assert a.entries == (1, 1, 0, 0, 0)


def test_round_trip_both_ways():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(0, 30)
        vec = random_rational_vector(rng, n + 1)
        lam = LambdaSeq(vec)
        assert sigma_to_lambda(lambda_to_sigma(lam)) == lam
        a = SigmaCoeffs(vec)
        assert lambda_to_sigma(sigma_to_lambda(a)) == a


def test_transform_matrices_triangular():
    n = 9
    for row in range(n + 1):
        vec = congruence_vector(row, n)
        assert all(vec[k] == 0 for k in range(row + 1, n + 1))
        assert vec[row] == Fraction(1, math.factorial(row))
        lam = sigma_eigenvalues(row, n)
        assert lam[row] == math.factorial(row)


# -- congruence certificates ------------------------------------------------


def test_adams_sequences_pass():
    cert = check_congruences(LambdaSeq.adams(2, 10))
    assert cert.passes
    assert cert.truncation == 10


def test_linear_sequence_fails_at_two():
    cert = check_congruences(LambdaSeq((0, 1, 2, 3, 4)))
    assert not cert.passes
    assert cert.first_failure.index == 2
    assert cert.first_failure.value == Fraction(1, 2)


def test_constant_multiples_of_rank_functional_pass():
    for c in (-3, 0, 5):
        cert = check_congruences(LambdaSeq((c, 0, 0, 0)))
        assert cert.passes


def test_certificate_values_are_sigma_coordinates():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(0, 12)
        lam = LambdaSeq(random_rational_vector(rng, n + 1))
        cert = check_congruences(lam)
        a = lambda_to_sigma(lam)
        assert tuple(r.value for r in cert.records) == a.entries
        assert cert.passes == a.is_integral


def test_certificate_json_round_trips_deterministically():
    cert = check_congruences(LambdaSeq((0, 1, 2, 3)))
    doc1 = json.dumps(cert.to_json_dict(), sort_keys=True)
    doc2 = json.dumps(check_congruences(LambdaSeq((0, 1, 2, 3))).to_json_dict(), sort_keys=True)
    assert doc1 == doc2
    assert '"1/2"' in doc1


# -- product ----------------------------------------------------------------


def test_multiply_adams_parameters():
    got = multiply(LambdaSeq.adams(2, 8), LambdaSeq.adams(3, 8))
    assert got == LambdaSeq.adams(6, 8)


def test_multiply_identity():
    rng = random.Random(3)
    lam = LambdaSeq(random_rational_vector(rng, 7))
    assert multiply(lam, LambdaSeq.adams(1, 6)) == lam


def test_multiply_sigma1_idempotent():
    s1 = sigma_eigenvalues(1, 6)
    assert multiply(s1, s1) == s1


def test_multiply_truncation_mismatch():
    with pytest.raises(ValueError):
        multiply(LambdaSeq.adams(2, 3), LambdaSeq.adams(2, 4))


def test_ring_closure_on_random_integral_operations():
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(0, 10)
        a = SigmaCoeffs(tuple(Fraction(rng.randint(-9, 9)) for _ in range(n + 1)))
        b = SigmaCoeffs(tuple(Fraction(rng.randint(-9, 9)) for _ in range(n + 1)))
        lam = sigma_to_lambda(a)
        mu = sigma_to_lambda(b)
        assert check_congruences(lam).passes
        assert check_congruences(mu).passes
        assert check_congruences(multiply(lam, mu)).passes


def test_product_matches_transform_route():
    rng = random.Random(19)
    for _ in range(100):
        n = rng.randint(0, 9)
        lam = LambdaSeq(random_rational_vector(rng, n + 1))
        mu = LambdaSeq(random_rational_vector(rng, n + 1))
        direct = multiply(lam, mu)
        via_sigma = sigma_to_lambda(
            lambda_to_sigma(
                LambdaSeq(tuple(x * y for x, y in zip(lam.entries, mu.entries)))
            )
        )
        assert direct == via_sigma


# -- coproduct ---------------------------------------------------------------


def two_dim_transform_oracle(n, size):
    """Apply the eigenvalue-to-sigma transform in both indices to the
    two-variable eigenvalue table of the coproduct."""
    mu = [
        [
            sum(
                Fraction((-1) ** (n + k) * binomial(n, k)) * k**a * k**b
                for k in range(n + 1)
            )
            for b in range(size + 1)
        ]
        for a in range(size + 1)
    ]
    rows = [lambda_to_sigma(LambdaSeq(tuple(row))).entries for row in mu]
    cols = [
        lambda_to_sigma(LambdaSeq(tuple(rows[a][j] for a in range(size + 1)))).entries
        for j in range(size + 1)
    ]
    return [[cols[j][i] for j in range(size + 1)] for i in range(size + 1)]


def test_coproduct_sigma0():
    assert coproduct_sigma(0) == [[1]]


def test_coproduct_sigma1():
    assert coproduct_sigma(1) == [[0, 1], [1, 1]]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coproduct_against_double_transform(n):
    d = coproduct_sigma(n)
    oracle = two_dim_transform_oracle(n, n)
    for i in range(n + 1):
        for j in range(n + 1):
            assert d[i][j] == oracle[i][j], (n, i, j)


def test_coproduct_counit_column():
    for n in range(6):
        d = coproduct_sigma(n)
        for i in range(n + 1):
            assert d[i][0] == (1 if i == n else 0)
            assert d[0][i] == (1 if i == n else 0)


def test_coproduct_group_like_evaluation():
    # pairing both tensor slots with eigenvalue vectors of integer points
    # collapses the coproduct to (k + l + k*l)^n
    for n in range(6):
        d = coproduct_sigma(n)
        for k in range(-2, 3):
            for l in range(-2, 3):
                total = sum(
                    d[i][j] * Fraction(k) ** i * Fraction(l) ** j
                    for i in range(n + 1)
                    for j in range(n + 1)
                )
                assert total == Fraction(k + l + k * l) ** n


# -- action on homotopy -------------------------------------------------------


def test_act_on_homotopy_values():
    assert act_on_homotopy(LambdaSeq.adams(3, 4), 2, 1) == 9
    assert act_on_homotopy(LambdaSeq((1, 0, 0)), 0, 5) == 5
    assert act_on_homotopy(sigma_eigenvalues(2, 5), 4, 1) == 14


def test_act_on_homotopy_out_of_range():
    with pytest.raises(ValueError):
        act_on_homotopy(LambdaSeq((1, 2)), 2, 1)


# -- resizing ------------------------------------------------------------------


def test_resize_extends_through_sigma_coordinates():
    lam = LambdaSeq.adams(2, 3)
    assert lam.resized(6) == LambdaSeq.adams(2, 6)
    assert lam.resized(2) == LambdaSeq.adams(2, 2)


def test_sigma_resize_zero_fills():
    a = SigmaCoeffs((1, 2))
    assert a.resized(4).entries == (1, 2, 0, 0, 0)


def test_empty_sequence_rejected():
    with pytest.raises(ValueError):
        LambdaSeq(())


def test_congruence_vector_guards():
    with pytest.raises(ValueError):
        congruence_vector(5, 3)
    with pytest.raises(ValueError):
        LambdaSeq((1, 2)).resized(-1)
