"""Group-law engine: series inversion, group-law axioms, orientation series.

The heavier oracles below re-expand everything with an independent dense
polynomial representation (plain dicts, no degree truncation) so that the
library's truncating arithmetic is checked from outside.
"""

import random
from fractions import Fraction

import pytest

from adamsops.fgl import (
    CapacityError,
    GradedPoly,
    KPolynomial,
    adams_orientation_series,
    coefficient_dictionary,
    exp_series,
    express_in_basis,
    fgl_coeff,
    k_series,
    log_series,
)


def m(i, bound):
    return GradedPoly.generator(i, bound)


# -- independent dense-poly oracle helpers -----------------------------------
# polynomials in m_1..m_k as dicts {exponent tuple: Fraction}, untruncated


def dense_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            n = max(len(ka), len(kb))
            key = tuple(
                (ka[i] if i < len(ka) else 0) + (kb[i] if i < len(kb) else 0)
                for i in range(n)
            )
            while key and key[-1] == 0:
                key = key[:-1]
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def dense_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
        if out[k] == 0:
            del out[k]
    return out


def dense_from_graded(p):
    return {k: v for k, v in p.terms}


def graded_equals_dense(p, dense):
    return dense_from_graded(p) == dense


def series_mul_dense(a, b, order):
    """a, b: lists of dense polys indexed by x-power."""
    out = [dict() for _ in range(order + 1)]
    for i, pa in enumerate(a):
        for j, pb in enumerate(b):
            if i + j > order:
                continue
            out[i + j] = dense_add(out[i + j], dense_mul(pa, pb))
    return out


def series_compose_dense(outer, inner, order):
    out = [dict() for _ in range(order + 1)]
    out[0] = dict(outer[0])
    power = [dict() for _ in range(order + 1)]
    power[0] = {(): Fraction(1)}
    for a in range(1, len(outer)):
        power = series_mul_dense(power, inner, order)
        scaled = [dense_mul(p, outer[a]) for p in power]
        out = [dense_add(x, y) for x, y in zip(out, scaled)]
    return out


def dense_log(order):
    coeffs = [dict(), {(): Fraction(1)}]
    for i in range(2, order + 1):
        key = tuple([0] * (i - 2) + [1])
        coeffs.append({key: Fraction(1)})
    return coeffs


def solve_dense_inverse(f, order):
    """Term-by-term compositional inverse of f = x + ..., dense arithmetic."""
    g = [dict(), {(): Fraction(1)}] + [dict() for _ in range(order - 1)]
    for n in range(2, order + 1):
        comp = series_compose_dense(f, g, order)
        defect = comp[n]
        g[n] = {k: -v for k, v in defect.items()}
    return g


# -- log / exp -----------------------------------------------------------------


def test_log_series_shape():
    log = log_series(3)
    assert log.coefficient(1) == GradedPoly.one(2)
    assert log.coefficient(2) == m(1, 2)
    assert log.coefficient(3) == m(2, 2)


def test_exp_hand_inverted_coefficients():
    exp = exp_series(3)
    bound = 2
    assert exp.coefficient(1) == GradedPoly.one(bound)
    assert exp.coefficient(2) == -m(1, bound)
    assert exp.coefficient(3) == m(1, bound) * m(1, bound) * 2 - m(2, bound)


def test_exp_matches_dense_inversion_to_order_8():
    order = 8
    exp = exp_series(order)
    dense = solve_dense_inverse(dense_log(order), order)
    for i in range(order + 1):
        assert graded_equals_dense(exp.coefficient(i), dense[i]), i


@pytest.mark.parametrize("order", [1, 2, 5, 9, 12])
def test_exp_log_round_trip(order):
    log = log_series(order, order - 1)
    exp = exp_series(order, order - 1)
    bound = order - 1
    x = [GradedPoly.zero(bound), GradedPoly.one(bound)] + [
        GradedPoly.zero(bound) for _ in range(order - 1)
    ]
    assert tuple(exp.compose(log).coeffs) == tuple(x)
    assert tuple(log.compose(exp).coeffs) == tuple(x)


def test_log_capacity_guards():
    with pytest.raises(CapacityError):
        log_series(0)
    with pytest.raises(CapacityError):
        log_series(5, 3)  # needs bound >= 4


# -- group law -------------------------------------------------------------------


def test_fgl_low_coefficients():
    bound = 3
    assert fgl_coeff(1, 0, 4, bound) == GradedPoly.one(bound)
    assert fgl_coeff(0, 1, 4, bound) == GradedPoly.one(bound)
    assert fgl_coeff(1, 1, 4, bound) == m(1, bound) * (-2)
    a21 = fgl_coeff(2, 1, 4, bound)
    assert a21 == m(1, bound) * m(1, bound) * 4 - m(2, bound) * 3


def test_fgl_symmetry_and_grading():
    order = 6
    bound = 5
    for i in range(0, order + 1):
        for j in range(0, order + 1 - i):
            if i + j < 1:
                continue
            a = fgl_coeff(i, j, order, bound)
            assert a == fgl_coeff(j, i, order, bound)
            if not a.is_zero:
                assert a.is_homogeneous(i + j - 1)


def test_fgl_unital():
    order = 6
    for i in range(1, order + 1):
        a = fgl_coeff(i, 0, order)
        if i == 1:
            assert a == GradedPoly.one(order - 1)
        else:
            assert a.is_zero


def fgl_table(order, bound):
    return {
        (i, j): fgl_coeff(i, j, order, bound)
        for i in range(order + 1)
        for j in range(order + 1 - i)
        if i + j >= 1
    }


def tri_substitute(table, first, second, order, bound):
    """F(A, B) for trivariate series A, B given as dicts {(i,j,k): poly}."""
    zero = GradedPoly.zero(bound)

    def tri_mul(a, b):
        out = {}
        for ka, pa in a.items():
            for kb, pb in b.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                if sum(key) > order:
                    continue
                prod = pa * pb
                if prod.is_zero:
                    continue
                out[key] = out.get(key, zero) + prod
        return out

    result = {}
    a_pow = {(0, 0, 0): GradedPoly.one(bound)}
    for i in range(order + 1):
        if i:
            a_pow = tri_mul(a_pow, first)
        b_pow = {(0, 0, 0): GradedPoly.one(bound)}
        for j in range(order + 1 - i):
            if j:
                b_pow = tri_mul(b_pow, second)
            if i + j < 1:
                continue
            coeff = table.get((i, j))
            if coeff is None or coeff.is_zero:
                continue
            for key, p in tri_mul(a_pow, b_pow).items():
                term = p * coeff
                if term.is_zero:
                    continue
                result[key] = result.get(key, zero) + term
    return {k: v for k, v in result.items() if not v.is_zero}


def test_fgl_associative_to_order_6():
    order = 6
    bound = 5
    table = fgl_table(order, bound)
    one = GradedPoly.one(bound)
    s = {(1, 0, 0): one}
    t = {(0, 1, 0): one}
    u = {(0, 0, 1): one}
    f_st = tri_substitute(table, s, t, order, bound)
    f_tu = tri_substitute(table, t, u, order, bound)
    left = tri_substitute(table, f_st, u, order, bound)
    right = tri_substitute(table, s, f_tu, order, bound)
    assert left == right


def test_k_series_homomorphism_at_integer_points():
    order = 6
    for k1 in range(-3, 4):
        for k2 in range(-3, 4):
            s1 = k_series(k1, order)
            s2 = k_series(k2, order)
            assert s1.compose(s2) == k_series(k1 * k2, order)


def test_k_series_one_is_identity():
    order = 7
    s = k_series(1, order)
    assert s.coefficient(1) == GradedPoly.one(order - 1)
    for i in range(2, order + 1):
        assert s.coefficient(i).is_zero


# -- orientation series -----------------------------------------------------------


def test_orientation_series_first_coefficients():
    series = adams_orientation_series(4)
    bound = 3
    b1 = series.coefficient(1)
    assert b1 == KPolynomial.one(bound)
    b2 = series.coefficient(2)
    assert b2.coefficient(0) == m(1, bound)
    assert b2.coefficient(1) == -m(1, bound)
    assert b2.kappa_degree == 1


def test_orientation_series_at_kappa_one_is_identity():
    series = adams_orientation_series(8)
    assert series.coefficient(1).evaluate(1) == GradedPoly.one(7)
    for i in range(2, 9):
        assert series.coefficient(i).evaluate(1).is_zero


def test_orientation_series_specializes_to_k_series_over_k():
    # kappa^{-1} exp(kappa log x) at kappa = k against exp(k log x) / k
    order = 6
    for k in range(-3, 4):
        if k == 0:
            continue
        series = adams_orientation_series(order)
        ks = k_series(k, order)
        inv = Fraction(1, k)
        for i in range(1, order + 1):
            assert series.coefficient(i).evaluate(k) == ks.coefficient(i) * inv


def test_orientation_series_grading():
    series = adams_orientation_series(9)
    for i in range(1, 10):
        b = series.coefficient(i)
        for p in b.coeffs:
            if not p.is_zero:
                assert p.is_homogeneous(i - 1)


# -- graded polynomial arithmetic ----------------------------------------------


def test_graded_poly_truncates_above_bound():
    p = m(2, 2) * m(1, 2)
    assert p.is_zero


def test_graded_poly_ring_map():
    p = m(1, 3) * m(1, 3) * 4 - m(2, 3) * 3
    assert p.ring_map([Fraction(-1, 2), Fraction(1, 3), Fraction(0)]) == 0
    assert p.ring_map([1, 1, 1]) == 1


def test_graded_poly_requires_matching_bounds():
    with pytest.raises(ValueError):
        m(1, 2) + m(1, 3)


def test_generator_capacity():
    with pytest.raises(CapacityError):
        GradedPoly.generator(4, 3)


def test_kpolynomial_arithmetic():
    bound = 3
    kp = KPolynomial.kappa_power(1, bound) + KPolynomial.one(bound)
    sq = kp * kp  # (1 + k)^2
    assert sq.coefficient(0) == GradedPoly.one(bound)
    assert sq.coefficient(1) == GradedPoly.constant(2, bound)
    assert sq.coefficient(2) == GradedPoly.one(bound)
    assert sq.evaluate(2) == GradedPoly.constant(9, bound)


def test_fgl_capacity_guard():
    with pytest.raises(CapacityError):
        fgl_coeff(5, 4, 6)


# -- express_in_basis -----------------------------------------------------------


def test_express_in_basis_solves_exactly():
    bound = 3
    x1 = coefficient_dictionary(bound)["x1"][0]
    a21 = coefficient_dictionary(bound)["a21"][0]
    basis = [x1 * x1 * x1, a21 * x1]
    target = basis[0] * Fraction(2, 3) + basis[1] * Fraction(-5, 7)
    assert express_in_basis(target, basis) == (Fraction(2, 3), Fraction(-5, 7))


def test_express_in_basis_rejects_outside_span():
    bound = 3
    with pytest.raises(ValueError):
        express_in_basis(m(3, bound), [m(1, bound), m(2, bound)])


def test_express_in_basis_random_round_trip():
    rng = random.Random(47)
    bound = 4
    basis = [
        m(1, bound) * m(1, bound),
        m(2, bound),
    ]
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in basis]
        target = GradedPoly.zero(bound)
        for c, b in zip(coeffs, basis):
            target = target + b * c
        if target.is_zero:
            continue
        assert list(express_in_basis(target, basis)) == coeffs


def test_express_in_basis_rejects_dependent_basis():
    m1 = GradedPoly.generator(1, 3)
    with pytest.raises(ValueError, match="dependent"):
        express_in_basis(m1, [m1, m1 * 2])


def test_kappa_shift_guard():
    with pytest.raises(ValueError):
        KPolynomial.one(2).shift(-1)
