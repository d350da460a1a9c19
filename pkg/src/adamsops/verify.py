"""End-to-end verification checklist for the documented worked values.

Every item recomputes a pinned value from scratch through the public API and
compares exactly.  ``run_all`` never raises; failures are captured in the
result records so the CLI can report one line per item.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import fgl, hopfeval, ivp, opring, plocal, stirling

__all__ = ["VerifyResult", "run_all", "CHECKS"]


@dataclass(frozen=True)
class VerifyResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


CHECKS: list[tuple[str, Callable[[], None]]] = []


def _check(name: str):
    def register(fn: Callable[[], None]):
        CHECKS.append((name, fn))
        return fn

    return register


def _expect(cond: bool, detail: str) -> None:
    if not cond:
        raise AssertionError(detail)


@_check("first-kind Stirling coefficients 6, 11, 6 of the degree-4 form")
def _stirling1_values() -> None:
    _expect(stirling.stirling1_unsigned(4, 1) == 6, "<4 1> != 6")
    _expect(stirling.stirling1_unsigned(4, 2) == 11, "<4 2> != 11")
    _expect(stirling.stirling1_unsigned(4, 3) == 6, "<4 3> != 6")


@_check("alternating power sum: m! on the diagonal, 0 below it")
def _apsum_special_cases() -> None:
    _expect(stirling.alternating_power_sum(3, 3) == 6, "diagonal value")
    _expect(stirling.alternating_power_sum(3, 2) == 0, "below-diagonal value")
    for n in range(0, 26):
        for m in range(0, 26):
            _expect(
                stirling.alternating_power_sum(n, m)
                == math.factorial(n) * stirling.stirling2(m, n),
                f"identity fails at ({n},{m})",
            )


@_check("congruence table rows 2, 3, 4 in normal form")
def _table_rows() -> None:
    f = Fraction
    _expect(
        opring.congruence_vector(2, 4) == (f(0), f(-1, 2), f(1, 2), f(0), f(0)),
        "row 2",
    )
    _expect(
        opring.congruence_vector(3, 4)
        == (f(0), f(1, 3), f(-1, 2), f(1, 6), f(0)),
        "row 3",
    )
    _expect(
        opring.congruence_vector(4, 4)
        == (f(0), f(-1, 4), f(11, 24), f(-1, 4), f(1, 24)),
        "row 4",
    )


@_check("basis element in degree m: zero eigenvalues below m, then m!")
def _sigma_unit_eigenvalues() -> None:
    import math

    for m in range(0, 8):
        lam = opring.sigma_eigenvalues(m, 9)
        _expect(all(lam[j] == 0 for j in range(m)), f"nonzero below {m}")
        _expect(lam[m] == math.factorial(m), f"lambda_{m} != {m}!")


@_check("candidate (0,1,2,3) fails exactly at index 2 with value 1/2")
def _failing_candidate() -> None:
    cert = opring.check_congruences(opring.LambdaSeq((0, 1, 2, 3)))
    _expect(not cert.passes, "should fail")
    fail = cert.first_failure
    _expect(fail is not None and fail.index == 2, "first failure index")
    _expect(fail.value == Fraction(1, 2), "failure value")


@_check("Adams composition: parameters 2 and 3 compose to 6")
def _adams_composition() -> None:
    got = opring.multiply(
        opring.LambdaSeq.adams(2, 10), opring.LambdaSeq.adams(3, 10)
    )
    _expect(got == opring.LambdaSeq.adams(6, 10), "pointwise product")


@_check("action on homotopy: parameter 3 in degree 4 multiplies by 9")
def _act_on_homotopy() -> None:
    got = opring.act_on_homotopy(opring.LambdaSeq.adams(3, 4), 2, 1)
    _expect(got == 9, f"got {got}")


@_check("duality pairing <psi(3), w^2> = 9")
def _pairing_power() -> None:
    a = opring.lambda_to_sigma(opring.LambdaSeq.adams(3, 4))
    f = ivp.from_power_basis((0, 0, 1))
    _expect(ivp.pairing(a, f) == 9, "pairing value")


@_check("monomial evaluation map sends the degree-3 class to eigenvalue 8")
def _pi_lambda_value() -> None:
    got = ivp.pi_lambda(0, 3, opring.LambdaSeq.adams(2, 4))
    _expect(got == 8, f"got {got}")


@_check("pure suspension monomial of half-degree 2 evaluates to kappa^2")
def _psi_hat_suspension() -> None:
    xi = hopfeval.monomial(e2=4, t="x", t_half_degree=2, degree_bound=4)
    got = hopfeval.psi_hat(xi, order=5, degree_bound=4)
    want = fgl.KPolynomial.kappa_power(2, 4)
    _expect(got == want, "kappa polynomial")


@_check("degree-2 evaluation is ((lambda_2-lambda_1)/2) * x1^2")
def _worked_degree_2() -> None:
    labels, forms = hopfeval.worked_congruence_forms(2)
    _expect(labels == ["x1^2"], "basis")
    _expect(
        forms[0] == (Fraction(0), Fraction(-1, 2), Fraction(1, 2)), "linear form"
    )


@_check("degree-3 evaluation yields the coefficient pair (1/6, 1/3 forms)")
def _worked_degree_3() -> None:
    labels, forms = hopfeval.worked_congruence_forms(3)
    _expect(labels == ["x1^3", "a21*x1"], "basis")
    f = Fraction
    _expect(forms[0] == (f(0), f(1, 3), f(-1, 2), f(1, 6)), "x1^3 form")
    _expect(forms[1] == (f(0), f(-1, 3), f(0), f(1, 3)), "a21*x1 form")


@_check("basis functional vanishes below the diagonal (h < n)")
def _sigma_mu_vanishing() -> None:
    _expect(hopfeval.sigma_mu_functional(3, 2) == 0, "(3,2)")
    for n in range(13):
        for h in range(n):
            _expect(hopfeval.sigma_mu_functional(n, h) == 0, f"({n},{h})")


@_check("K-projected forms at 2 and 3 match the worked congruences")
def _v_lambda_forms() -> None:
    f = Fraction
    _expect(
        hopfeval.hopf_congruence_form(2, 3) == (f(0), f(-1, 2), f(1, 2), f(0)),
        "form 2",
    )
    _expect(
        hopfeval.hopf_congruence_form(3, 3) == (f(0), f(1, 3), f(-1, 2), f(1, 6)),
        "form 3",
    )
    lam = opring.LambdaSeq((0, 5, 7, 11))
    _expect(hopfeval.v_lambda(2, lam) == f(7 - 5, 2), "projected value at 2")
    _expect(hopfeval.v_lambda(3, lam) == f(11 - 21 + 10, 6), "projected value at 3")


@_check("redundancy: the 1/3-form is an integral combination; families agree")
def _solution_sets() -> None:
    rep = hopfeval.solution_sets_equal(3)
    _expect(rep.families_equal, "families differ")
    extra = next(f for f in rep.forms if "a21*x1" in f.name)
    _expect(extra.is_integral_combination, "combination not integral")
    _expect(
        extra.combination
        == (Fraction(0), Fraction(0), Fraction(2), Fraction(2)),
        "expected 2*C2 + 2*C3",
    )
    rep2 = hopfeval.solution_sets_equal(2)
    _expect(rep2.families_equal, "truncation-2 families differ")


@_check("even prime rejected p-locally while the integral check fails")
def _p2_rejected() -> None:
    lam = opring.LambdaSeq((0, 0, 1))
    _expect(not opring.check_congruences(lam).passes, "integral check")
    try:
        plocal.PLocalSeq(prime=2, entries=(0, 0, 1))
    except ValueError:
        return
    raise AssertionError("p = 2 accepted")


def run_all() -> list[VerifyResult]:
    results = []
    for name, fn in CHECKS:
        try:
            fn()
        except Exception as exc:  # report, never raise
            results.append(VerifyResult(name, False, str(exc)))
        else:
            results.append(VerifyResult(name, True))
    return results
