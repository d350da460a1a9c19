"""Evaluation of the Adams functional family on circle-product monomials of
the cobordism cooperation ring, and the integrality forms it induces.

A monomial is b_{i_1} ... b_{i_r} * e^{2h} * eta_R(t) with t a homogeneous
coefficient-ring element of half-degree h_t.  The eigenvalue-parametrized
functional acts circle-multiplicatively:

    psi_hat(monomial) = B_{i_1}(kappa) ... B_{i_r}(kappa) * kappa^{h_t} * t,

with the B_i from :func:`adamsops.fgl.adams_orientation_series`; the e^2
factors contribute B_1 = 1 and are pure grading bookkeeping.  Substituting
kappa^m -> lambda_m turns the result into the value of the diagonal
operation with eigenvalue sequence lambda, which is how the degree-2 and
degree-3 worked evaluations and the K-projection forms below arise.

The K-projection sends m_j to (-1)^j / (j+1); equivalently it sends x1 to 1
and the complementary coefficient generators to 0, specializing the group
law to the multiplicative one.  Under it the evaluation on b_n eta_R(x1)
collapses to the n-th integrality form of :mod:`adamsops.opring`, which is
the content of ``v_lambda`` and the solution-set comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import fgl
from .fgl import (
    CapacityError,
    GradedPoly,
    KPolynomial,
    coefficient_dictionary,
    express_in_basis,
)
from .ivp import IvpPoly, pairing
from .opring import LambdaSeq, congruence_vector, lambda_to_sigma
from .stirling import stirling2

__all__ = [
    "HopfMonomial",
    "LambdaLinear",
    "monomial",
    "circle",
    "psi_hat",
    "substitute_lambda",
    "sigma_mu_functional",
    "k_project",
    "v_lambda",
    "hopf_congruence_form",
    "worked_congruence_forms",
    "MuFormRecord",
    "SolutionSetReport",
    "solution_sets_equal",
]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class HopfMonomial:
    """Circle-product monomial b^alpha * e^{2h} * eta_R(t).

    The coefficient factor t splits into a concrete part ``t_poly`` (expanded
    in the m_i, ``None`` meaning 1) and an opaque formal part of half-degree
    ``formal_degree`` that rides along unchanged.  The total half-degree of t
    drives the kappa-power of the evaluation.
    """

    b_indices: tuple[int, ...] = ()
    susp_exp: int = 0
    t_poly: Optional[GradedPoly] = None
    formal_degree: int = 0
    t_label: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "b_indices", tuple(sorted(self.b_indices)))
        if any(i < 1 for i in self.b_indices):
            raise ValueError("b-factor indices must be at least 1")
        if self.susp_exp < 0:
            raise ValueError("suspension exponent must be non-negative")
        if self.formal_degree < 0:
            raise ValueError("formal half-degree must be non-negative")
        if self.t_poly is not None:
            deg = self.t_poly.degree()
            if deg is not None and not self.t_poly.is_homogeneous(deg):
                raise ValueError("coefficient factor must be homogeneous")

    @property
    def concrete_degree(self) -> int:
        if self.t_poly is None:
            return 0
        deg = self.t_poly.degree()
        return 0 if deg is None else deg

    @property
    def t_half_degree(self) -> int:
        return self.concrete_degree + self.formal_degree

    @property
    def kappa_degree_cap(self) -> int:
        return sum(i - 1 for i in self.b_indices) + self.t_half_degree

    def describe(self) -> str:
        parts = [f"b({i})" for i in self.b_indices]
        if self.susp_exp:
            parts.append(f"e^{2 * self.susp_exp}")
        if self.t_label is not None:
            parts.append(f"etaR({self.t_label})")
        elif self.t_poly is not None or self.formal_degree:
            parts.append("etaR(t)")
        return "*".join(parts) if parts else "1"


def monomial(
    b: Sequence[int] = (),
    e2: int = 0,
    t: Union[str, GradedPoly, None] = None,
    t_half_degree: Optional[int] = None,
    *,
    degree_bound: int = fgl.DEFAULT_DEGREE_BOUND,
) -> HopfMonomial:
    """Convenience constructor resolving dictionary names for t.

    ``t`` may be a dictionary name ("x1", "a21"), an explicit GradedPoly, a
    formal symbol name (requires ``t_half_degree``), or None for no
    coefficient factor.
    """
    if e2 % 2 != 0:
        raise ValueError("the suspension factor must be an even power e^(2h)")
    if t is None:
        return HopfMonomial(tuple(b), e2 // 2)
    if isinstance(t, GradedPoly):
        deg = t.degree()
        if t_half_degree is not None and deg is not None and deg != t_half_degree:
            raise ValueError(
                f"declared half-degree {t_half_degree} but the factor has degree {deg}"
            )
        return HopfMonomial(tuple(b), e2 // 2, t)
    dictionary = coefficient_dictionary(degree_bound)
    if t in dictionary:
        poly, _half = dictionary[t]
        return HopfMonomial(tuple(b), e2 // 2, poly, 0, t)
    if t_half_degree is None:
        raise ValueError(
            f"unknown coefficient symbol {t!r}: declare its half-degree"
        )
    return HopfMonomial(tuple(b), e2 // 2, None, t_half_degree, t)


def circle(xi: HopfMonomial, zeta: HopfMonomial) -> HopfMonomial:
    """Circle product of monomials: concatenate b-factors, add suspension
    exponents, multiply coefficient factors (opaque parts stay opaque)."""
    if xi.t_poly is not None and zeta.t_poly is not None:
        t_poly: Optional[GradedPoly] = xi.t_poly * zeta.t_poly
    else:
        t_poly = xi.t_poly if xi.t_poly is not None else zeta.t_poly
    labels = [l for l in (xi.t_label, zeta.t_label) if l is not None]
    return HopfMonomial(
        xi.b_indices + zeta.b_indices,
        xi.susp_exp + zeta.susp_exp,
        t_poly,
        xi.formal_degree + zeta.formal_degree,
        "*".join(labels) if labels else None,
    )


def psi_hat(
    xi: HopfMonomial,
    order: int = fgl.DEFAULT_ORDER,
    degree_bound: int | None = None,
) -> KPolynomial:
    """Value of the eigenvalue-parametrized functional on a monomial, as a
    polynomial in kappa with graded coefficients.

    An opaque coefficient factor contributes kappa^{h_t} times an implicit
    unit; the caller keeps track of the symbol itself.
    """
    bound = fgl._resolve_capacity(order, degree_bound)
    if xi.b_indices and max(xi.b_indices) > order:
        raise CapacityError(
            f"b-index {max(xi.b_indices)} beyond series order {order}"
        )
    poly_degree = sum(i - 1 for i in xi.b_indices) + xi.concrete_degree
    if poly_degree > bound:
        raise CapacityError(
            f"monomial of degree {poly_degree} exceeds degree bound {bound}"
        )
    if xi.t_poly is not None and xi.t_poly.degree_bound != bound:
        raise ValueError(
            f"coefficient factor was built at degree bound "
            f"{xi.t_poly.degree_bound}, evaluation requested at {bound}"
        )
    series = fgl.adams_orientation_series(order, bound)
    result = KPolynomial.one(bound)
    for i in xi.b_indices:
        result = result * series.coefficient(i)
    result = result.shift(xi.t_half_degree)
    if xi.t_poly is not None:
        result = result * xi.t_poly
    return result


def substitute_lambda(poly: KPolynomial, lam: LambdaSeq) -> GradedPoly:
    """Replace kappa^m by lambda_m: the value of the diagonal operation with
    eigenvalue sequence lambda on the evaluated monomial."""
    if poly.kappa_degree > lam.truncation:
        raise ValueError(
            f"kappa-degree {poly.kappa_degree} exceeds truncation {lam.truncation}"
        )
    total = GradedPoly.zero(poly.degree_bound)
    for m, p in enumerate(poly.coeffs):
        total = total + p * lam[m]
    return total


@dataclass(frozen=True)
class LambdaLinear:
    """A generic-eigenvalue evaluation sum_m c_m lambda_m with graded
    polynomial coefficients c_m (index = homotopy degree m)."""

    coeffs: tuple[GradedPoly, ...]

    @classmethod
    def from_kappa(cls, poly: KPolynomial) -> "LambdaLinear":
        return cls(poly.coeffs)

    @property
    def degree_bound(self) -> int:
        return self.coeffs[0].degree_bound

    def coefficient(self, m: int) -> GradedPoly:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return GradedPoly.zero(self.degree_bound)

    def substitute(self, lam: LambdaSeq) -> GradedPoly:
        return substitute_lambda(KPolynomial(self.coeffs), lam)

    def k_projected_form(self, truncation: int) -> tuple[Fraction, ...]:
        """Linear form in lambda_0..lambda_N obtained by K-projecting every
        coefficient."""
        if len(self.coeffs) - 1 > truncation:
            raise ValueError("truncation too small for this evaluation")
        return tuple(
            k_project(self.coefficient(m)) for m in range(truncation + 1)
        )

    def to_json_obj(self) -> list[dict]:
        return [
            {"homotopy_index": m, "coefficient": p.to_json_obj()}
            for m, p in enumerate(self.coeffs)
        ]

    def forms_on_basis(
        self, basis: Sequence[GradedPoly], truncation: int
    ) -> list[tuple[Fraction, ...]]:
        """Write every c_m over the given monomial basis; returns, for each
        basis element, the linear form in lambda_0..lambda_N it carries."""
        if len(self.coeffs) - 1 > truncation:
            raise ValueError("truncation too small for this evaluation")
        columns = []
        for m in range(truncation + 1):
            c = self.coefficient(m)
            if c.is_zero:
                columns.append((Fraction(0),) * len(basis))
            else:
                columns.append(express_in_basis(c, basis))
        return [
            tuple(columns[m][b] for m in range(truncation + 1))
            for b in range(len(basis))
        ]


def sigma_mu_functional(n: int, h: int) -> int:
    """Value (coefficient of the tested class) of the n-th basis functional
    on e^{2h} eta_R(x): n! {h n}; zero whenever h < n, which is the
    convergence estimate for infinite sums."""
    if n < 0 or h < 0:
        raise ValueError("arguments must be non-negative")
    return math.factorial(n) * stirling2(h, n)


def k_project(p: GradedPoly) -> Fraction:
    """Ring map Q[m_1, ..., m_D] -> Q with m_j -> (-1)^j / (j+1).

    This is evaluation of the coefficient ring at the multiplicative group
    law normalized so x1 -> 1; complementary integral generators can be
    chosen inside its kernel, so it reads off the x1^n coefficient of a
    degree-n value.
    """
    values = [Fraction((-1) ** j, j + 1) for j in range(1, p.degree_bound + 1)]
    return p.ring_map(values)


def v_lambda(n: int, lam: LambdaSeq) -> Fraction:
    """K-projected value on b_n eta_R(x1) for the diagonal operation with
    eigenvalue sequence lambda; computed through the duality pairing with
    C(w, n), which gives exactly the n-th integrality form."""
    if not 1 <= n <= lam.truncation:
        raise ValueError(f"index {n} outside 1..{lam.truncation}")
    return pairing(lambda_to_sigma(lam), IvpPoly.binom_unit(n))


def _eta_x1_monomial(n: int, bound: int) -> HopfMonomial:
    dictionary = coefficient_dictionary(bound)
    x1, _ = dictionary["x1"]
    return HopfMonomial((n,) if n else (), 0, x1, 0, "x1")


def hopf_congruence_form(n: int, truncation: int) -> tuple[Fraction, ...]:
    """Linear form in lambda_0..lambda_N: the K-projection of the evaluation
    on b_n eta_R(x1) (n >= 1), or on the unit monomial for n = 0.

    By the two-path identity this equals ``congruence_vector(n, truncation)``;
    it is computed here through the orientation series so the identity can be
    tested rather than assumed.
    """
    if not 0 <= n <= truncation:
        raise ValueError(f"form index {n} outside truncation {truncation}")
    if n == 0:
        xi = HopfMonomial((), 0, None, 0, None)
        order, bound = 3, 2
    else:
        order = max(n, 3)
        bound = max(n, 2)
        xi = _eta_x1_monomial(n, bound)
    evaluated = psi_hat(xi, order=order, degree_bound=bound)
    linear = LambdaLinear.from_kappa(evaluated)
    return linear.k_projected_form(truncation)


def worked_congruence_forms(
    n: int, truncation: int | None = None
) -> tuple[list[str], list[tuple[Fraction, ...]]]:
    """The degree-2 and degree-3 evaluations on b_n eta_R(x1), written over
    the documented monomial bases {x1^2} and {x1^3, a21*x1}.

    Returns (basis labels, linear forms in lambda_0..lambda_N).
    """
    if n not in (2, 3):
        raise ValueError("dictionary bases are shipped for n = 2 and n = 3 only")
    if truncation is None:
        truncation = n
    bound = 3
    dictionary = coefficient_dictionary(bound)
    x1, _ = dictionary["x1"]
    a21, _ = dictionary["a21"]
    xi = _eta_x1_monomial(n, bound)
    evaluated = psi_hat(xi, order=3, degree_bound=bound)
    linear = LambdaLinear.from_kappa(evaluated)
    if n == 2:
        labels = ["x1^2"]
        basis = [x1 * x1]
    else:
        labels = ["x1^3", "a21*x1"]
        basis = [x1 * x1 * x1, a21 * x1]
    return labels, linear.forms_on_basis(basis, truncation)


@dataclass(frozen=True)
class MuFormRecord:
    """One cobordism-side linear form with its expansion over the K-side
    integrality forms."""

    name: str
    vector: tuple[Fraction, ...]
    combination: tuple[Fraction, ...]
    is_integral_combination: bool
    equals_clarke_index: Optional[int]

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "vector": [str(c) for c in self.vector],
            "combination": [str(c) for c in self.combination],
            "integral": self.is_integral_combination,
            "equals_form": self.equals_clarke_index,
        }


@dataclass(frozen=True)
class SolutionSetReport:
    """Certificate that the cobordism-side forms and the K-side forms cut out
    the same sequence lattice at the given truncation."""

    truncation: int
    forms: tuple[MuFormRecord, ...]
    clarke_covered: bool
    families_equal: bool

    def to_json_dict(self) -> dict:
        return {
            "kind": "solution-set-report",
            "truncation": self.truncation,
            "clarke_covered": self.clarke_covered,
            "families_equal": self.families_equal,
            "forms": [f.to_json_dict() for f in self.forms],
        }


def _integer_combination(
    target: tuple[Fraction, ...], truncation: int
) -> tuple[tuple[Fraction, ...], bool]:
    # The K-side forms are triangular with leading entry 1/n! at index n, so
    # back-substitution from the top index determines the expansion uniquely.
    residual = list(target)
    combo = [Fraction(0)] * (truncation + 1)
    for n in range(truncation, -1, -1):
        lead = residual[n]
        if lead == 0:
            continue
        coeff = lead * math.factorial(n)
        combo[n] = coeff
        row = congruence_vector(n, truncation)
        for k in range(truncation + 1):
            residual[k] -= coeff * row[k]
    integral = all(c.denominator == 1 for c in combo)
    return tuple(combo), integral


def solution_sets_equal(truncation: int) -> SolutionSetReport:
    """Compare the implemented cobordism-side congruence family with the
    K-side family at the given truncation.

    For every form the report gives its exact expansion over the K-side
    forms (integrality of the expansion certifies one lattice inclusion) and
    whether it reproduces a K-side form verbatim (covering certifies the
    other inclusion).
    """
    if truncation < 0:
        raise ValueError("truncation must be non-negative")
    clarke = [congruence_vector(n, truncation) for n in range(truncation + 1)]
    records: list[MuFormRecord] = []
    covered = [False] * (truncation + 1)

    def add(name: str, vector: tuple[Fraction, ...]) -> None:
        combo, integral = _integer_combination(vector, truncation)
        equals = next((n for n, c in enumerate(clarke) if c == vector), None)
        if equals is not None:
            covered[equals] = True
        records.append(MuFormRecord(name, vector, combo, integral, equals))

    for n in range(truncation + 1):
        source = "unit monomial" if n == 0 else f"b({n})*etaR(x1)"
        add(f"{source} : x1^{n} projection", hopf_congruence_form(n, truncation))
    if truncation >= 2:
        labels, forms = worked_congruence_forms(2, truncation)
        for label, vec in zip(labels, forms):
            add(f"b(2)*etaR(x1) : {label} coefficient", vec)
    if truncation >= 3:
        labels, forms = worked_congruence_forms(3, truncation)
        for label, vec in zip(labels, forms):
            add(f"b(3)*etaR(x1) : {label} coefficient", vec)

    clarke_covered = all(covered)
    families_equal = clarke_covered and all(r.is_integral_combination for r in records)
    return SolutionSetReport(
        truncation=truncation,
        forms=tuple(records),
        clarke_covered=clarke_covered,
        families_equal=families_equal,
    )
