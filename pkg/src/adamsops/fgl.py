"""Truncated formal-group-law engine over the graded rational ring
Q[m_1, ..., m_D].

The logarithm is the generic one,

    log(x) = x + m_1 x^2 + m_2 x^3 + ... + m_{T-1} x^T,

with free generators m_i of degree i.  ``exp`` is its compositional inverse,
the group law is F(s, t) = exp(log s + log t), and the k-series is
exp(k log x).  The eigenvalue-parametrized orientation series

    B(x) = kappa^{-1} exp(kappa * log(x)) = sum_i B_i(kappa) x^i

packages how the whole Adams family acts on the orientation class; its
coefficients B_i are polynomials in the formal eigenvalue variable kappa
with graded coefficients (B_1 = 1, and kappa = 1 gives the identity series).

Truncation discipline: a computation is parametrized by the series order T
and the degree bound D (defaults 10 and 9).  Polynomial arithmetic lives in
the quotient by degrees above D; everything produced within a request's
capacity is homogeneous of degree within the bound, so no exact information
is ever lost.  Requests that would exceed capacity raise ``CapacityError``
instead of silently truncating.

Two sign conventions are not forced by the algebra alone and are fixed here
once and for all, by requiring that the degree-2 and degree-3 evaluations in
:mod:`adamsops.hopfeval` come out in the classical normal forms:

  * the dictionary image of the degree-one coefficient generator is
    x1 = -2 m_1;
  * a21 is the group-law coefficient of s^2 t, namely 4 m_1^2 - 3 m_2.

All solution sets computed downstream are invariant under these choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

__all__ = [
    "CapacityError",
    "DEFAULT_ORDER",
    "DEFAULT_DEGREE_BOUND",
    "GradedPoly",
    "KPolynomial",
    "TruncSeries",
    "log_series",
    "exp_series",
    "fgl_coeff",
    "adams_orientation_series",
    "k_series",
    "express_in_basis",
    "coefficient_dictionary",
]

DEFAULT_ORDER = 10
DEFAULT_DEGREE_BOUND = 9

Rational = Union[int, Fraction]
Monomial = tuple[int, ...]  # exponent of m_1, m_2, ...; trailing zeros stripped


class CapacityError(Exception):
    """A request exceeded the configured series order or degree bound."""


def _resolve_capacity(order: int, degree_bound: int | None) -> int:
    if order < 1:
        raise CapacityError(f"series order must be at least 1, got {order}")
    if degree_bound is None:
        degree_bound = order - 1
    if degree_bound < order - 1:
        raise CapacityError(
            f"degree bound {degree_bound} cannot represent the order-{order} "
            f"logarithm coefficient (needs at least {order - 1})"
        )
    return degree_bound


def monomial_degree(key: Monomial) -> int:
    """Total degree of a monomial in the m_i; m_i carries degree i."""
    return sum((i + 1) * e for i, e in enumerate(key))


def _mul_keys(a: Monomial, b: Monomial) -> Monomial:
    n = max(len(a), len(b))
    out = [0] * n
    for i, e in enumerate(a):
        out[i] += e
    for i, e in enumerate(b):
        out[i] += e
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class GradedPoly:
    """Polynomial in m_1, ..., m_D over Q, truncated above the degree bound.

    Stored as sorted (monomial, coefficient) pairs with no zero coefficients;
    instances are immutable and hashable.
    """

    terms: tuple[tuple[Monomial, Fraction], ...]
    degree_bound: int

    def __post_init__(self) -> None:
        if self.degree_bound < 0:
            raise ValueError("degree bound must be non-negative")

    @classmethod
    def from_dict(cls, d: Mapping[Monomial, Rational], degree_bound: int) -> "GradedPoly":
        terms = []
        for key, c in d.items():
            cc = Fraction(c)
            if cc == 0:
                continue
            key = tuple(key)
            while key and key[-1] == 0:
                key = key[:-1]
            if monomial_degree(key) > degree_bound:
                continue
            terms.append((key, cc))
        return cls(tuple(sorted(terms)), degree_bound)

    @classmethod
    def zero(cls, degree_bound: int) -> "GradedPoly":
        return cls((), degree_bound)

    @classmethod
    def constant(cls, c: Rational, degree_bound: int) -> "GradedPoly":
        return cls.from_dict({(): c}, degree_bound)

    @classmethod
    def one(cls, degree_bound: int) -> "GradedPoly":
        return cls.constant(1, degree_bound)

    @classmethod
    def generator(cls, i: int, degree_bound: int) -> "GradedPoly":
        """The generator m_i (degree i)."""
        if not 1 <= i <= degree_bound:
            raise CapacityError(
                f"generator m_{i} is outside the degree bound {degree_bound}"
            )
        key = tuple(0 for _ in range(i - 1)) + (1,)
        return cls(((key, Fraction(1)),), degree_bound)

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: Monomial) -> Fraction:
        key = tuple(key)
        while key and key[-1] == 0:
            key = key[:-1]
        for k, c in self.terms:
            if k == key:
                return c
        return Fraction(0)

    def degree(self) -> int | None:
        """Maximal monomial degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(monomial_degree(k) for k, _ in self.terms)

    def is_homogeneous(self, d: int) -> bool:
        return all(monomial_degree(k) == d for k, _ in self.terms)

    def _require_same_bound(self, other: "GradedPoly") -> None:
        if self.degree_bound != other.degree_bound:
            raise ValueError(
                f"degree bound mismatch: {self.degree_bound} != {other.degree_bound}"
            )

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._require_same_bound(other)
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, Fraction(0)) + c
        return GradedPoly.from_dict(d, self.degree_bound)

    def __neg__(self) -> "GradedPoly":
        return GradedPoly(tuple((k, -c) for k, c in self.terms), self.degree_bound)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def __mul__(self, other: Union["GradedPoly", Rational]) -> "GradedPoly":
        if not isinstance(other, GradedPoly):
            c = Fraction(other)
            if c == 0:
                return GradedPoly.zero(self.degree_bound)
            return GradedPoly(
                tuple((k, x * c) for k, x in self.terms), self.degree_bound
            )
        self._require_same_bound(other)
        out: dict[Monomial, Fraction] = {}
        for ka, ca in self.terms:
            for kb, cb in other.terms:
                k = _mul_keys(ka, kb)
                if monomial_degree(k) > self.degree_bound:
                    continue
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return GradedPoly.from_dict(out, self.degree_bound)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedPoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = GradedPoly.one(self.degree_bound)
        for _ in range(n):
            out = out * self
        return out

    def ring_map(self, values: Sequence[Rational]) -> Fraction:
        """Apply the ring homomorphism m_i -> values[i-1] (exact)."""
        total = Fraction(0)
        for key, c in self.terms:
            if len(key) > len(values):
                raise ValueError("not enough generator values supplied")
            term = Fraction(c)
            for i, e in enumerate(key):
                if e:
                    term *= Fraction(values[i]) ** e
            total += term
        return total

    def to_json_obj(self) -> list[dict]:
        return [
            {"exponents": list(k), "coefficient": str(c)} for k, c in self.terms
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.terms:
            factors = [
                f"m{i + 1}" if e == 1 else f"m{i + 1}^{e}"
                for i, e in enumerate(key)
                if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


@dataclass(frozen=True)
class KPolynomial:
    """Polynomial in the formal eigenvalue variable kappa with GradedPoly
    coefficients; index i of ``coeffs`` is the kappa^i coefficient."""

    coeffs: tuple[GradedPoly, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("KPolynomial needs at least one coefficient")
        bounds = {p.degree_bound for p in self.coeffs}
        if len(bounds) != 1:
            raise ValueError("mixed degree bounds in KPolynomial")
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree_bound(self) -> int:
        return self.coeffs[0].degree_bound

    @property
    def kappa_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.coeffs)

    @classmethod
    def zero(cls, degree_bound: int) -> "KPolynomial":
        return cls((GradedPoly.zero(degree_bound),))

    @classmethod
    def one(cls, degree_bound: int) -> "KPolynomial":
        return cls((GradedPoly.one(degree_bound),))

    @classmethod
    def from_graded(cls, p: GradedPoly) -> "KPolynomial":
        return cls((p,))

    @classmethod
    def kappa_power(cls, n: int, degree_bound: int) -> "KPolynomial":
        return cls(
            tuple(GradedPoly.zero(degree_bound) for _ in range(n))
            + (GradedPoly.one(degree_bound),)
        )

    def coefficient(self, i: int) -> GradedPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return GradedPoly.zero(self.degree_bound)

    def shift(self, n: int) -> "KPolynomial":
        """Multiply by kappa^n."""
        if n < 0:
            raise ValueError("negative kappa shifts are not defined")
        pad = tuple(GradedPoly.zero(self.degree_bound) for _ in range(n))
        return KPolynomial(pad + self.coeffs)

    def __add__(self, other: "KPolynomial") -> "KPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return KPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __neg__(self) -> "KPolynomial":
        return KPolynomial(tuple(-p for p in self.coeffs))

    def __sub__(self, other: "KPolynomial") -> "KPolynomial":
        return self + (-other)

    def __mul__(
        self, other: Union["KPolynomial", GradedPoly, Rational]
    ) -> "KPolynomial":
        if isinstance(other, GradedPoly):
            other = KPolynomial.from_graded(other)
        if not isinstance(other, KPolynomial):
            return KPolynomial(tuple(p * other for p in self.coeffs))
        n = self.kappa_degree + other.kappa_degree
        out = [GradedPoly.zero(self.degree_bound) for _ in range(n + 1)]
        for i, p in enumerate(self.coeffs):
            if p.is_zero:
                continue
            for j, q in enumerate(other.coeffs):
                if q.is_zero:
                    continue
                out[i + j] = out[i + j] + p * q
        return KPolynomial(tuple(out))

    __rmul__ = __mul__

    def evaluate(self, kappa: Rational) -> GradedPoly:
        """Specialize the eigenvalue variable to an exact rational."""
        kk = Fraction(kappa)
        total = GradedPoly.zero(self.degree_bound)
        power = Fraction(1)
        for p in self.coeffs:
            total = total + p * power
            power *= kk
        return total

    def to_json_obj(self) -> list[list[dict]]:
        return [p.to_json_obj() for p in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for i, p in enumerate(self.coeffs):
            if p.is_zero:
                continue
            head = "1" if i == 0 else ("k" if i == 1 else f"k^{i}")
            parts.append(f"({p})*{head}" if i else f"({p})")
        return " + ".join(parts) if parts else "0"


Coefficient = Union[GradedPoly, KPolynomial]


def _ring_one(sample: Coefficient) -> Coefficient:
    if isinstance(sample, KPolynomial):
        return KPolynomial.one(sample.degree_bound)
    return GradedPoly.one(sample.degree_bound)


@dataclass(frozen=True)
class TruncSeries:
    """Power series in x truncated at a fixed order; ``coeffs[i]`` is the
    x^i coefficient (index 0 included, zero for composable series)."""

    coeffs: tuple[Coefficient, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Coefficient:
        if not 0 <= i <= self.order:
            raise CapacityError(f"coefficient x^{i} beyond series order {self.order}")
        return self.coeffs[i]

    def _zero(self) -> Coefficient:
        return self.coeffs[0] * 0

    def _require_same_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} != {other.order}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._require_same_order(other)
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: Union["TruncSeries", Rational]) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries(tuple(a * other for a in self.coeffs))
        self._require_same_order(other)
        out = [self._zero() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                if i + j > self.order:
                    break
                out[i + j] = out[i + j] + a * b
        return TruncSeries(tuple(out))

    __rmul__ = __mul__

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(x)) to the common order; inner must have no constant
        term, otherwise the truncated composition is not exact."""
        self._require_same_order(inner)
        z = inner.coeffs[0]
        if not (z * 0) == z:
            raise ValueError("inner series must have zero constant term")
        acc = TruncSeries(
            (self.coeffs[0],) + tuple(inner._zero() for _ in range(self.order))
        )
        power = TruncSeries(
            (_ring_one(inner.coeffs[0]),)
            + tuple(inner._zero() for _ in range(self.order))
        )
        for a in range(1, self.order + 1):
            power = power * inner
            term = power * self.coeffs[a]
            acc = acc + term
        return acc

    def map_coefficients(self, fn) -> "TruncSeries":
        return TruncSeries(tuple(fn(c) for c in self.coeffs))


def log_series(order: int, degree_bound: int | None = None) -> TruncSeries:
    """log(x) = x + m_1 x^2 + ... + m_{T-1} x^T."""
    bound = _resolve_capacity(order, degree_bound)
    coeffs = [GradedPoly.zero(bound), GradedPoly.one(bound)]
    for i in range(2, order + 1):
        coeffs.append(GradedPoly.generator(i - 1, bound))
    return TruncSeries(tuple(coeffs))


@lru_cache(maxsize=None)
def _exp_series_cached(order: int, bound: int) -> TruncSeries:
    log = log_series(order, bound)
    zero = GradedPoly.zero(bound)
    coeffs = [zero, GradedPoly.one(bound)] + [zero] * (order - 1)
    for n in range(2, order + 1):
        # With g fixed below degree n and g_n = 0, the x^n coefficient of
        # log(g(x)) - x is exactly the defect that -g_n must cancel.
        g = TruncSeries(tuple(coeffs))
        defect = log.compose(g).coefficient(n)
        coeffs[n] = -defect
    return TruncSeries(tuple(coeffs))


def exp_series(order: int, degree_bound: int | None = None) -> TruncSeries:
    """Compositional inverse of ``log_series``: exp(log(x)) = x mod x^{T+1}."""
    bound = _resolve_capacity(order, degree_bound)
    return _exp_series_cached(order, bound)


# -- bivariate expansion of the group law -----------------------------------

BiKey = tuple[int, int]


def _bi_mul(
    a: dict[BiKey, GradedPoly], b: dict[BiKey, GradedPoly], order: int
) -> dict[BiKey, GradedPoly]:
    out: dict[BiKey, GradedPoly] = {}
    for (i1, j1), p in a.items():
        for (i2, j2), q in b.items():
            i, j = i1 + i2, j1 + j2
            if i + j > order:
                continue
            prod = p * q
            if prod.is_zero:
                continue
            key = (i, j)
            out[key] = out[key] + prod if key in out else prod
    return out


@lru_cache(maxsize=None)
def _fgl_expansion(order: int, bound: int) -> dict[BiKey, GradedPoly]:
    log = log_series(order, bound)
    exp = exp_series(order, bound)
    arg: dict[BiKey, GradedPoly] = {}
    for a in range(1, order + 1):
        c = log.coefficient(a)
        arg[(a, 0)] = c
        arg[(0, a)] = c
    total: dict[BiKey, GradedPoly] = {}
    power: dict[BiKey, GradedPoly] = {(0, 0): GradedPoly.one(bound)}
    for a in range(1, order + 1):
        power = _bi_mul(power, arg, order)
        e = exp.coefficient(a)
        for key, p in power.items():
            term = p * e
            if term.is_zero:
                continue
            total[key] = total[key] + term if key in total else term
    return {k: v for k, v in total.items() if not v.is_zero}


def fgl_coeff(
    i: int,
    j: int,
    order: int = DEFAULT_ORDER,
    degree_bound: int | None = None,
) -> GradedPoly:
    """Coefficient of s^i t^j in the group law F(s, t) = exp(log s + log t).

    Symmetric in (i, j); homogeneous of degree i + j - 1; F(s, 0) = s.
    """
    if i < 0 or j < 0 or i + j < 1:
        raise ValueError("need i, j >= 0 with i + j >= 1")
    bound = _resolve_capacity(order, degree_bound)
    if i + j > order:
        raise CapacityError(f"coefficient ({i},{j}) beyond series order {order}")
    table = _fgl_expansion(order, bound)
    return table.get((i, j), GradedPoly.zero(bound))


def adams_orientation_series(
    order: int = DEFAULT_ORDER, degree_bound: int | None = None
) -> TruncSeries:
    """The series kappa^{-1} exp(kappa log x) = sum_i B_i(kappa) x^i.

    B_i(kappa) = sum_{h=1}^{i} e_h kappa^{h-1} [x^i] (log x)^h, where e_h are
    the exp coefficients.  B_1(kappa) = 1, and specializing kappa = 1 returns
    the identity series.
    """
    bound = _resolve_capacity(order, degree_bound)
    log = log_series(order, bound)
    exp = exp_series(order, bound)
    logpow: dict[int, TruncSeries] = {1: log}
    for h in range(2, order + 1):
        logpow[h] = logpow[h - 1] * log
    zero = GradedPoly.zero(bound)
    coeffs: list[KPolynomial] = [KPolynomial.zero(bound)]
    for i in range(1, order + 1):
        kp = [zero] * i
        for h in range(1, i + 1):
            term = exp.coefficient(h) * logpow[h].coefficient(i)
            kp[h - 1] = kp[h - 1] + term
        coeffs.append(KPolynomial(tuple(kp)))
    return TruncSeries(tuple(coeffs))


def k_series(
    k: Rational, order: int = DEFAULT_ORDER, degree_bound: int | None = None
) -> TruncSeries:
    """The k-series exp(k log x) of the group law at an exact scalar k."""
    bound = _resolve_capacity(order, degree_bound)
    scaled = log_series(order, bound) * Fraction(k)
    return exp_series(order, bound).compose(scaled)


def express_in_basis(
    target: GradedPoly, basis: Sequence[GradedPoly]
) -> tuple[Fraction, ...]:
    """Solve target = sum_i c_i basis[i] exactly.

    Raises ValueError when the target is outside the span or the basis is
    dependent.
    """
    if not basis:
        raise ValueError("empty basis")
    keys = sorted({k for p in basis for k, _ in p.terms} | {k for k, _ in target.terms})
    rows = [[p.coefficient(k) for p in basis] + [target.coefficient(k)] for k in keys]
    ncols = len(basis)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            raise ValueError("basis elements are linearly dependent")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        inv = 1 / pr[col]
        rows[r] = [x * inv for x in pr]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for row in rows[r:]:
        if row[-1] != 0:
            raise ValueError("target is not in the span of the basis")
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = rows[i][-1]
    return tuple(sol)


def coefficient_dictionary(
    degree_bound: int = DEFAULT_DEGREE_BOUND,
) -> dict[str, tuple[GradedPoly, int]]:
    """Named integral coefficient-ring elements expressed in the m_i, with
    their half-degrees.

    Only the elements the worked degree-2/3 evaluations need are shipped:
    x1 = -2 m_1 (sign fixed by calibration, see the module docstring) and
    a21 = [s^2 t] F(s, t).
    """
    if degree_bound < 2:
        raise CapacityError("the dictionary needs degree bound at least 2")
    x1 = GradedPoly.generator(1, degree_bound) * (-2)
    a21 = fgl_coeff(2, 1, order=3, degree_bound=degree_bound)
    return {"x1": (x1, 1), "a21": (a21, 2)}
