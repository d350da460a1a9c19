"""Integer-valued polynomials in one variable and their duality with the
operation ring.

A polynomial f in Q[w] maps the integers into the integers exactly when its
coordinates in the binomial basis C(w, 0), C(w, 1), ... are integers, so the
binomial coordinates are the canonical storage format and membership is a
per-coefficient check.  The power basis is available as a view.

The duality pairing is normalized by <sigma_n, C(w, m)> = delta_nm and
extended bilinearly; under it <theta, w^h> recovers the eigenvalue of theta
in degree 2h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .opring import LambdaSeq, SigmaCoeffs
from .stirling import stirling1_unsigned, stirling2

__all__ = [
    "IvpPoly",
    "from_power_basis",
    "is_integer_valued",
    "assert_integer_valued",
    "pairing",
    "pi_lambda",
]

Rational = Union[int, str, Fraction]


def _strip(coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    if not out:
        out = [Fraction(0)]
    return tuple(out)


@dataclass(frozen=True)
class IvpPoly:
    """Polynomial stored by binomial-basis coefficients: f = sum c_n C(w, n)."""

    binom_coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "binom_coeffs", _strip(self.binom_coeffs))

    @property
    def degree(self) -> int:
        """Degree of f; the zero polynomial reports degree 0."""
        return len(self.binom_coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.binom_coeffs == (Fraction(0),)

    @classmethod
    def zero(cls) -> "IvpPoly":
        return cls((Fraction(0),))

    @classmethod
    def binom_unit(cls, n: int) -> "IvpPoly":
        """The basis polynomial C(w, n)."""
        if n < 0:
            raise ValueError("n must be non-negative")
        return cls(tuple(Fraction(int(i == n)) for i in range(n + 1)))

    def to_power_basis(self) -> tuple[Fraction, ...]:
        """Coefficients in the power basis, via
        C(w, n) = (1/n!) sum_k (-1)^(n-k) <n k> w^k."""
        deg = self.degree
        out = [Fraction(0)] * (deg + 1)
        for n, c in enumerate(self.binom_coeffs):
            if c == 0:
                continue
            fact = math.factorial(n)
            for k in range(n + 1):
                out[k] += c * Fraction((-1) ** (n - k) * stirling1_unsigned(n, k), fact)
        return _strip(out)

    def evaluate(self, w: Rational) -> Fraction:
        """Exact value f(w); C(w, n) is the falling-factorial polynomial, so
        any rational argument (negative included) is fine."""
        ww = Fraction(w)
        total = Fraction(0)
        binom = Fraction(1)  # C(w, 0)
        for n, c in enumerate(self.binom_coeffs):
            if n > 0:
                binom = binom * (ww - (n - 1)) / n
            total += c * binom
        return total

    def __add__(self, other: "IvpPoly") -> "IvpPoly":
        n = max(len(self.binom_coeffs), len(other.binom_coeffs))
        a = self.binom_coeffs + (Fraction(0),) * (n - len(self.binom_coeffs))
        b = other.binom_coeffs + (Fraction(0),) * (n - len(other.binom_coeffs))
        return IvpPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IvpPoly":
        return IvpPoly(tuple(-c for c in self.binom_coeffs))

    def __sub__(self, other: "IvpPoly") -> "IvpPoly":
        return self + (-other)

    def __mul__(self, other: Union["IvpPoly", Rational]) -> "IvpPoly":
        if not isinstance(other, IvpPoly):
            c = Fraction(other)
            return IvpPoly(tuple(c * x for x in self.binom_coeffs))
        # product in the power basis, converted back
        a = self.to_power_basis()
        b = other.to_power_basis()
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] += x * y
        return from_power_basis(prod)

    __rmul__ = __mul__

    def to_json_dict(self) -> dict:
        return {
            "kind": "integer-valued-polynomial",
            "binomial_coefficients": [str(c) for c in self.binom_coeffs],
        }


def from_power_basis(coeffs: Sequence[Rational]) -> IvpPoly:
    """Build from power-basis coefficients, via w^h = sum_n {h n} n! C(w, n)."""
    power = [Fraction(c) for c in coeffs] or [Fraction(0)]
    deg = len(power) - 1
    out = [Fraction(0)] * (deg + 1)
    for h, p in enumerate(power):
        if p == 0:
            continue
        for n in range(h + 1):
            out[n] += p * stirling2(h, n) * math.factorial(n)
    return IvpPoly(tuple(out))


def is_integer_valued(f: IvpPoly) -> bool:
    """True iff f maps the integers into the integers (all binomial
    coordinates integral)."""
    return all(c.denominator == 1 for c in f.binom_coeffs)


def assert_integer_valued(f: IvpPoly) -> None:
    for n, c in enumerate(f.binom_coeffs):
        if c.denominator != 1:
            raise ValueError(f"not integer-valued: binomial coefficient c_{n} = {c}")


def pairing(a: SigmaCoeffs, f: IvpPoly) -> Fraction:
    """Duality pairing <sum a_n sigma_n, sum c_m C(w, m)> = sum a_n c_n."""
    if f.degree > a.truncation:
        raise ValueError(
            f"polynomial degree {f.degree} exceeds truncation {a.truncation}"
        )
    return sum(
        (x * c for x, c in zip(a.entries, f.binom_coeffs)),
        Fraction(0),
    )


def pi_lambda(u_exp: int, v_exp: int, lam: LambdaSeq) -> Fraction:
    """Evaluation against a monomial u^a e^(2b) v^b: the value is lambda_b.

    The u-exponent is accepted purely as grading bookkeeping; the value
    depends only on the v-degree b.
    """
    if not 0 <= v_exp <= lam.truncation:
        raise ValueError(f"index {v_exp} outside truncation {lam.truncation}")
    return lam[v_exp]
