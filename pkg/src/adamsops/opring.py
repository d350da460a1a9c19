"""Truncated sequence model of the ring of additive unstable degree-(0,0)
K-theory operations.

A diagonal operation is determined by its eigenvalue sequence
``lambda = (lambda_0, ..., lambda_N)``, where ``lambda_m`` is the scalar by
which it acts on the homotopy group in degree ``2m``.  The same operation has
coordinates ``a = (a_0, ..., a_N)`` in the topological basis

    sigma_n = sum_k (-1)^(n+k) C(n,k) psi^k,

where ``psi^k`` is the Adams operation with eigenvalues ``k^m``.  The two
coordinate systems are exchanged by mutually inverse triangular Stirling
transforms:

    lambda_m = sum_n a_n * n! * {m n}
    a_n      = (1/n!) * sum_k (-1)^(n-k) <n k> lambda_k

A rational eigenvalue sequence comes from a genuine operation exactly when
every ``a_n`` is an integer; ``check_congruences`` certifies this condition
index by index.  Sequences deliberately admit arbitrary rational entries so
that failing candidates are representable.

All values here are immutable and the functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .stirling import binomial, stirling1_unsigned, stirling2

__all__ = [
    "LambdaSeq",
    "SigmaCoeffs",
    "CongruenceRecord",
    "CongruenceCert",
    "congruence_vector",
    "sigma_to_lambda",
    "lambda_to_sigma",
    "check_congruences",
    "multiply",
    "coproduct_sigma",
    "act_on_homotopy",
    "sigma_eigenvalues",
]

Rational = Union[int, str, Fraction]


def _to_fractions(entries: Iterable[Rational]) -> tuple[Fraction, ...]:
    out = tuple(Fraction(e) for e in entries)
    if not out:
        raise ValueError("a sequence needs at least one entry (index 0)")
    return out


@dataclass(frozen=True)
class LambdaSeq:
    """Eigenvalue sequence of a diagonal operation, indices 0..N."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _to_fractions(self.entries))

    @property
    def truncation(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.entries[m]

    @classmethod
    def adams(cls, k: int, truncation: int) -> "LambdaSeq":
        """Eigenvalues (k^m) of the Adams operation with parameter k (0^0 = 1)."""
        kk = Fraction(k)
        return cls(tuple(kk**m for m in range(truncation + 1)))

    def resized(self, truncation: int) -> "LambdaSeq":
        """Truncate, or extend by zero-filling the sigma-coordinates.

        Eigenvalue entries themselves are never padded: the sequence is
        carried to sigma-coordinates, extended with zeros there, and carried
        back, so extension agrees with extending the underlying operation.
        """
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        if truncation <= self.truncation:
            return LambdaSeq(self.entries[: truncation + 1])
        return sigma_to_lambda(lambda_to_sigma(self).resized(truncation))


@dataclass(frozen=True)
class SigmaCoeffs:
    """Coefficient vector in the sigma basis, indices 0..N."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _to_fractions(self.entries))

    @property
    def truncation(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.entries[n]

    @property
    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries)

    @classmethod
    def unit(cls, n: int, truncation: int) -> "SigmaCoeffs":
        """The basis element sigma_n as a coefficient vector."""
        if not 0 <= n <= truncation:
            raise ValueError(f"unit index {n} outside truncation {truncation}")
        return cls(tuple(Fraction(int(i == n)) for i in range(truncation + 1)))

    def resized(self, truncation: int) -> "SigmaCoeffs":
        """Truncate or zero-fill; sigma-coefficients are the coordinates in
        which extension is plain padding."""
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        if truncation <= self.truncation:
            return SigmaCoeffs(self.entries[: truncation + 1])
        pad = (Fraction(0),) * (truncation - self.truncation)
        return SigmaCoeffs(self.entries + pad)


@dataclass(frozen=True)
class CongruenceRecord:
    """One line of a certificate: the exact value of the n-th linear form and
    whether it lies in the relevant coefficient ring."""

    index: int
    value: Fraction
    passes: bool
    valuation: Optional[int] = None  # p-adic valuation, p-local certificates only


@dataclass(frozen=True)
class CongruenceCert:
    """Machine-checkable record of which integrality congruences hold.

    ``prime`` is None for the integral check and an odd prime for the p-local
    one.  The overall verdict is by construction the conjunction of the
    per-index verdicts.
    """

    records: tuple[CongruenceRecord, ...]
    prime: Optional[int] = None

    @property
    def truncation(self) -> int:
        return len(self.records) - 1

    @property
    def passes(self) -> bool:
        return all(r.passes for r in self.records)

    @property
    def first_failure(self) -> Optional[CongruenceRecord]:
        return next((r for r in self.records if not r.passes), None)

    def to_json_dict(self) -> dict:
        recs = []
        for r in self.records:
            rec = {"n": r.index, "value": str(r.value), "passes": r.passes}
            if self.prime is not None:
                rec["valuation"] = r.valuation
            recs.append(rec)
        return {
            "kind": "congruence-certificate",
            "prime": self.prime,
            "truncation": self.truncation,
            "passes": self.passes,
            "records": recs,
        }


def congruence_vector(n: int, truncation: int) -> tuple[Fraction, ...]:
    """The n-th integrality form as a vector over lambda_0..lambda_N:
    entry k is (-1)^(n-k) <n k> / n!."""
    if not 0 <= n <= truncation:
        raise ValueError(f"form index {n} outside truncation {truncation}")
    fact = math.factorial(n)
    return tuple(
        Fraction((-1) ** (n - k) * stirling1_unsigned(n, k), fact) if k <= n else Fraction(0)
        for k in range(truncation + 1)
    )


def sigma_to_lambda(a: SigmaCoeffs) -> LambdaSeq:
    """Eigenvalue sequence of sum_n a_n sigma_n: lambda_m = sum_n a_n n! {m n}."""
    entries = tuple(
        sum(
            (a[n] * math.factorial(n) * stirling2(m, n) for n in range(m + 1)),
            Fraction(0),
        )
        for m in range(a.truncation + 1)
    )
    return LambdaSeq(entries)


def lambda_to_sigma(lam: LambdaSeq) -> SigmaCoeffs:
    """Sigma-coordinates of an eigenvalue sequence; exact inverse of
    ``sigma_to_lambda`` at every truncation."""
    n_max = lam.truncation
    entries = []
    for n in range(n_max + 1):
        row = congruence_vector(n, n_max)
        entries.append(sum((c * x for c, x in zip(row, lam.entries)), Fraction(0)))
    return SigmaCoeffs(tuple(entries))


def check_congruences(lam: LambdaSeq) -> CongruenceCert:
    """Certify lambda as the eigenvalue sequence of an integral operation:
    record the exact value of each form and whether it is an integer."""
    a = lambda_to_sigma(lam)
    records = tuple(
        CongruenceRecord(index=n, value=a[n], passes=(a[n].denominator == 1))
        for n in range(lam.truncation + 1)
    )
    return CongruenceCert(records=records)


def multiply(lam: LambdaSeq, other: LambdaSeq) -> LambdaSeq:
    """Composition of diagonal operations: pointwise eigenvalue product."""
    if lam.truncation != other.truncation:
        raise ValueError(
            f"truncation mismatch: {lam.truncation} != {other.truncation}"
        )
    return LambdaSeq(tuple(x * y for x, y in zip(lam.entries, other.entries)))


def coproduct_sigma(n: int) -> list[list[int]]:
    """Coproduct of sigma_n in the sigma (x) sigma basis.

    Returns the (n+1) x (n+1) integer matrix d with
    d[i][j] = sum_k (-1)^(n+k) C(n,k) C(k,i) C(k,j), so that
    Delta sigma_n = sum_{i,j} d[i][j] sigma_i (x) sigma_j.  The j = 0 column
    is the unit vector at i = n (counit property).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    d = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            d[i][j] = sum(
                (-1) ** (n + k) * binomial(n, k) * binomial(k, i) * binomial(k, j)
                for k in range(n + 1)
            )
    return d


def act_on_homotopy(lam: LambdaSeq, m: int, t: Rational) -> Fraction:
    """Action on a homotopy class in degree 2m: multiplication by lambda_m."""
    if not 0 <= m <= lam.truncation:
        raise ValueError(f"homotopy index {m} outside truncation {lam.truncation}")
    return lam[m] * Fraction(t)


def sigma_eigenvalues(n: int, truncation: int) -> LambdaSeq:
    """Eigenvalue sequence of the basis element sigma_n: (n! {m n})_m."""
    return sigma_to_lambda(SigmaCoeffs.unit(n, truncation))
