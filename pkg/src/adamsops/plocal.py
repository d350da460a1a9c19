"""The p-local split setting for an odd prime p: the Adams idempotent on
eigenvalue sequences, p-local congruence certificates, the summand sequence
model, and extraction of a topological basis from the idempotent-image
spanning set.

The idempotent e_0 keeps the eigenvalues in degrees divisible by 2(p-1) and
zeroes the rest.  A summand-flavored sequence mu indexes only the surviving
degrees (entry n acts in degree 2(p-1)n); membership is decided by
zero-extending to a full sequence and requiring every integrality form to be
a p-local integer.

Basis extraction works with the sigma-coordinates of the zero-extensions:
those coordinates are p-local integers for every genuine operation and carry
a filtration in which the spanning rows e_0 sigma_n admit unit pivots, so a
greedy sweep produces a basis certificate whose pivot minor is a p-local
unit.  The raw summand sequences of all rows are reported alongside.  The
choice of basis is greedy (lowest valuation, then lowest row index) and is
recorded in the report; any other valid choice spans the same lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .opring import (
    CongruenceCert,
    CongruenceRecord,
    LambdaSeq,
    congruence_vector,
    sigma_eigenvalues,
)

__all__ = [
    "PLocalSeq",
    "padic_valuation",
    "adams_idempotent",
    "zero_extension",
    "check_congruences_plocal",
    "summand_membership",
    "sigma_summand_sequence",
    "SpanningBasisReport",
    "spanning_set_reduce",
]

Rational = Union[int, str, Fraction]


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def padic_valuation(x: Fraction, p: int) -> Optional[int]:
    """nu_p(x); None for x = 0 (infinite valuation)."""
    x = Fraction(x)
    if x == 0:
        return None
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PLocalSeq:
    """Eigenvalue sequence in the p-local world.

    flavor "full": entry m is the eigenvalue in degree 2m (model of the
    idempotent image inside all p-local operations).
    flavor "summand": entry n is the eigenvalue in degree 2(p-1)n.
    """

    prime: int
    entries: tuple[Fraction, ...]
    flavor: str = "full"

    def __post_init__(self) -> None:
        _require_odd_prime(self.prime)
        if self.flavor not in ("full", "summand"):
            raise ValueError(f"flavor must be 'full' or 'summand', got {self.flavor!r}")
        entries = tuple(Fraction(e) for e in self.entries)
        if not entries:
            raise ValueError("a sequence needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @property
    def truncation(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]


def adams_idempotent(lam: LambdaSeq, p: int) -> PLocalSeq:
    """Apply e_0: keep eigenvalues in degrees divisible by 2(p-1), zero the
    rest.  Idempotent and multiplicative on sequences."""
    _require_odd_prime(p)
    entries = tuple(
        lam[m] if m % (p - 1) == 0 else Fraction(0)
        for m in range(lam.truncation + 1)
    )
    return PLocalSeq(prime=p, entries=entries, flavor="full")


def zero_extension(mu: PLocalSeq) -> PLocalSeq:
    """Full-flavor sequence of the summand sequence mu: entry (p-1)n is
    mu_n, all other entries zero."""
    if mu.flavor != "summand":
        raise ValueError("zero_extension expects a summand-flavor sequence")
    p = mu.prime
    n_full = (p - 1) * mu.truncation
    entries = [
        mu[m // (p - 1)] if m % (p - 1) == 0 else Fraction(0)
        for m in range(n_full + 1)
    ]
    return PLocalSeq(prime=p, entries=tuple(entries), flavor="full")


def _plocal_cert(lam_entries: tuple[Fraction, ...], p: int) -> CongruenceCert:
    trunc = len(lam_entries) - 1
    records = []
    for n in range(trunc + 1):
        row = congruence_vector(n, trunc)
        value = sum((c * x for c, x in zip(row, lam_entries)), Fraction(0))
        v = padic_valuation(value, p)
        records.append(
            CongruenceRecord(
                index=n, value=value, passes=(v is None or v >= 0), valuation=v
            )
        )
    return CongruenceCert(records=tuple(records), prime=p)


def check_congruences_plocal(seq: PLocalSeq) -> CongruenceCert:
    """p-local congruence certificate: every form must have non-negative
    p-adic valuation."""
    if seq.flavor != "full":
        raise ValueError("check_congruences_plocal expects a full-flavor sequence")
    return _plocal_cert(seq.entries, seq.prime)


def summand_membership(mu: PLocalSeq) -> CongruenceCert:
    """Membership certificate for the summand model: the zero-extension must
    pass every p-local congruence."""
    return _plocal_cert(zero_extension(mu).entries, mu.prime)


def sigma_summand_sequence(n: int, p: int, truncation: int) -> PLocalSeq:
    """Summand sequence of e_0 sigma_n: entry j is n! {(p-1)j n}."""
    _require_odd_prime(p)
    lam = sigma_eigenvalues(n, (p - 1) * truncation)
    entries = tuple(lam[(p - 1) * j] for j in range(truncation + 1))
    return PLocalSeq(prime=p, entries=entries, flavor="summand")


@dataclass(frozen=True)
class SpanningBasisReport:
    """Outcome of reducing the spanning rows e_0 sigma_n at a truncation.

    ``selected`` are the row indices chosen as a topological basis; the
    pivot minor is taken in sigma-coordinates of the zero-extensions (pivot
    columns recorded), and ``reproductions`` expresses every discarded row
    over the selected ones.  Outputs depend on the recorded greedy choice.
    """

    prime: int
    truncation: int
    summand_rows: tuple[tuple[Fraction, ...], ...]
    selected: tuple[int, ...]
    pivot_columns: tuple[int, ...]
    pivot_minor_det: Fraction
    pivot_minor_valuation: Optional[int]
    reproductions: tuple[tuple[int, tuple[Fraction, ...]], ...]
    all_reproduced_plocally: bool

    @property
    def is_basis(self) -> bool:
        return (
            self.pivot_minor_valuation == 0
            and self.all_reproduced_plocally
            and len(self.selected) == self.truncation + 1
        )

    def to_json_dict(self) -> dict:
        return {
            "kind": "spanning-basis-report",
            "prime": self.prime,
            "truncation": self.truncation,
            "selected_rows": list(self.selected),
            "pivot_columns": list(self.pivot_columns),
            "pivot_minor_det": str(self.pivot_minor_det),
            "pivot_minor_valuation": self.pivot_minor_valuation,
            "is_basis": self.is_basis,
            "summand_rows": [[str(c) for c in row] for row in self.summand_rows],
            "reproductions": [
                {"row": idx, "coefficients": [str(c) for c in coeffs]}
                for idx, coeffs in self.reproductions
            ],
        }


def _sigma_coordinate_rows(p: int, truncation: int) -> list[list[Fraction]]:
    # Row m: sigma-coordinates of the zero-extension of e_0 sigma_m, taken at
    # the full truncation (p-1)N.  Entries are p-local integers because
    # e_0 sigma_m is a p-local operation.
    n_full = (p - 1) * truncation
    forms = [congruence_vector(c, n_full) for c in range(n_full + 1)]
    rows = []
    for m in range(n_full + 1):
        lam = sigma_eigenvalues(m, n_full)
        masked = [
            lam[j] if j % (p - 1) == 0 else Fraction(0) for j in range(n_full + 1)
        ]
        rows.append(
            [
                sum((c * x for c, x in zip(form, masked)), Fraction(0))
                for form in forms
            ]
        )
    return rows


def _solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def spanning_set_reduce(p: int, truncation: int) -> SpanningBasisReport:
    """Greedy extraction of a topological basis from the rows e_0 sigma_n,
    n = 0..(p-1)N, at summand truncation N.

    Columns are swept left to right in sigma-coordinates; each pivot row is
    the not-yet-selected row of minimal p-adic valuation in the column
    (lowest index on ties) and is used to clear the column from the others.
    Exactly N+1 pivots exist; the report certifies that the pivot minor is a
    p-local unit and that every discarded row is a p-locally integral
    combination of the selected ones.
    """
    _require_odd_prime(p)
    if truncation < 0:
        raise ValueError("truncation must be non-negative")
    n_full = (p - 1) * truncation
    acoord = _sigma_coordinate_rows(p, truncation)
    summand_rows = tuple(
        tuple(sigma_summand_sequence(m, p, truncation).entries)
        for m in range(n_full + 1)
    )

    work = [row[:] for row in acoord]
    selected: list[int] = []
    pivot_columns: list[int] = []
    for col in range(n_full + 1):
        candidates = [
            (padic_valuation(work[r][col], p), r)
            for r in range(len(work))
            if r not in selected and work[r][col] != 0
        ]
        if not candidates:
            continue
        _, best = min((v, r) for v, r in candidates)
        selected.append(best)
        pivot_columns.append(col)
        pivot_val = work[best][col]
        for r in range(len(work)):
            if r == best or r in selected:
                continue
            if work[r][col] != 0:
                f = work[r][col] / pivot_val
                work[r] = [x - f * y for x, y in zip(work[r], work[best])]
        if len(selected) == truncation + 1:
            break

    # pivot minor: selected rows at the pivot columns, original coordinates
    minor = [[acoord[r][c] for c in pivot_columns] for r in selected]
    det = _det(minor)
    det_val = padic_valuation(det, p)

    reproductions = []
    all_ok = True
    sel_at_pivots = [[acoord[r][c] for r in selected] for c in pivot_columns]
    for r in range(n_full + 1):
        if r in selected:
            continue
        rhs = [acoord[r][c] for c in pivot_columns]
        coeffs = _solve_square(sel_at_pivots, rhs)
        exact = all(
            sum((coeffs[s] * acoord[selected[s]][c] for s in range(len(selected))), Fraction(0))
            == acoord[r][c]
            for c in range(n_full + 1)
        )
        plocal = all(
            (v := padic_valuation(c, p)) is None or v >= 0 for c in coeffs
        )
        all_ok = all_ok and exact and plocal
        reproductions.append((r, tuple(coeffs)))

    return SpanningBasisReport(
        prime=p,
        truncation=truncation,
        summand_rows=summand_rows,
        selected=tuple(selected),
        pivot_columns=tuple(pivot_columns),
        pivot_minor_det=det,
        pivot_minor_valuation=det_val,
        reproductions=tuple(reproductions),
        all_reproduced_plocally=all_ok,
    )


def _det(matrix: list[list[Fraction]]) -> Fraction:
    n = len(matrix)
    m = [row[:] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det
