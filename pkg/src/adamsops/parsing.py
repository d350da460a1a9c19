"""Text forms for sequences, integer-valued polynomials, and Hopf monomials.

Sequences:   ``[0, 1, 2, 3]`` or ``[1, 1/2]`` (exact rationals), or symbolic
             combinations of ``psi(k)`` and ``sigma(n)`` with integer or
             rational scalars, ``+``, ``-`` and ``*``.
Polynomials: ``w^2 - w``, ``(1/6)w^3``, ``binom(w,2)``; juxtaposition of a
             scalar with ``w``/``binom``/parenthesized factors multiplies.
Monomials:   ``b(2)*etaR(x1)``, ``e^4*etaR(x)``; the ``etaR`` argument is a
             dictionary name (x1, a21) or a formal symbol whose half-degree
             must be supplied by the caller.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional

from . import fgl, hopfeval
from .ivp import IvpPoly, from_power_basis
from .opring import LambdaSeq, SigmaCoeffs, multiply, sigma_to_lambda
from .stirling import stirling1_unsigned

__all__ = ["ParseError", "parse_rational", "parse_sequence", "parse_ivp_poly", "parse_monomial"]


class ParseError(ValueError):
    """Malformed textual input."""


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<symbol>[()\[\],+\-*^]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        if m.end() == pos:
            break
        pos = m.end()
        if m.lastgroup == "number":
            tokens.append(("number", m.group("number").replace(" ", "")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("symbol", m.group("symbol")))
    return tokens


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip().replace(" ", ""))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


class _Tokens:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, kind: str, value: Optional[str] = None) -> str:
        tok = self.next()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, got {tok[1]!r}")
        return tok[1]

    def done(self) -> bool:
        return self.pos >= len(self.tokens)


def _parse_int(ts: _Tokens) -> int:
    sign = 1
    tok = ts.peek()
    while tok is not None and tok == ("symbol", "-"):
        ts.next()
        sign = -sign
        tok = ts.peek()
    value = ts.expect("number")
    if "/" in value:
        raise ParseError(f"expected an integer, got {value!r}")
    return sign * int(value)


# -- sequences ---------------------------------------------------------------

# expression values: ("scalar", Fraction) or ("seq", LambdaSeq)
_Value = tuple


def _seq_add(a: _Value, b: _Value) -> _Value:
    if a[0] == "scalar" and b[0] == "scalar":
        return ("scalar", a[1] + b[1])
    if a[0] == "seq" and b[0] == "seq":
        return ("seq", LambdaSeq(tuple(x + y for x, y in zip(a[1].entries, b[1].entries))))
    raise ParseError("cannot add a scalar to an operation; multiply instead")


def _seq_mul(a: _Value, b: _Value) -> _Value:
    if a[0] == "scalar" and b[0] == "scalar":
        return ("scalar", a[1] * b[1])
    if a[0] == "scalar":
        a, b = b, a
    if b[0] == "scalar":
        return ("seq", LambdaSeq(tuple(x * b[1] for x in a[1].entries)))
    return ("seq", multiply(a[1], b[1]))


def _seq_neg(a: _Value) -> _Value:
    if a[0] == "scalar":
        return ("scalar", -a[1])
    return ("seq", LambdaSeq(tuple(-x for x in a[1].entries)))


def _parse_seq_expr(ts: _Tokens, trunc: int) -> _Value:
    value = _parse_seq_term(ts, trunc)
    while ts.peek() in (("symbol", "+"), ("symbol", "-")):
        op = ts.next()[1]
        rhs = _parse_seq_term(ts, trunc)
        if op == "-":
            rhs = _seq_neg(rhs)
        value = _seq_add(value, rhs)
    return value


def _parse_seq_term(ts: _Tokens, trunc: int) -> _Value:
    value = _parse_seq_factor(ts, trunc)
    while ts.peek() == ("symbol", "*"):
        ts.next()
        value = _seq_mul(value, _parse_seq_factor(ts, trunc))
    return value


def _parse_seq_factor(ts: _Tokens, trunc: int) -> _Value:
    tok = ts.peek()
    if tok is None:
        raise ParseError("unexpected end of expression")
    if tok == ("symbol", "-"):
        ts.next()
        return _seq_neg(_parse_seq_factor(ts, trunc))
    if tok == ("symbol", "("):
        ts.next()
        value = _parse_seq_expr(ts, trunc)
        ts.expect("symbol", ")")
        return value
    if tok[0] == "number":
        ts.next()
        return ("scalar", parse_rational(tok[1]))
    if tok == ("name", "psi"):
        ts.next()
        ts.expect("symbol", "(")
        k = _parse_int(ts)
        ts.expect("symbol", ")")
        return ("seq", LambdaSeq.adams(k, trunc))
    if tok == ("name", "sigma"):
        ts.next()
        ts.expect("symbol", "(")
        n = _parse_int(ts)
        ts.expect("symbol", ")")
        if n < 0:
            raise ParseError("sigma index must be non-negative")
        if n > trunc:
            return ("seq", LambdaSeq((Fraction(0),) * (trunc + 1)))
        return ("seq", sigma_to_lambda(SigmaCoeffs.unit(n, trunc)))
    raise ParseError(f"unexpected token {tok[1]!r} in sequence expression")


def _parse_bracket_list(text: str) -> tuple[Fraction, ...]:
    inner = text.strip()[1:-1].strip()
    if not inner:
        raise ParseError("empty sequence literal")
    return tuple(parse_rational(part) for part in inner.split(","))


def parse_sequence(text: str, truncation: Optional[int] = None) -> LambdaSeq:
    """Parse an eigenvalue sequence from a list literal or a symbolic
    psi/sigma expression (the latter requires a truncation)."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise ParseError("unterminated sequence literal")
        seq = LambdaSeq(_parse_bracket_list(stripped))
        if truncation is not None and truncation != seq.truncation:
            seq = seq.resized(truncation)
        return seq
    if truncation is None:
        raise ParseError("a truncation is required for symbolic sequence input")
    ts = _Tokens(_tokenize(stripped))
    value = _parse_seq_expr(ts, truncation)
    if not ts.done():
        raise ParseError(f"trailing input from {ts.peek()[1]!r}")
    if value[0] != "seq":
        raise ParseError("expression must mention psi(...) or sigma(...)")
    return value[1]


# -- integer-valued polynomials ----------------------------------------------

_POLY_STARTERS = {("name", "w"), ("name", "binom"), ("symbol", "(")}


def _power_list_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _power_list_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else Fraction(0)) + (b[i] if i < len(b) else Fraction(0))
        for i in range(n)
    ]


def _binom_power_list(k: int) -> list[Fraction]:
    fact = math.factorial(k)
    return [
        Fraction((-1) ** (k - j) * stirling1_unsigned(k, j), fact) for j in range(k + 1)
    ]


def _parse_poly_expr(ts: _Tokens) -> list[Fraction]:
    value = _parse_poly_term(ts)
    while ts.peek() in (("symbol", "+"), ("symbol", "-")):
        op = ts.next()[1]
        rhs = _parse_poly_term(ts)
        if op == "-":
            rhs = [-c for c in rhs]
        value = _power_list_add(value, rhs)
    return value


def _parse_poly_term(ts: _Tokens) -> list[Fraction]:
    value = _parse_poly_factor(ts)
    while True:
        tok = ts.peek()
        if tok == ("symbol", "*"):
            ts.next()
            value = _power_list_mul(value, _parse_poly_factor(ts))
        elif tok in _POLY_STARTERS:
            value = _power_list_mul(value, _parse_poly_factor(ts))
        else:
            return value


def _parse_poly_factor(ts: _Tokens) -> list[Fraction]:
    tok = ts.peek()
    if tok is None:
        raise ParseError("unexpected end of polynomial")
    if tok == ("symbol", "-"):
        ts.next()
        return [-c for c in _parse_poly_factor(ts)]
    if tok == ("symbol", "("):
        ts.next()
        value = _parse_poly_expr(ts)
        ts.expect("symbol", ")")
        return _maybe_power(ts, value)
    if tok[0] == "number":
        ts.next()
        return [parse_rational(tok[1])]
    if tok == ("name", "w"):
        ts.next()
        return _maybe_power(ts, [Fraction(0), Fraction(1)])
    if tok == ("name", "binom"):
        ts.next()
        ts.expect("symbol", "(")
        ts.expect("name", "w")
        ts.expect("symbol", ",")
        k = _parse_int(ts)
        if k < 0:
            raise ParseError("binom(w, k) needs k >= 0")
        ts.expect("symbol", ")")
        return _maybe_power(ts, _binom_power_list(k))
    raise ParseError(f"unexpected token {tok[1]!r} in polynomial")


def _maybe_power(ts: _Tokens, value: list[Fraction]) -> list[Fraction]:
    if ts.peek() == ("symbol", "^"):
        ts.next()
        n = _parse_int(ts)
        if n < 0:
            raise ParseError("negative exponents are not polynomials")
        out = [Fraction(1)]
        for _ in range(n):
            out = _power_list_mul(out, value)
        return out
    return value


def parse_ivp_poly(text: str) -> IvpPoly:
    """Parse a rational polynomial in w; result in binomial coordinates."""
    ts = _Tokens(_tokenize(text))
    if ts.done():
        raise ParseError("empty polynomial")
    coeffs = _parse_poly_expr(ts)
    if not ts.done():
        raise ParseError(f"trailing input from {ts.peek()[1]!r}")
    return from_power_basis(coeffs)


# -- Hopf monomials ------------------------------------------------------------


def parse_monomial(
    text: str,
    t_half_degree: Optional[int] = None,
    *,
    degree_bound: int = fgl.DEFAULT_DEGREE_BOUND,
) -> hopfeval.HopfMonomial:
    """Parse ``b(i)*...*e^{2h}*etaR(name)`` into a HopfMonomial."""
    ts = _Tokens(_tokenize(text))
    if ts.done():
        raise ParseError("empty monomial")
    b_indices: list[int] = []
    e2 = 0
    t_name: Optional[str] = None
    while True:
        tok = ts.next()
        if tok == ("name", "b"):
            ts.expect("symbol", "(")
            i = _parse_int(ts)
            if i < 1:
                raise ParseError("b-index must be at least 1")
            ts.expect("symbol", ")")
            b_indices.append(i)
        elif tok == ("name", "e"):
            ts.expect("symbol", "^")
            n = _parse_int(ts)
            if n <= 0 or n % 2 != 0:
                raise ParseError("suspension factor must be a positive even power e^2h")
            e2 += n
        elif tok == ("name", "etaR"):
            if t_name is not None:
                raise ParseError("at most one etaR factor is allowed")
            ts.expect("symbol", "(")
            t_name = ts.expect("name")
            ts.expect("symbol", ")")
        elif tok == ("number", "1") and ts.done() and not b_indices and not e2:
            return hopfeval.monomial(degree_bound=degree_bound)
        else:
            raise ParseError(f"unexpected token {tok[1]!r} in monomial")
        if ts.done():
            break
        ts.expect("symbol", "*")
    try:
        return hopfeval.monomial(
            b=tuple(b_indices),
            e2=e2,
            t=t_name,
            t_half_degree=t_half_degree,
            degree_bound=degree_bound,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
