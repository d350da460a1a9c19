"""Command-line front end.

Subcommands: check, convert, pair, table, fgl-dump, verify-paper.  Output is
deterministic: JSON documents are emitted with sorted keys and exact
rationals as canonical p/q strings; CSV is available for the flat congruence
table.  Exit status: 0 all requested verdicts pass, 1 verdict failure,
2 parse/usage error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional

from . import fgl, verify
from .ivp import pairing
from .opring import (
    check_congruences,
    congruence_vector,
    lambda_to_sigma,
    sigma_to_lambda,
    SigmaCoeffs,
)
from .parsing import ParseError, parse_ivp_poly, parse_sequence
from .plocal import PLocalSeq, check_congruences_plocal, summand_membership

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3


def _read_input(source: str) -> str:
    path = Path(source)
    try:
        if path.is_file():
            data = json.loads(path.read_text())
            if not isinstance(data, list):
                raise ParseError(f"{source}: sequence file must hold a JSON array")
            return "[" + ", ".join(str(x) for x in data) + "]"
    except OSError:
        pass
    return source


def _emit(doc: dict, fmt: str, out: Optional[str], plain: str) -> None:
    if fmt == "json":
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    elif fmt == "plain":
        text = plain
    else:
        raise ParseError(f"format {fmt!r} is not available for this subcommand")
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cert_plain(doc: dict) -> str:
    lines = []
    head = "p-local" if doc.get("prime") else "integral"
    lines.append(f"{head} congruence check, truncation {doc['truncation']}")
    for rec in doc["records"]:
        status = "pass" if rec["passes"] else "FAIL"
        lines.append(f"  n={rec['n']:<3} value={rec['value']:<12} {status}")
    lines.append("verdict: " + ("pass" if doc["passes"] else "FAIL"))
    return "\n".join(lines) + "\n"


def _parse_raw_entries(text: str, trunc: Optional[int], what: str) -> tuple:
    """List-literal entries for inputs that are not eigenvalue sequences
    (sigma coordinates, summand sequences); --trunc must agree when given."""
    stripped = text.strip()
    if not stripped.startswith("["):
        raise ParseError(f"{what} input must be a list literal")
    seq = parse_sequence(stripped)
    if trunc is not None and trunc != seq.truncation:
        raise ParseError(
            f"--trunc {trunc} does not match the {what} literal of length "
            f"{seq.truncation + 1}"
        )
    return seq.entries


def _cmd_check(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    if args.summand:
        if args.prime is None:
            raise ParseError("--summand requires --prime")
        entries = _parse_raw_entries(text, args.trunc, "summand")
        mu = PLocalSeq(prime=args.prime, entries=entries, flavor="summand")
        cert = summand_membership(mu)
    elif args.prime is not None:
        seq = parse_sequence(text, args.trunc)
        full = PLocalSeq(prime=args.prime, entries=seq.entries, flavor="full")
        cert = check_congruences_plocal(full)
    else:
        cert = check_congruences(parse_sequence(text, args.trunc))
    doc = {"command": "check", "input": args.input, **cert.to_json_dict()}
    _emit(doc, args.format, args.out, _cert_plain(doc))
    return EXIT_OK if cert.passes else EXIT_VERDICT


def _cmd_convert(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    if args.basis == "sigma":
        entries = _parse_raw_entries(text, None, "sigma-coordinate")
        a = SigmaCoeffs(entries)
        if args.trunc is not None:
            a = a.resized(args.trunc)
        lam = sigma_to_lambda(a)
    else:
        lam = parse_sequence(text, args.trunc)
        a = lambda_to_sigma(lam)
    doc = {
        "command": "convert",
        "input": args.input,
        "input_basis": args.basis,
        "truncation": lam.truncation,
        "lambda": [str(x) for x in lam.entries],
        "sigma": [str(x) for x in a.entries],
        "integral": a.is_integral,
    }
    plain = (
        "lambda: " + " ".join(str(x) for x in lam.entries) + "\n"
        "sigma:  " + " ".join(str(x) for x in a.entries) + "\n"
    )
    _emit(doc, args.format, args.out, plain)
    return EXIT_OK


def _cmd_pair(args: argparse.Namespace) -> int:
    seq = parse_sequence(_read_input(args.sequence), args.trunc)
    poly = parse_ivp_poly(args.poly)
    a = lambda_to_sigma(seq)
    value = pairing(a, poly)
    doc = {
        "command": "pair",
        "sequence": args.sequence,
        "poly": args.poly,
        "poly_binomial_coefficients": [str(c) for c in poly.binom_coeffs],
        "value": str(value),
    }
    _emit(doc, args.format, args.out, f"{value}\n")
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    n = args.trunc
    rows = [congruence_vector(i, n) for i in range(n + 1)]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n"] + [f"lambda_{k}" for k in range(n + 1)])
        for i, row in enumerate(rows):
            writer.writerow([i] + [str(c) for c in row])
        text = buf.getvalue()
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return EXIT_OK
    doc = {
        "command": "table",
        "truncation": n,
        "rows": [
            {"n": i, "coefficients": [str(c) for c in row]}
            for i, row in enumerate(rows)
        ],
    }
    plain = (
        "\n".join(
            f"C_{i}: " + " ".join(str(c) for c in row) for i, row in enumerate(rows)
        )
        + "\n"
    )
    _emit(doc, args.format, args.out, plain)
    return EXIT_OK


def _cmd_fgl_dump(args: argparse.Namespace) -> int:
    order = args.trunc
    bound = args.degree_bound if args.degree_bound is not None else order - 1
    log = fgl.log_series(order, bound)
    exp = fgl.exp_series(order, bound)
    orient = fgl.adams_orientation_series(order, bound)
    coeffs = []
    for i in range(0, order + 1):
        for j in range(0, order + 1 - i):
            if i + j < 1:
                continue
            coeffs.append(
                {
                    "i": i,
                    "j": j,
                    "poly": fgl.fgl_coeff(i, j, order, bound).to_json_obj(),
                }
            )
    doc = {
        "command": "fgl-dump",
        "order": order,
        "degree_bound": bound,
        "log": [c.to_json_obj() for c in log.coeffs],
        "exp": [c.to_json_obj() for c in exp.coeffs],
        "orientation": [c.to_json_obj() for c in orient.coeffs],
        "fgl_coefficients": coeffs,
    }
    plain_lines = [f"log x^{i}: {c}" for i, c in enumerate(log.coeffs) if i]
    plain_lines += [f"exp x^{i}: {c}" for i, c in enumerate(exp.coeffs) if i]
    plain_lines += [f"B_{i}(k): {c}" for i, c in enumerate(orient.coeffs) if i]
    _emit(doc, args.format, args.out, "\n".join(plain_lines) + "\n")
    return EXIT_OK


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    results = verify.run_all()
    doc = {
        "command": "verify-paper",
        "passed": all(r.passed for r in results),
        "results": [r.to_json_dict() for r in results],
    }
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        suffix = f"  ({r.detail})" if r.detail else ""
        lines.append(f"{status}  {r.name}{suffix}")
    lines.append(
        f"{sum(r.passed for r in results)}/{len(results)} checks passed"
    )
    if args.format == "json":
        _emit(doc, "json", args.out, "")
    else:
        _emit(doc, "plain", args.out, "\n".join(lines) + "\n")
    return EXIT_OK if doc["passed"] else EXIT_VERDICT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adamsops",
        description="Exact computations in the ring of additive unstable "
        "Adams operations and its cobordism image.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, csv_ok: bool = False) -> None:
        formats = ["json", "plain"] + (["csv"] if csv_ok else [])
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("check", help="congruence membership certificate")
    p.add_argument("input", help="sequence literal, psi/sigma expression, or JSON file")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--prime", type=int, default=None, help="odd prime for the p-local check")
    p.add_argument("--summand", action="store_true", help="input indexes the summand degrees")
    common(p)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("convert", help="exchange eigenvalue and sigma coordinates")
    p.add_argument("input")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument(
        "--basis",
        choices=["lambda", "sigma"],
        default="lambda",
        help="how to read the input entries",
    )
    common(p)
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("pair", help="duality pairing of an operation with a polynomial")
    p.add_argument("sequence")
    p.add_argument("poly")
    p.add_argument("--trunc", type=int, default=10)
    common(p)
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("table", help="emit the congruence forms C_0..C_N")
    p.add_argument("--trunc", type=int, required=True)
    common(p, csv_ok=True)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("fgl-dump", help="series goldens for the group-law engine")
    p.add_argument("--trunc", type=int, default=fgl.DEFAULT_ORDER)
    p.add_argument("--degree-bound", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_fgl_dump)

    p = sub.add_parser("verify-paper", help="run the worked-value checklist")
    common(p)
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except fgl.CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
