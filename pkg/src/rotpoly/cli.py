"""Command-line front end: ``rotpoly <command> ...`` or ``python -m rotpoly``.

Exit status is 0 on success, 1 on a parse or precondition failure and 2 when
a verification suite fails.  Arguments starting with ``-`` (negative scalars,
polynomials with a leading minus) go after ``--``.
"""
from __future__ import annotations

import argparse
import json
import sys

from .arith import GaussianRational, parse_scalar
from .harmonic import harmonic_basis, harmonic_decompose, project_Lc
from .mean import OrthoMatrix, rotate, spherical_mean
from .poly import Poly, format_poly, parse_poly, poly_to_dict
from .verify import DEFAULT_SEED, SUITES, run_all, run_suite
from .zonal import EigenSignature, eigen_monomial, zonal_harmonic

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; reported as a one-line diagnostic."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def scalar_to_dict(z: GaussianRational) -> dict:
    return {"re_num": z.re.numerator, "re_den": z.re.denominator,
            "im_num": z.im.numerator, "im_den": z.im.denominator}


def _scalar(text: str) -> GaussianRational:
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise InputError(f"bad scalar {text!r}: {exc}") from None


def _scalar_list(text: str) -> list:
    return [_scalar(x) for x in text.split(",")]


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _poly(text: str, N: int) -> Poly:
    if N < 1:
        raise InputError("-N must be at least 1")
    try:
        return parse_poly(text, N)
    except ValueError as exc:
        raise InputError(f"cannot parse polynomial: {exc}") from None


def read_matrix(path: str, N: int) -> OrthoMatrix:
    """``N`` non-empty lines of ``N`` scalars separated by blanks or commas."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.replace(",", " ").split() for ln in fh if ln.strip()]
    except OSError as exc:
        raise InputError(f"cannot read matrix file: {exc}") from None
    if len(lines) != N or any(len(row) != N for row in lines):
        raise InputError(f"matrix file must hold {N} rows of {N} scalars")
    rows = [[_scalar(x) for x in row] for row in lines]
    try:
        return OrthoMatrix(rows)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    dim = _Parser(add_help=False)
    dim.add_argument("-N", type=int, required=True, help="number of variables")

    parser = _Parser(prog="rotpoly", description="Exact harmonic analysis of polynomials over Q(i).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", parents=[common, dim], help="harmonic parts in base X.X")
    p.add_argument("poly")
    p = sub.add_parser("basis", parents=[common], help="harmonic basis of degree d")
    p.add_argument("N", type=int)
    p.add_argument("d", type=int)
    p = sub.add_parser("mean", parents=[common, dim], help="normalized spherical mean")
    p.add_argument("poly")
    p = sub.add_parser("project", parents=[common, dim], help="harmonic congruent modulo X.X - c")
    p.add_argument("c")
    p.add_argument("poly")
    p = sub.add_parser("zonal", parents=[common], help="zonal harmonic (q, h) for direction t")
    p.add_argument("t", help="comma-separated scalars; N is their count")
    p.add_argument("c")
    p.add_argument("n", type=int)
    p = sub.add_parser("eigen", parents=[common], help="eigen monomial for exponents and signs")
    p.add_argument("a", help="comma-separated exponents")
    p.add_argument("eps", help="comma-separated signs, +1 or -1")
    p.add_argument("N", type=int)
    p = sub.add_parser("rotate", parents=[common, dim], help="p(XA) for an orthogonal A")
    p.add_argument("--matrix", required=True, help="file with N rows of N scalars")
    p.add_argument("poly")
    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("suite", nargs="?", default="all",
                   help="'all' or one of: " + ", ".join(SUITES))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _run(args) -> int:
    cmd = args.command
    if cmd == "decompose":
        parts = harmonic_decompose(_poly(args.poly, args.N)).parts
        _emit(args, [format_poly(h) for h in parts],
              {"dim": args.N, "parts": [poly_to_dict(h) for h in parts]})
    elif cmd == "basis":
        if args.N < 2 or args.d < 0:
            raise InputError("basis needs N >= 2 and d >= 0")
        basis = harmonic_basis(args.N, args.d)
        _emit(args, [format_poly(b) for b in basis],
              {"dim": args.N, "degree": args.d, "basis": [poly_to_dict(b) for b in basis]})
    elif cmd == "mean":
        value = spherical_mean(_poly(args.poly, args.N))
        _emit(args, [str(value)], {"value": scalar_to_dict(value), "text": str(value)})
    elif cmd == "project":
        out = project_Lc(_poly(args.poly, args.N), _scalar(args.c))
        _emit(args, [format_poly(out)], poly_to_dict(out))
    elif cmd == "zonal":
        t = _scalar_list(args.t)
        q, h = zonal_harmonic(t, _scalar(args.c), args.n)
        _emit(args, [f"q(x1) = {format_poly(q.to_poly())}", f"h = {format_poly(h)}"],
              {"dim": len(t), "q": [scalar_to_dict(c) for c in q.coeffs], "h": poly_to_dict(h)})
    elif cmd == "eigen":
        sig = EigenSignature(_int_list(args.a), _int_list(args.eps))
        y = eigen_monomial(sig, args.N)
        _emit(args, [format_poly(y)], poly_to_dict(y))
    elif cmd == "rotate":
        p = _poly(args.poly, args.N)
        out = rotate(p, read_matrix(args.matrix, args.N))
        _emit(args, [format_poly(out)], poly_to_dict(out))
    elif cmd == "verify":
        if args.suite == "all":
            results = run_all(args.seed)
        else:
            try:
                results = [run_suite(args.suite, args.seed)]
            except KeyError as exc:
                raise InputError(str(exc.args[0])) from None
        total_pass = sum(r.passed for r in results)
        total_fail = sum(r.failed for r in results)
        lines = [r.line() for r in results]
        for r in results:
            lines += [f"    failure: {f}" for f in r.failures]
        lines.append(f"seed {args.seed}: {total_pass} checks passed, {total_fail} failed")
        _emit(args, lines, {
            "seed": args.seed,
            "suites": [{"name": r.name, "title": r.title, "passed": r.passed,
                        "failed": r.failed, "failures": r.failures, "seconds": r.seconds}
                       for r in results],
        })
        return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
