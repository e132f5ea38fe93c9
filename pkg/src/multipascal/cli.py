"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 infinite standard-monomial set, 4 monomial condition violated.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import ExpressionSyntaxError, InfiniteSet, MonomialConditionViolated
from .formats import (format_matrix, ideal_from_json, pointset_from_json,
                      sequence_from_json, sequence_to_json)
from .mindex import MultiIndex
from .pascal import build_A, build_D, build_L, build_L_power, build_S, build_U, build_U_power
from .pascal import binomial_transform
from .pointset import degree_window, standard_monomials
from .riordan import RiordanBasis, riordan_inverse, riordan_matrix
from .stirling import build_stirling_matrix, build_vandermonde_matrix, stirling_poly
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFINITE, EXIT_CONDITION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _load_json(value: str):
    """Inline JSON, or the path of a JSON file."""
    text = value.strip()
    if not text.startswith(("[", "{")):
        if not os.path.exists(value):
            raise UsageError(f"{value!r} is neither inline JSON nor an existing file")
        with open(value) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON: {exc}") from None


def _point_set(args):
    if args.set is not None:
        return pointset_from_json(_load_json(args.set), n=getattr(args, "n", None))
    if getattr(args, "n", None) is not None and getattr(args, "degree", None) is not None:
        return degree_window(args.n, args.degree)
    raise UsageError("give --set, or --n together with --degree")


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_std(args) -> int:
    J = ideal_from_json(_load_json(args.gens), n=args.n)
    R = standard_monomials(J, args.bound)
    if args.format == "json":
        out = json.dumps(R.to_lists()) + "\n"
    elif args.format == "csv":
        out = "".join(",".join(map(str, k)) + "\n" for k in R)
        out = ",".join(f"x{j + 1}" for j in range(R.n)) + "\n" + out
    else:
        out = "".join(str(k) + "\n" for k in R)
    _emit(args, out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    R = _point_set(args)
    if len(R) == 0:
        raise UsageError("empty point set")
    kind, p = args.kind, args.power
    if p is not None and kind not in ("L", "U", "D"):
        raise UsageError("--power applies to L, U and D only")
    if kind == "L":
        m = build_L(R) if p is None else build_L_power(R, p)
    elif kind == "U":
        m = build_U(R) if p is None else build_U_power(R, p)
    elif kind == "S":
        m = build_S(R)
    elif kind == "A":
        m = build_A(R)
    else:
        m = build_D(R, -1 if p is None else p)
    _emit(args, format_matrix(m, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    sets = [pointset_from_json(_load_json(s), n=args.n) for s in args.set or []]
    report = run_suite(args.suite, sets, n=args.n, degree=args.degree, p=args.p, q=args.q,
                       ell=args.ell, seed=args.seed, trials=args.trials)
    _emit(args, json.dumps(report.to_json()) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_stirling(args) -> int:
    if args.k is not None:
        try:
            k = MultiIndex.parse(args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(args, str(stirling_poly(k, args.ell)) + "\n")
        return EXIT_OK
    R = _point_set(args)
    if args.matrix == "stirling":
        m = build_stirling_matrix(R, args.ell)
    elif args.matrix == "vandermonde":
        m = build_vandermonde_matrix(R, args.ell)
    else:
        m = build_L(R) @ build_stirling_matrix(R, args.ell)
    _emit(args, format_matrix(m, args.format))
    return EXIT_OK


def cmd_transform(args) -> int:
    R = _point_set(args)
    try:
        seq = sequence_from_json(_load_json(args.input))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"bad sequence file: {exc}") from None
    out = binomial_transform(R, seq, inverse=args.inverse)
    _emit(args, json.dumps(sequence_to_json(out, R.n, order=R.points)) + "\n")
    return EXIT_OK


def cmd_riordan(args) -> int:
    if not args.x:
        raise UsageError("give one --x per variable")
    basis = RiordanBasis.parse(args.g, args.x, args.degree)
    if args.inverse:
        basis = riordan_inverse(basis)
    m = riordan_matrix(basis, degree_window(basis.n, args.degree))
    _emit(args, format_matrix(m, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multipascal",
        description="Multivariate Pascal matrices, Stirling polynomials and Riordan arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv", "text")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("std", help="standard monomials of a monomial ideal")
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--gens", required=True,
                   help="generators as inline JSON or a file (array, or {\"n\", \"generators\"})")
    p.add_argument("--bound", type=int, help="keep only |k| <= bound")
    common(p)
    p.set_defaults(func=cmd_std)

    p = sub.add_parser("matrix", help="build L, U, S, A or D for a point set")
    p.add_argument("--kind", choices=["L", "U", "S", "A", "D"], required=True)
    p.add_argument("--set", help="point set as inline JSON or a file")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int, help="use the window |k| <= degree instead of --set")
    p.add_argument("--power", type=int)
    common(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--set", action="append", help="point set (repeatable); default random sets")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stirling", help="Stirling polynomials and matrices")
    p.add_argument("--k", help="multi-index such as 0,1; prints S_k^(ell)")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--set")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--matrix", choices=["stirling", "vandermonde", "product"], default="stirling")
    common(p)
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("transform", help="multidimensional binomial transform of a sequence")
    p.add_argument("--set")
    p.add_argument("--n", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--input", required=True, help="sequence JSON, inline or a file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("riordan", help="window of the matrix of a Riordan basis")
    p.add_argument("--g", required=True, help="expression in z1..zn for G")
    p.add_argument("--x", action="append", help="expression for X_i (one per variable)")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--inverse", action="store_true", help="use the group inverse of the basis")
    common(p)
    p.set_defaults(func=cmd_riordan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfiniteSet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except MonomialConditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONDITION
    except (UsageError, ExpressionSyntaxError, ValueError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
