"""``matpoly`` command-line interface.

Exit codes: 0 success, 1 failed verification or I/O error, 2 shape error
(and argument errors), 3 singular input, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dpalgebra, isomap
from .bipoly import transpose
from .errors import ParseError, ShapeError, SingularMatrixError
from .fileio import dump_poly_json, format_matrix_csv, read_matrix, read_poly, write_poly
from .interp import ConstructionMethod, construct, construct_all, to_matrix
from .scalar import format_rat, parse_rat, rational_roots
from .surface import DEFAULT_STEPS, sample_surface

EXIT_FAILED = 1
EXIT_SHAPE = 2
EXIT_SINGULAR = 3
EXIT_PARSE = 4


def _emit_poly(p, args):
    print(p)
    if getattr(args, "out", None):
        write_poly(args.out, p)


def _emit_text(text: str, args):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args):
    a = read_matrix(args.matrix)
    if args.method == "all":
        results = construct_all(a)
        polys = list(results.values())
        agree = all(q == polys[0] and q.shape == polys[0].shape for q in polys[1:])
        names = ", ".join(m.value for m in results)
        if not agree:
            for method, q in results.items():
                print(f"{method.value}: {q}", file=sys.stderr)
            print("construction methods disagree", file=sys.stderr)
            return EXIT_FAILED
        print(f"all methods agree ({names})", file=sys.stderr)
        p = polys[0]
    else:
        p = construct(a, ConstructionMethod(args.method))
    print(p)
    if args.out:
        write_poly(args.out, p)
    else:
        print(dump_poly_json(p))
    return 0


def _parse_range(text: str):
    try:
        xs, ys = text.split(",")
        x_range = tuple(parse_rat(v) for v in xs.split(":"))
        y_range = tuple(parse_rat(v) for v in ys.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like X0:X1,Y0:Y1, got {text!r}") from None
    if len(x_range) != 2 or len(y_range) != 2:
        raise argparse.ArgumentTypeError(f"range must look like X0:X1,Y0:Y1, got {text!r}")
    return x_range, y_range


def _parse_steps(text: str):
    try:
        parts = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"steps must be N or NX,NY, got {text!r}") from None
    if len(parts) == 1:
        parts *= 2
    if len(parts) != 2 or min(parts) < 2:
        raise argparse.ArgumentTypeError("steps must be at least 2 per axis")
    return tuple(parts)


def cmd_sample(args):
    p = read_poly(args.poly)
    x_range, y_range = args.range if args.range else (None, None)
    grid = sample_surface(p, x_range, y_range, args.steps)
    _emit_text(grid.to_csv(), args)
    return 0


def cmd_product(args):
    _emit_poly(dpalgebra.dp_product(read_poly(args.left), read_poly(args.right)), args)
    return 0


def cmd_inverse(args):
    _emit_poly(dpalgebra.dp_inverse(read_poly(args.poly)), args)
    return 0


def cmd_power(args):
    _emit_poly(dpalgebra.dp_power(read_poly(args.poly), args.exponent), args)
    return 0


def cmd_transpose(args):
    _emit_poly(transpose(read_poly(args.poly)), args)
    return 0


def cmd_identity(args):
    if args.n < 1:
        raise ShapeError("identity size must be >= 1")
    _emit_poly(dpalgebra.identity_poly(args.n), args)
    return 0


def cmd_classify(args):
    report = dpalgebra.classify(read_poly(args.poly), max_period=args.max_period)
    print(json.dumps(report.as_dict(), indent=2))
    return 0


def cmd_char_poly(args):
    print(dpalgebra.char_poly_of(read_poly(args.poly)))
    return 0


def cmd_cayley_hamilton(args):
    p = read_poly(args.poly)
    print(f"characteristic polynomial: {dpalgebra.char_poly_of(p)}")
    residual = dpalgebra.cayley_hamilton_residual(p)
    print(f"residual: {residual}")
    return 0 if residual.is_zero() else EXIT_FAILED


def cmd_eigen(args):
    p = read_poly(args.poly)
    cp = dpalgebra.char_poly_of(p)
    print(f"characteristic polynomial: {cp}")
    pairs = dpalgebra.eigen_pairs(p)
    for pair in pairs:
        print(f"lambda = {format_rat(pair.value)}: {pair.eigen_poly}")
    found = sum(mult for _, mult in rational_roots(cp))
    if found < cp.degree:
        print(f"({cp.degree - found} eigenvalue(s) counted with multiplicity are not rational)")
    return 0


def cmd_to_matrix(args):
    _emit_text(format_matrix_csv(to_matrix(read_poly(args.poly))), args)
    return 0


def cmd_coord_matrix(args):
    if args.sampling:
        mat = isomap.sampling_matrix(args.m, args.n, args.order)
    else:
        mat = isomap.coordinate_matrix(args.m, args.n, args.order)
    _emit_text(format_matrix_csv(mat), args)
    return 0


def cmd_verify(args):
    suites = {
        "linearity": lambda: isomap.check_linearity(args.trials or 500, 6, 6, seed=args.seed),
        "product": lambda: isomap.check_product_structure(args.trials or 200, 5, seed=args.seed),
        "ring": lambda: isomap.check_ring_axioms(args.trials or 200, 4, seed=args.seed),
    }
    chosen = suites if args.suite == "all" else {args.suite: suites[args.suite]}
    reports = [run() for run in chosen.values()]
    print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0 if all(r.passed for r in reports) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matpoly",
        description="Exact interpolating polynomials of matrices and their DP-product algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_cmd(name, func, help_, out=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("poly", help="polynomial JSON file")
        if out:
            p.add_argument("--out", help="write the result here")
        p.set_defaults(func=func)
        return p

    p = sub.add_parser("construct", help="interpolate a matrix CSV file")
    p.add_argument("matrix")
    p.add_argument(
        "--method",
        default="lagrange",
        choices=[m.value for m in ConstructionMethod] + ["all"],
    )
    p.add_argument("--out", help="write polynomial JSON here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sample", help="sample a polynomial on a grid as CSV")
    p.add_argument("poly")
    p.add_argument("--steps", type=_parse_steps, default=(DEFAULT_STEPS, DEFAULT_STEPS))
    p.add_argument("--range", type=_parse_range, help="X0:X1,Y0:Y1 (default: node box)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("product", help="DP product of two polynomials")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    poly_cmd("inverse", cmd_inverse, "inverse under the DP product")
    p = poly_cmd("power", cmd_power, "DP power")
    p.add_argument("exponent", type=int)
    poly_cmd("transpose", cmd_transpose, "swap x and y")
    p = poly_cmd("classify", cmd_classify, "structural predicates as JSON", out=False)
    p.add_argument("--max-period", type=int, default=16)
    poly_cmd("eigen", cmd_eigen, "rational eigenvalues and eigen-polynomials", out=False)
    poly_cmd("char-poly", cmd_char_poly, "characteristic polynomial", out=False)
    poly_cmd("cayley-hamilton", cmd_cayley_hamilton, "Cayley-Hamilton residual", out=False)
    poly_cmd("to-matrix", cmd_to_matrix, "sample at the integer nodes (CSV)")

    p = sub.add_parser("identity", help="identity polynomial of size N")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("coord-matrix", help="coordinate matrix of the interpolation map (CSV)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--order", choices=isomap.ORDERS, default="x-major")
    p.add_argument("--sampling", action="store_true", help="emit the inverse (sampling) matrix")
    p.add_argument("--out")
    p.set_defaults(func=cmd_coord_matrix)

    p = sub.add_parser("verify", help="randomized exact verification suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, help="override the per-suite trial count")
    p.add_argument("--suite", choices=["linearity", "product", "ring", "all"], default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularMatrixError as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ShapeError as exc:
        print(f"shape error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
