"""Command-line front end.

Subcommands: power (full matrix power), eigen (eigenvalues and nodes),
verify (closed form against brute force, single case or randomized suite),
fib (Fibonacci polynomial identities), bench (timing table in CSV).

Complex parameters use the literal grammar <re><sign><im>i with no
whitespace, e.g. 1+0i, -2.5+0.5i, 0+1i.  All data goes to stdout and all
diagnostics to stderr.  Exit codes: 0 success, 1 verification or
singularity failure, 2 usage or parse error.
"""

import argparse
import csv
import json
import re
import sys
import time

import numpy as np

from .families import FAMILIES, FAMILY_A, FAMILY_ADAGGER, FAMILY_ANTI, FamilySpec, build_matrix
from .fibpoly import fib_det_check, fib_factor_eval, fib_poly_eval
from .linalg import SingularMatrixError, mat_norm_maxabs, mat_pow_binary
from .powers import VerificationError, power_matrix, power_verify
from .spectral import ClosureError, decompose

__all__ = ["main", "parse_complex", "format_complex"]

BENCH_HEADER = ["family", "n", "s", "method", "wall_nanos", "residual_vs_oracle"]

_FLOAT = r"[0-9]+(?:\.[0-9]*)?|\.[0-9]+"
_COMPLEX_RE = re.compile(
    rf"(?P<re>[+-]?(?:{_FLOAT})(?:[eE][+-]?[0-9]+)?)"
    rf"(?P<im>[+-](?:{_FLOAT})(?:[eE][+-]?[0-9]+)?)i"
)


def parse_complex(text: str) -> complex:
    """Parse the <re><sign><im>i literal grammar, whitespace forbidden."""
    match = _COMPLEX_RE.fullmatch(text)
    if match is None:
        raise argparse.ArgumentTypeError(
            f"invalid complex literal {text!r}; expected <re><sign><im>i, e.g. 1+0i"
        )
    return complex(float(match.group("re")), float(match.group("im")))


def format_complex(z: complex) -> str:
    """Render a complex value as re+imi, round-trippable by parse_complex."""
    return f"{z.real!r}{z.imag:+}i"


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _matrix_entries(matrix) -> list[list[dict]]:
    return [[_complex_json(complex(v)) for v in row] for row in np.asarray(matrix)]


def _print_matrix_pretty(matrix, out):
    cells = [[format_complex(complex(v)) for v in row] for row in np.asarray(matrix)]
    width = max(len(c) for row in cells for c in row)
    for row in cells:
        print("[ " + "  ".join(c.rjust(width) for c in row) + " ]", file=out)


def _emit_power(result, fmt, out):
    if fmt == "json":
        payload = {
            "family": result.spec.family,
            "n": result.spec.n,
            "s": result.exponent,
            "path": result.path,
            "entries": _matrix_entries(result.matrix),
        }
        print(json.dumps(payload), file=out)
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([f"c{j + 1}" for j in range(result.spec.n)])
        for row in result.matrix:
            writer.writerow([format_complex(complex(v)) for v in row])
    else:
        print(
            f"family={result.spec.family} n={result.spec.n} s={result.exponent} "
            f"path={result.path}",
            file=out,
        )
        _print_matrix_pretty(result.matrix, out)


def cmd_power(args, out) -> int:
    spec = FamilySpec(args.family, args.n, args.a, args.b)
    result = power_matrix(spec, args.s)
    _emit_power(result, args.format, out)
    return 0


def cmd_eigen(args, out) -> int:
    spec = FamilySpec(args.family, args.n, args.a, args.b)
    data = decompose(spec)
    if args.format == "json":
        payload = {
            "family": spec.family,
            "n": spec.n,
            "eigenvalues": [_complex_json(complex(v)) for v in data.eigenvalues],
            "nodes": [float(v) for v in data.nodes],
        }
        if args.vectors:
            payload["vectors"] = _matrix_entries(data.vec_matrix)
        print(json.dumps(payload), file=out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["k", "eigenvalue", "node"])
        for k in range(spec.n):
            writer.writerow([k + 1, format_complex(complex(data.eigenvalues[k])), repr(float(data.nodes[k]))])
    else:
        print(f"family={spec.family} n={spec.n} a={format_complex(spec.a)} b={format_complex(spec.b)}", file=out)
        for k in range(spec.n):
            print(
                f"  k={k + 1}  eigenvalue={format_complex(complex(data.eigenvalues[k]))}  "
                f"node={float(data.nodes[k])!r}",
                file=out,
            )
        if args.vectors:
            print("eigenvector matrix (columns are eigenvectors):", file=out)
            _print_matrix_pretty(data.vec_matrix, out)
    return 0


def _verify_case(spec, s, tol):
    row = {
        "check": "power",
        "family": spec.family,
        "n": spec.n,
        "a": spec.a,
        "b": spec.b,
        "s": s,
        "tol": tol,
    }
    try:
        result = power_verify(spec, s, tol)
        row["residual"] = result.residual_vs_oracle
        row["pass"] = True
    except VerificationError as exc:
        row["residual"] = float(mat_norm_maxabs(exc.closed_form - exc.oracle))
        row["pass"] = False
    return row


def _draw_spec(rng, family, n=None):
    if n is None:
        if family == FAMILY_A:
            n = int(rng.integers(2, 13))
        elif family == FAMILY_ANTI:
            n = int(rng.integers(1, 7)) * 2
        else:
            n = int(rng.integers(1, 13))
    while True:
        a = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        b = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(b) >= 0.25:
            return FamilySpec(family, n, a, b)


def _suite_rows(seed, tol):
    rng = np.random.default_rng(seed)
    rows = []
    for family in FAMILIES:
        for _ in range(12):
            spec = _draw_spec(rng, family)
            s = int(rng.integers(0, 7))
            rows.append(_verify_case(spec, s, tol))
            lam = decompose(spec).eigenvalues
            if np.abs(lam).min() >= 0.3:
                rows.append(_verify_case(spec, -int(rng.integers(1, 5)), tol))
    for n in range(2, 13, 2):
        spec = _draw_spec(rng, FAMILY_ANTI, n)
        twin = build_matrix(FamilySpec(FAMILY_ADAGGER, n, spec.a, spec.b))
        exchange = np.eye(n)[::-1]
        residual = mat_norm_maxabs(exchange @ twin - twin @ exchange)
        rows.append(
            {
                "check": "commute",
                "family": spec.family,
                "n": n,
                "a": spec.a,
                "b": spec.b,
                "s": 0,
                "tol": 0.0,
                "residual": residual,
                "pass": residual == 0.0,
            }
        )
    for n in range(3, 9):
        x = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lhs, rhs = fib_det_check(n, x)
        det_res = abs(lhs - rhs) / (1.0 + abs(lhs))
        fac_res = abs(fib_factor_eval(n, x) - fib_poly_eval(n - 1, x)) / (
            1.0 + abs(fib_poly_eval(n - 1, x))
        )
        for check, residual in (("fib-det", det_res), ("fib-factor", fac_res)):
            rows.append(
                {
                    "check": check,
                    "family": FAMILY_A,
                    "n": n,
                    "a": x,
                    "b": 1j,
                    "s": 0,
                    "tol": tol,
                    "residual": residual,
                    "pass": residual <= tol,
                }
            )
    return rows


def _emit_verify(rows, fmt, out):
    max_residual = max(row["residual"] for row in rows)
    ok = all(row["pass"] for row in rows)
    if fmt == "json":
        payload = {
            "pass": ok,
            "max_residual": max_residual,
            "cases": [
                {**row, "a": _complex_json(row["a"]), "b": _complex_json(row["b"])}
                for row in rows
            ],
        }
        print(json.dumps(payload), file=out)
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check", "family", "n", "a", "b", "s", "residual", "tol", "pass"])
        for row in rows:
            writer.writerow(
                [
                    row["check"],
                    row["family"],
                    row["n"],
                    format_complex(row["a"]),
                    format_complex(row["b"]),
                    row["s"],
                    repr(row["residual"]),
                    repr(row["tol"]),
                    str(row["pass"]).lower(),
                ]
            )
    else:
        for row in rows:
            status = "ok" if row["pass"] else "FAIL"
            print(
                f"{status}  {row['check']:10s} family={row['family']} n={row['n']} "
                f"a={format_complex(row['a'])} b={format_complex(row['b'])} "
                f"s={row['s']} residual={row['residual']:.3e}",
                file=out,
            )
        print(f"max residual {max_residual:.3e}  ({len(rows)} checks)", file=out)
    return ok


def cmd_verify(args, out) -> int:
    if args.suite:
        rows = _suite_rows(args.seed, args.tol)
    else:
        missing = [name for name in ("family", "n", "a", "b", "s") if getattr(args, name) is None]
        if missing:
            raise ValueError(
                "single-case verify needs --family --n --a --b --s "
                f"(missing {', '.join('--' + m for m in missing)}); or pass --suite"
            )
        spec = FamilySpec(args.family, args.n, args.a, args.b)
        rows = [_verify_case(spec, args.s, args.tol)]
    ok = _emit_verify(rows, args.format, out)
    if not ok:
        for row in rows:
            if not row["pass"]:
                print(
                    f"residual breach: family={row['family']} n={row['n']} "
                    f"a={format_complex(row['a'])} b={format_complex(row['b'])} "
                    f"s={row['s']} residual={row['residual']:.3e} tol={row['tol']:g}",
                    file=sys.stderr,
                )
        return 1
    return 0


def cmd_fib(args, out) -> int:
    by_recurrence = fib_poly_eval(args.n - 1, args.x)
    by_factorization = fib_factor_eval(args.n, args.x)
    det_lhs, det_rhs = fib_det_check(args.n, args.x)
    factor_residual = abs(by_factorization - by_recurrence)
    det_residual = abs(det_lhs - det_rhs)
    if args.format == "json":
        payload = {
            "n": args.n,
            "x": _complex_json(args.x),
            "recurrence": _complex_json(by_recurrence),
            "factorization": _complex_json(by_factorization),
            "det_lhs": _complex_json(det_lhs),
            "det_rhs": _complex_json(det_rhs),
            "factorization_residual": factor_residual,
            "determinant_residual": det_residual,
        }
        print(json.dumps(payload), file=out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["n", "x", "recurrence", "factorization", "det_lhs", "det_rhs",
             "factorization_residual", "determinant_residual"]
        )
        writer.writerow(
            [args.n, format_complex(args.x), format_complex(by_recurrence),
             format_complex(by_factorization), format_complex(det_lhs),
             format_complex(det_rhs), repr(factor_residual), repr(det_residual)]
        )
    else:
        print(f"n={args.n} x={format_complex(args.x)}", file=out)
        print(f"  value by recurrence:    {format_complex(by_recurrence)}", file=out)
        print(f"  value by factorization: {format_complex(by_factorization)}  "
              f"(residual {factor_residual:.3e})", file=out)
        print(f"  determinant:            {format_complex(det_lhs)}", file=out)
        print(f"  identity right side:    {format_complex(det_rhs)}  "
              f"(residual {det_residual:.3e})", file=out)
    return 0


def _bench_spec(rng, family, n):
    """Deterministic parameters scaled so the spectral radius is 1.

    Unit spectral radius keeps entries bounded at very large exponents, so
    timings measure the method rather than overflow handling.
    """
    a = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    b = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    if abs(b) < 0.25:
        b += 0.5 + 0.5j
    spec = FamilySpec(family, n, a, b)
    radius = float(np.abs(decompose(spec).eigenvalues).max())
    return FamilySpec(family, n, a / radius, b / radius)


def cmd_bench(args, out) -> int:
    rng = np.random.default_rng(args.seed)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    for n in args.n:
        spec = _bench_spec(rng, args.family, n)
        matrix = build_matrix(spec)
        for s in args.s:
            t0 = time.perf_counter_ns()
            closed = power_matrix(spec, s).matrix
            t_closed = time.perf_counter_ns() - t0
            t0 = time.perf_counter_ns()
            oracle = mat_pow_binary(matrix, s)
            t_oracle = time.perf_counter_ns() - t0
            residual = mat_norm_maxabs(closed - oracle)
            writer.writerow([spec.family, n, s, "closed_form", t_closed, repr(residual)])
            writer.writerow([spec.family, n, s, "binary_pow", t_oracle, repr(0.0)])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripow",
        description="Closed-form integer powers of structured complex matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_s):
        p.add_argument("--family", choices=FAMILIES, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=parse_complex, required=True, metavar="RE+IMi")
        p.add_argument("--b", type=parse_complex, required=True, metavar="RE+IMi")
        if with_s:
            p.add_argument("--s", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p_power = sub.add_parser("power", help="compute a matrix power")
    add_common(p_power, with_s=True)
    p_power.set_defaults(func=cmd_power)

    p_eigen = sub.add_parser("eigen", help="eigenvalues, nodes, eigenvectors")
    add_common(p_eigen, with_s=False)
    p_eigen.add_argument("--vectors", action="store_true", help="include the eigenvector matrix")
    p_eigen.set_defaults(func=cmd_eigen)

    p_verify = sub.add_parser("verify", help="closed form vs brute force")
    p_verify.add_argument("--family", choices=FAMILIES)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--a", type=parse_complex, metavar="RE+IMi")
    p_verify.add_argument("--b", type=parse_complex, metavar="RE+IMi")
    p_verify.add_argument("--s", type=int)
    p_verify.add_argument("--suite", action="store_true", help="run the randomized suite")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-8)
    p_verify.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_verify.set_defaults(func=cmd_verify)

    p_fib = sub.add_parser("fib", help="Fibonacci polynomial identities")
    p_fib.add_argument("--n", type=int, required=True)
    p_fib.add_argument("--x", type=parse_complex, required=True, metavar="RE+IMi")
    p_fib.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p_fib.set_defaults(func=cmd_fib)

    p_bench = sub.add_parser("bench", help="timing table (always CSV)")
    p_bench.add_argument("--family", choices=FAMILIES, required=True)
    p_bench.add_argument("--n", type=_parse_int_list, required=True, metavar="N1,N2,...")
    p_bench.add_argument("--s", type=_parse_int_list, required=True, metavar="S1,S2,...")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (SingularMatrixError, VerificationError, ClosureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
