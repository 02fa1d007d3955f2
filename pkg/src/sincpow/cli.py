"""Command line front end.

    sincpow eval 3 2 --format latex
    sincpow table --n-max 6
    sincpow verify identity --n-max 60
    sincpow verify series --n-max 20
    sincpow verify oracle --n-max 12 --tol 1e-8
    sincpow verify lemma --q-max 6

Exit status: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from sincpow.exact_core import (
    GaussianRational,
    IntegralSpec,
    SincPowError,
    alternating_sum,
    c_constant,
    closed_form,
)
from sincpow.oracle import LEMMA1_THRESHOLD, integrate, lemma1_residual
from sincpow.render import FORMATS, RenderRequest, render
from sincpow.series import maclaurin_combination_is_zero, sin_pow_series

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class _Output:
    def __init__(self):
        self.lines: list[str] = []

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


def valid_pairs(n_max: int):
    for n in range(1, n_max + 1):
        for q in range(1, n + 1):
            if q >= 2 or n % 2:
                yield n, q


def cmd_eval(args, out) -> int:
    spec = IntegralSpec(args.n, args.q)
    value = closed_form(spec)
    out(render(RenderRequest(value, args.format, args.digits), spec.n, spec.q))
    return EXIT_OK


def cmd_table(args, out) -> int:
    for n, q in valid_pairs(args.n_max):
        text = render(RenderRequest(closed_form((n, q)), args.format, args.digits), n, q)
        out(text if args.format == "json" else f"{n}\t{q}\t{text}")
    return EXIT_OK


def verify_identity(n_max: int) -> tuple[int, list[tuple[int, int, int]]]:
    cases, failures = 0, []
    for n in range(3, n_max + 1):
        for q in range(2, n):
            if (n + q) % 2:
                cases += 1
                s = alternating_sum(n, q)
                if s != 0:
                    failures.append((n, q, s))
    return cases, failures


def verify_series(n_max: int) -> tuple[int, list[tuple[int, int, str]]]:
    cases, failures = 0, []
    for n in range(1, n_max + 1):
        for q in range(1, n + 1):
            cases += 1
            if not maclaurin_combination_is_zero(n, q):
                failures.append((n, q, "exponential combination"))
            if q >= 2 and not sin_pow_series(n, q - 2).is_zero():
                failures.append((n, q, "sine power series"))
    return cases, failures


def _oracle_case(n: int, q: int, tol: float):
    exact = float(closed_form((n, q)))
    result = integrate(n, q, tol)
    return n, q, exact, result


def verify_oracle(n_max: int, tol: float, workers: int = 1):
    pairs = list(valid_pairs(n_max))
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        rows = list(pool.map(lambda nq: _oracle_case(*nq, tol), pairs))
    return sorted(rows, key=lambda r: (r[0], r[1]))


def verify_lemma(q_max: int, alphas=(1.0, 2.0, 3.0)):
    """Rows (q, alpha, |omega(0.1)|, |omega(1e-3)|, ok) plus the c_q recursion failures."""
    rows = []
    for q in range(1, q_max + 1):
        for alpha in alphas:
            r1 = abs(lemma1_residual(q, alpha, 1e-1))
            r3 = abs(lemma1_residual(q, alpha, 1e-3))
            if q == 1:
                ok = r1 <= 1e-9 and r3 <= 1e-9
            else:
                ok = r3 < r1 and r3 <= LEMMA1_THRESHOLD
            rows.append((q, alpha, r1, r3, ok))
    bad_recursion = [q for q in range(1, q_max + 1) if not c_recursion_holds(q)]
    return rows, bad_recursion


def c_recursion_holds(q: int) -> bool:
    i = GaussianRational(0, 1)
    lhs = GaussianRational.i_power(q) / (math.factorial(q) * q) + i * c_constant(q) / q
    return lhs == c_constant(q + 1)


def cmd_verify(args, out) -> int:
    if args.suite == "identity":
        cases, failures = verify_identity(args.n_max)
        for n, q, s in failures:
            out(f"FAIL n={n} q={q} sum={s}")
    elif args.suite == "series":
        cases, failures = verify_series(args.n_max)
        for n, q, what in failures:
            out(f"FAIL n={n} q={q} {what}")
    elif args.suite == "oracle":
        rows = verify_oracle(args.n_max, args.tol, args.workers)
        cases, failures = len(rows), []
        for n, q, exact, res in rows:
            dev = abs(res.value - exact)
            ok = dev <= 10 * args.tol
            out(f"{n}\t{q}\t{exact:.12f}\t{res.value:.12f}\t{dev:.2e}\t{res.error_bound:.2e}\t{'ok' if ok else 'FAIL'}")
            if not ok:
                failures.append((n, q))
    else:
        rows, bad = verify_lemma(args.q_max)
        cases = len(rows) + args.q_max
        failures = [r for r in rows if not r[4]] + bad
        for q, alpha, r1, r3, ok in rows:
            out(f"{q}\t{alpha:g}\t{r1:.3e}\t{r3:.3e}\t{'ok' if ok else 'FAIL'}")
        for q in bad:
            out(f"FAIL c_q recursion at q={q}")
    if failures:
        out(f"FAIL ({len(failures)} of {cases} cases)")
        return EXIT_FAIL
    out(f"PASS ({cases} cases)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sincpow", description="Exact values of int_0^inf sin(x)^n / x^q dx.")
    parser.add_argument("--out", metavar="PATH", help="also write stdout to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one integral")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--format", choices=FORMATS, default="exact")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="all valid (n, q) with q <= n <= N")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--format", choices=FORMATS, default="exact")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    vsub = p.add_subparsers(dest="suite", required=True)
    v = vsub.add_parser("identity", help="alternating binomial sums vanish")
    v.add_argument("--n-max", type=int, required=True)
    v = vsub.add_parser("series", help="low-order Maclaurin coefficients of sin^n vanish")
    v.add_argument("--n-max", type=int, required=True)
    v = vsub.add_parser("oracle", help="closed forms against quadrature")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--tol", type=float, default=1e-8)
    v.add_argument("--workers", type=int, default=1)
    v = vsub.add_parser("lemma", help="residuals of the polynomial-subtracted exponential integral")
    v.add_argument("--q-max", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = _Output()
    try:
        code = args.func(args, out)
    except SincPowError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = out.text()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
