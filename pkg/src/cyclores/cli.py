"""Command-line interface.

    $ cyclores classify --l 3 --p 7 --d 2
    $ cyclores table --l 5 --p-min 11 --p-max 500 --d-list 2,3,7 --format json --output t.json
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from sympy import primerange

from .criterion import classify, conjecture_scan, criterion_for_2, criterion_for_l, sum_inverse_halves
from .cyclotomic import EUCLIDEAN_PRIMES, CycInt, galois, one_jet
from .jacobi import cubic_partition, euler_cubic_table, jacobi_sum, verify_lemma4
from .modp import InvalidInput, build_context, check_odd_prime
from .oracle import ind_class_oracle
from .records import OutputRecord, write_records, write_rows
from .symbol import check_eisenstein


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _seed_default() -> int:
    env = os.environ.get("CYCLORES_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"CYCLORES_SEED must be an integer, got {env!r}")


def make_record(ctx, D: int, seed: int) -> OutputRecord:
    c = classify(ctx, D, seed)
    truth = ind_class_oracle(ctx, D)
    return OutputRecord(ctx.p, ctx.l, ctx.gamma, D, c.t, c.S, c.ind_class, truth, c.ind_class == truth)


def _records_for_p(l: int, p: int, ds: list[int], seed: int) -> list[OutputRecord]:
    ctx = build_context(l, p)
    return [make_record(ctx, D, seed) for D in sorted(ds) if math.gcd(D, l * p) == 1]


# subcommands

def cmd_context(args, out) -> int:
    ctx = build_context(args.l, args.p)
    write_rows([{"l": ctx.l, "p": ctx.p, "gamma": ctx.gamma, "alpha": ctx.alpha}],
               ("l", "p", "gamma", "alpha"), args.format, out)
    return 0


def cmd_jacobi(args, out) -> int:
    ctx = build_context(args.l, args.p)
    J = jacobi_sum(ctx, args.i, args.j)
    jet = one_jet(J)
    row = {
        "l": ctx.l, "p": ctx.p, "i": args.i, "j": args.j, "coeffs": list(J.coeffs),
        "jet_b": jet.b, "jet_c": jet.c,
        "jet_is_minus_one": (jet.b, jet.c) == (ctx.l - 1, 0),
        "abs2_is_p": J * galois(J, ctx.l - 1) == CycInt.from_int(ctx.l, ctx.p),
    }
    write_rows([row], tuple(row), args.format, out)
    return 0


def cmd_classify(args, out) -> int:
    ds = list(args.d or []) + list(args.d_list or [])
    if not ds:
        raise UsageError("give at least one --d or --d-list")
    ctx = build_context(args.l, args.p)
    records = []
    for D in ds:
        if D % ctx.p == 0 or math.gcd(D, ctx.l) != 1:
            raise UsageError(f"D={D} must be coprime to p={ctx.p} and l={ctx.l}")
        records.append(make_record(ctx, D, args.seed))
    write_records(records, args.format, out)
    return 0 if all(r.match for r in records) else 1


def cmd_partition3(args, out) -> int:
    ctx = build_context(3, args.p)
    part = cubic_partition(args.p, ctx)
    rows = []
    for D in args.d_list:
        if D % args.p == 0:
            raise UsageError(f"D={D} must be coprime to p={args.p}")
        r = euler_cubic_table(ctx, D)
        rows.append({"p": args.p, "L": part.L, "M_abs": abs(part.M), "D": D, "power": r.power,
                     "plus": r.plus, "minus": r.minus, "branch": r.branch})
    write_rows(rows, ("p", "L", "M_abs", "D", "power", "plus", "minus", "branch"), args.format, out)
    return 0 if all(r["branch"] != "none" for r in rows) else 1


def run_checks(l: int, p: int, seed: int = 0, d_max: int = 50) -> list[dict]:
    ctx = build_context(l, p)
    rows = []

    def add(name, ok, detail=""):
        rows.append({"check": name, "passed": bool(ok), "detail": detail})

    J = jacobi_sum(ctx, 1, 1)
    jet = one_jet(J)
    add("lemma1_jet", (jet.b, jet.c) == (l - 1, 0), f"jet=({jet.b};{jet.c})")
    add("remark1_abs2", J * galois(J, l - 1) == CycInt.from_int(l, p), "")
    if l in EUCLIDEAN_PRIMES:
        rep = verify_lemma4(ctx)
        add("lemma4_product", rep.holds, "K=" + ";".join(map(str, rep.K.coeffs)))
    else:
        add("lemma4_product", True, "skipped: l not norm-Euclidean")
    qs = [q for q in primerange(2, d_max + 1) if math.gcd(q, l * p) == 1]
    bad = [q for q in qs if not check_eisenstein(ctx, q, seed).holds]
    add("eisenstein", not bad, f"primes<={d_max} failing: {bad}" if bad else f"{len(qs)} primes")
    ds = [D for D in range(2, d_max + 1) if math.gcd(D, l * p) == 1]
    mism = [D for D in ds if not make_record(ctx, D, seed).match]
    add("theorem1_vs_oracle", not mism, f"mismatches: {mism}" if mism else f"{len(ds)} values")
    for name, crit in (("lemma5_vs_oracle", criterion_for_l), ("lemma6_vs_oracle", criterion_for_2)):
        r = crit(ctx)
        add(name, r.agrees, f"(i)={r.residue} (ii)={r.index_one} oracle={r.oracle_class}")
    return rows


def cmd_verify(args, out) -> int:
    rows = run_checks(args.l, args.p, args.seed)
    write_rows(rows, ("check", "passed", "detail"), args.format, out)
    return 0 if all(r["passed"] for r in rows) else 1


def cmd_scan(args, out) -> int:
    if args.max < 3:
        raise UsageError("--max must be at least 3")
    if args.verbose:
        rows = [{"l": l, "S": sum_inverse_halves(l)} for l in primerange(3, args.max + 1)]
        write_rows(rows, ("l", "S"), args.format, out)
        return 0
    hits = conjecture_scan(args.max)
    if args.format == "json":
        write_rows([{"l": l, "S": 0} for l in hits], ("l", "S"), "json", out)
    else:
        for l in hits:
            print(l, file=out)
    return 0


def cmd_table(args, out) -> int:
    if not args.d_list:
        raise UsageError("--d-list must name at least one D")
    if args.p_min > args.p_max:
        raise UsageError("--p-min exceeds --p-max")
    check_odd_prime(args.l)
    ps = [p for p in primerange(args.p_min, args.p_max + 1) if p % args.l == 1]
    if args.jobs > 1 and len(ps) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            chunks = list(pool.map(_records_for_p, [args.l] * len(ps), ps,
                                   [args.d_list] * len(ps), [args.seed] * len(ps)))
    else:
        chunks = [_records_for_p(args.l, p, args.d_list, args.seed) for p in ps]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.p, r.D))
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_records(records, args.format, fh)
    else:
        write_records(records, args.format, out)
    if args.plot and records:
        from .plotting import plot_index_classes

        plot_index_classes(records, args.plot)
    return 0 if all(r.match for r in records) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for equal-degree factorization (default: $CYCLORES_SEED or 0)")
    common.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="cyclores",
        description="Euler's criterion of prime order l via Jacobi sums and residue symbols.",
    )
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    def lp(p, need_l=True):
        if need_l:
            p.add_argument("--l", type=int, required=True)
        p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("context", parents=[common], help="least primitive root and alpha")
    lp(p)
    p.set_defaults(func=cmd_context)

    p = sub.add_parser("jacobi", parents=[common], help="Jacobi sum J(i, j)")
    lp(p)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("classify", parents=[common], help="index class of D from (J/D)_l")
    lp(p)
    p.add_argument("--d", type=int, action="append")
    p.add_argument("--d-list", type=_int_list)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("partition3", parents=[common], help="4p = L^2 + 27M^2 and the cubic Euler table")
    lp(p, need_l=False)
    p.add_argument("--d-list", type=_int_list, default=[2, 3, 5])
    p.set_defaults(func=cmd_partition3)

    p = sub.add_parser("verify", parents=[common], help="run every identity check for (l, p)")
    lp(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-conjecture", parents=[common], help="primes l with S = 0 mod l")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", parents=[common], help="batch classification records")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p-min", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--d-list", type=_int_list, required=True)
    p.add_argument("--output", help="write records here instead of stdout")
    p.add_argument("--plot", help="also render an index-class heat map to this image file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _seed_default()
        return args.func(args, out)
    except (InvalidInput, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
