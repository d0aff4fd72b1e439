"""Command-line front end.

Subcommands:

    table           defect counts cp(n, n, k) for n = 1..n_max, one row per n
    dist            full defect distribution for one (n, m)
    plotdata-fig1   exact probabilities vs the large-n approximation
    plotdata-fig2   exact full-lot probabilities vs the limiting curve
    simulate        seeded Monte Carlo defect histogram
    coupon          cars sent into one lot until it fills
    verify          cross-method invariant suites (quick or full)

Counts are emitted as decimal strings, never floats; probability columns
are derived values printed with 15 significant digits.  CSV output is
RFC-4180-style (comma separated, header row, counts quoted) preceded by
one `# config {..}` comment line echoing the resolved configuration;
JSON output carries the same configuration in a "config" field.  The
plain-text commands (table, verify) echo their configuration to stderr
so their stdout stays machine-comparable.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 refusal
of an over-cap enumeration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import asymptotic, checks, exact, simulate
from .rng import sub_seed

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP_REFUSED = 3

# counts stay exact far beyond this, but probability columns need n**m;
# beyond ~200k bits the exact column is skipped rather than stalled on
_EXACT_COLUMN_BIT_LIMIT = 200_000


def _fmt_float(x: float) -> str:
    return f"{x:.15g}"


def _emit(config: dict, columns: list[str], rows: list[dict],
          fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"config": config, "records": rows},
                          sort_keys=True, indent=2) + "\n"
    lines = ["# config " + json.dumps(config, sort_keys=True)]
    lines.append(",".join(columns))
    for row in rows:
        cells = []
        for col in columns:
            v = row[col]
            if v is None:
                cells.append("NA")
            elif isinstance(v, str):
                cells.append(f'"{v}"')
            elif isinstance(v, float):
                cells.append(_fmt_float(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _config(args: argparse.Namespace, **extra) -> dict:
    cfg = {"command": args.command}
    skip = {"command", "func"}
    for key, val in sorted(vars(args).items()):
        if key not in skip:
            cfg[key] = val
    cfg.update(extra)
    return cfg


def cmd_table(args) -> int:
    if args.n < 1:
        raise ValueError("table needs n >= 1")
    print("# config " + json.dumps(_config(args), sort_keys=True),
          file=sys.stderr)
    lines = ["n " + " ".join(f"k={k}" for k in range(args.n))]
    for n in range(1, args.n + 1):
        vals = (exact.defect_count_explicit(n, n, k) for k in range(n))
        lines.append(f"{n} " + " ".join(str(v) for v in vals))
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_dist(args) -> int:
    dist = exact.defect_distribution(args.n, args.m)
    total = dist.total
    ks = range(args.m + 1) if args.k is None else [args.k]
    rows = []
    for k in ks:
        if not 0 <= k <= args.m:
            raise ValueError(f"k must lie in 0..{args.m}")
        rows.append({"n": args.n, "m": args.m, "k": k,
                     "count": str(dist.counts[k]),
                     "probability": exact.ratio_as_float(dist.counts[k], total)})
    _write(_emit(_config(args), ["n", "m", "k", "count", "probability"],
                 rows, args.format), args.out)
    return EXIT_OK


def cmd_plotdata_fig1(args) -> int:
    m_list = args.m if args.m else [90, 100, 110]
    rows = []
    for m in m_list:
        dist = exact.defect_distribution(args.n, m)
        probs = dist.probabilities()
        for k in range(m + 1):
            in_regime = m < args.n + k
            rows.append({
                "n": args.n, "m": m, "k": k,
                "exact_probability": probs[k],
                "approx": asymptotic.pmf_approx(args.n, m, k) if in_regime else None,
            })
    _write(_emit(_config(args, m=m_list),
                 ["n", "m", "k", "exact_probability", "approx"],
                 rows, args.format), args.out)
    return EXIT_OK


def _lambda_grid(lo: float, hi: float, step: float) -> list[Fraction]:
    # exact decimal steps so floor(lambda * n) never wobbles on float dust
    flo, fhi, fstep = (Fraction(str(x)) for x in (lo, hi, step))
    if fstep <= 0 or flo <= 0:
        raise ValueError("lambda grid must be positive with positive step")
    grid = []
    lam = flo
    while lam <= fhi:
        grid.append(lam)
        lam += fstep
    return grid


def cmd_plotdata_fig2(args) -> int:
    n_list = args.n if args.n else [10, 20]
    rows = []
    for lam in _lambda_grid(args.lambda_min, args.lambda_max, args.lambda_step):
        lam_f = float(lam)
        limit = asymptotic.full_lot_limit(lam_f)
        for n in n_list:
            m = int(lam * n)  # floor, exactly
            if m < n:
                p_full = 0.0
            else:
                count = (exact.tail_sum(n, m, m - n)
                         - exact.tail_sum(n, m, m - n + 1))
                p_full = exact.ratio_as_float(count, n ** m)
            rows.append({"n": n, "lambda": lam_f, "m": m,
                         "exact_full_probability": p_full, "limit": limit})
    _write(_emit(_config(args, n=n_list),
                 ["n", "lambda", "m", "exact_full_probability", "limit"],
                 rows, args.format), args.out)
    return EXIT_OK


def cmd_simulate(args) -> int:
    emp = simulate.sample_empirical(args.n, args.m, args.trials, args.seed)
    exact_probs = None
    if args.m * max(args.n.bit_length(), 1) <= _EXACT_COLUMN_BIT_LIMIT:
        exact_probs = exact.defect_distribution(args.n, args.m).probabilities()
    rows = []
    for k in range(args.m + 1):
        rows.append({
            "n": args.n, "m": args.m, "k": k, "trials": args.trials,
            "count": str(emp.counts[k]),
            "frequency": emp.counts[k] / args.trials,
            "exact_probability": exact_probs[k] if exact_probs else None,
        })
    _write(_emit(_config(args),
                 ["n", "m", "k", "trials", "count", "frequency",
                  "exact_probability"],
                 rows, args.format), args.out)
    return EXIT_OK


def cmd_coupon(args) -> int:
    if args.trials < 1:
        raise ValueError("need at least one run")
    rows = []
    for i in range(args.trials):
        cars = simulate.cars_until_full(args.n, sub_seed(args.seed, i))
        rows.append({"n": args.n, "run": i, "cars": cars})
    _write(_emit(_config(args), ["n", "run", "cars"], rows, args.format),
           args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    print("# config " + json.dumps(_config(args), sort_keys=True),
          file=sys.stderr)
    results = checks.run_suite(args.level, cap=args.cap)
    lines = []
    for r in results:
        lines.append(f"PASS {r.name}" if r.passed else f"FAIL {r.name}: {r.detail}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkfun",
        description="Exact, asymptotic and simulated counts of defective "
                    "parking functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="defect counts cp(n,n,k) up to n_max")
    p.add_argument("--n", type=int, default=10, help="largest n (default 10)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dist", help="defect distribution for one (n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None,
                   help="restrict output to a single defect value")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("plotdata-fig1",
                       help="exact probabilities vs large-n approximation")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--m", type=int, action="append",
                   help="driver count; repeatable (default 90, 100, 110)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plotdata_fig1)

    p = sub.add_parser("plotdata-fig2",
                       help="full-lot probabilities vs the limiting curve")
    p.add_argument("--n", type=int, action="append",
                   help="space count; repeatable (default 10, 20)")
    p.add_argument("--lambda-min", type=float, default=0.5)
    p.add_argument("--lambda-max", type=float, default=4.0)
    p.add_argument("--lambda-step", type=float, default=0.05)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plotdata_fig2)

    p = sub.add_parser("simulate", help="seeded Monte Carlo defect histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("coupon", help="cars sent until the lot fills")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1,
                   help="independent runs; run i uses sub_seed(seed, i)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_coupon)

    p = sub.add_parser("verify", help="run the cross-method invariant suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--cap", type=int, default=None,
                   help="enumeration cap forwarded to exhaustive checks")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except simulate.EnumerationCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
