"""Command-line entry point: ``freelog <command> [options]``.

Machine output (CSV or JSON) goes to stdout.  Exact rationals are written as
``p/q`` strings, reals with ``--precision`` significant digits.  Short
human-readable summaries go to stderr.  Exit codes: 0 ok, 1 a computed
cross-check or verification failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import asymptotics, stats, verify, words, zeta
from .zeta import BouquetParams


@dataclass(frozen=True)
class RunConfig:
    n: int
    j: int = 1
    fmt: str = "csv"
    seed: int | None = None
    precision: int = 12


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def real(x: float, precision: int) -> str:
    return f"{float(x):.{precision}g}"


def emit(rows: list[dict[str, Any]], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(rows) + "\n")
        return
    if not rows:
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.write(buf.getvalue())


def note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _rank(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("rank n must be >= 2")
    return n


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals or any(v < 1 for v in vals):
        raise argparse.ArgumentTypeError("lengths must be positive")
    return vals


def _grid(text: str) -> list[Fraction]:
    try:
        pts = [Fraction(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    if len(pts) < 2 or pts != sorted(pts):
        raise argparse.ArgumentTypeError("grid needs >= 2 sorted points")
    return pts


def cmd_count(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    M = words.transfer_matrix(cfg.n)
    series = zeta.G0(params).series_coefficients(args.max_len)
    rows, ok = [], True
    for m in range(1, args.max_len + 1):
        row = {
            "m": m,
            "count": rational(series[m]),
            "formula_count": zeta.count_cyclic(params, m),
            "trace_count": words.matrix_power_trace(M, m),
        }
        vals = {series[m], row["formula_count"], row["trace_count"]}
        if args.enumerate and m <= args.enumerate:
            row["enum_count"] = sum(1 for _ in words.enumerate_cyclic(cfg.n, m, allow_large=True))
            vals.add(row["enum_count"])
        elif args.enumerate:
            row["enum_count"] = ""
        row["agree"] = len(vals) == 1
        ok &= row["agree"]
        rows.append(row)
    emit(rows, cfg.fmt)
    return 0 if ok else 1


def cmd_powersum(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    if args.k % 2:
        note(f"k={args.k} is odd: every power sum vanishes (inverse words pair off)")
    table = zeta.power_sums(params, args.k, args.max_len)
    hists = words.histograms_through(cfg.n, cfg.j, args.max_len)
    rows, ok = [], True
    for (m, s), h in zip(table.entries, hists):
        hs = h.power_sum(args.k)
        ok &= hs == s
        rows.append({"m": m, "S": s, "histogram_S": hs, "agree": hs == s})
    emit(rows, cfg.fmt)
    return 0 if ok else 1


def cmd_gk(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    f = zeta.G_k(params, args.k)
    found = zeta.poles(f, zeta.candidate_poles(params))
    if cfg.fmt == "json":
        emit(
            [
                {
                    "k": args.k,
                    "numerator": [rational(c) for c in f.numerator.coeffs],
                    "denominator": [rational(c) for c in f.denominator.coeffs],
                    "poles": {rational(p): K for p, K in found.items()},
                }
            ],
            "json",
        )
    else:
        rows = [
            {"part": part, "degree": i, "coefficient": rational(c)}
            for part, poly in (("numerator", f.numerator), ("denominator", f.denominator))
            for i, c in enumerate(poly.coeffs)
        ]
        emit(rows, "csv")
    note("poles: " + (", ".join(f"u={rational(p)} (order {K})" for p, K in found.items()) or "none"))
    return 0


def cmd_laurent(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    f = zeta.G_k(params, args.k)
    pole = Fraction(1, params.q)
    sp = f.singular_part_at(pole)
    if args.k >= 2 and args.k % 2 == 0:
        chk = zeta.laurent_check(params, args.k)
        pred_order, pred_lead, match = chk.predicted_order, chk.predicted_leading, chk.matches
    elif args.k == 0:
        pred_order, pred_lead = 1, Fraction(-1, params.q)
        match = sp.order == 1 and sp.leading == pred_lead
    else:
        pred_order, pred_lead = 0, Fraction(0)
        match = sp.order == 0
    row = {
        "k": args.k,
        "pole": rational(pole),
        "order": sp.order,
        "leading": rational(sp.leading),
        "coefficients": " ".join(rational(a) for a in sp.coefficients),
        "predicted_order": pred_order,
        "predicted_leading": rational(pred_lead),
        "match": match,
    }
    emit([row], cfg.fmt)
    note(f"order={sp.order} leading={rational(sp.leading)} predicted={rational(pred_lead)} match={str(match).lower()}")
    return 0 if match else 1


def cmd_tauberian(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    rows = []
    for l in args.lens:
        if args.lemma:
            exact = asymptotics.pochhammer_sum(args.k, l, params.q, not args.unweighted)
            main = asymptotics.pochhammer_asymptotic(args.k, l, params.q, not args.unweighted)
            ratio = exact / main if main else None
        else:
            p = asymptotics.powersum_partial_check(params, args.k, l)
            exact, main, ratio = p.exact_value, p.main_term, p.ratio
        rows.append(
            {
                "l": l,
                "exact": rational(exact),
                "main_term": rational(main),
                "ratio": "" if ratio is None else str(asymptotics.to_decimal(ratio, cfg.precision)),
            }
        )
    emit(rows, cfg.fmt)
    return 0


def cmd_moments(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    report = stats.moment_convergence(params, args.k_max, args.lens)
    rows = [
        {
            "l": r.l,
            "k": r.k,
            "value": rational(r.value),
            "decimal": real(r.decimal, cfg.precision),
            "target": r.target,
            "deviation": real(r.deviation, cfg.precision),
        }
        for r in report.rows
    ]
    emit(rows, cfg.fmt)
    return 0


def cmd_dist(args, cfg: RunConfig) -> int:
    params = BouquetParams(cfg.n, cfg.j)
    table = stats.distribution(params, args.l)
    pts = args.grid or list(stats.DEFAULT_GRID)
    rows = []
    for a, b in zip(pts, pts[1:]):
        if args.fixed_length:
            p = table.conditional_probability(args.l, a, b)
        else:
            p = table.interval_probability(a, b)
        target = stats.gaussian_cdf(float(b)) - stats.gaussian_cdf(float(a))
        rows.append(
            {
                "a": rational(a),
                "b": rational(b),
                "probability": rational(p),
                "decimal": real(float(p), cfg.precision),
                "gaussian": real(target, cfg.precision),
                "difference": real(float(p) - target, cfg.precision),
            }
        )
    emit(rows, cfg.fmt)
    if not args.fixed_length:
        d = stats.gaussian_discrepancy(params, args.l, pts)
        note(f"l={args.l} words={table.total} discrepancy={d:.{cfg.precision}g}")
    return 0


def cmd_sample(args, cfg: RunConfig) -> int:
    seed = 0 if cfg.seed is None else cfg.seed
    ws = words.sample_many(cfg.n, args.m, args.count, seed)
    rows = [{"index": i, "word": str(w), "log_j": words.log_j(w, cfg.j)} for i, w in enumerate(ws)]
    emit(rows, cfg.fmt)
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    results = verify.run_all(quick=args.quick)
    rows = [
        {"criterion": r.criterion, "name": r.name, "passed": r.passed, "measured": r.measured}
        for r in results
    ]
    emit(rows, cfg.fmt)
    for r in results:
        note(f"[{'PASS' if r.passed else 'FAIL'}] {r.criterion}. {r.name} ({r.seconds:.2f}s)")
    failed = [r.criterion for r in results if not r.passed]
    if failed:
        note(json.dumps({"failed": failed}))
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_rank, default=2, help="rank of the free group (>= 2)")
    common.add_argument("--j", type=_positive, default=1, help="distinguished generator index")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--precision", type=int, default=12, help="significant digits for reals (>= 6)")

    parser = argparse.ArgumentParser(prog="freelog", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="cyclically reduced word counts, three ways")
    p.add_argument("--max-len", type=_positive, required=True)
    p.add_argument("--enumerate", type=_nonneg, default=0, metavar="M",
                   help="also enumerate exhaustively for lengths <= M")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("powersum", parents=[common], help="S_k(m) from the generating function")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--max-len", type=_positive, required=True)
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("gk", parents=[common], help="numerator/denominator of G^(k)")
    p.add_argument("--k", type=_nonneg, required=True)
    p.set_defaults(func=cmd_gk)

    p = sub.add_parser("laurent", parents=[common], help="singular part of G^(k) at u = 1/q")
    p.add_argument("--k", type=_nonneg, required=True)
    p.set_defaults(func=cmd_laurent)

    p = sub.add_parser("tauberian", parents=[common], help="exact partial sums vs main terms")
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--lens", type=_int_list, default=[10, 20, 40])
    p.add_argument("--lemma", action="store_true", help="Pochhammer sums instead of power sums")
    p.add_argument("--unweighted", action="store_true", help="with --lemma: drop the q^m weight")
    p.set_defaults(func=cmd_tauberian)

    p = sub.add_parser("moments", parents=[common], help="normalized moments vs Gaussian")
    p.add_argument("--k-max", type=_nonneg, default=6)
    p.add_argument("--lens", type=_int_list, default=[25, 50, 100, 200])
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("dist", parents=[common], help="exact interval probabilities of X_l")
    p.add_argument("--l", type=_positive, required=True)
    p.add_argument("--grid", type=_grid, default=None, help="comma-separated sorted endpoints")
    p.add_argument("--fixed-length", action="store_true", help="condition on length exactly l")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("sample", parents=[common], help="uniform cyclically reduced words")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--count", type=_positive, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="smaller cases for a smoke run")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.j > args.n:
        parser.error(f"--j must be in 1..{args.n}")
    if args.precision < 6:
        parser.error("--precision must be >= 6")
    cfg = RunConfig(args.n, args.j, args.format, args.seed, args.precision)
    return args.func(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
