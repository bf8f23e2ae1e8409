"""Self-verification: every acceptance criterion as a callable check.

Each check returns a :class:`CheckResult` carrying the measured quantity, so
``freelog verify`` can report what was observed and not just pass/fail.
``quick=True`` shrinks the expensive cases (documented per check) and is
meant for smoke runs; the full run is the acceptance gate.
"""
from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from scipy.stats import chi2

from .asymptotics import powersum_partial_check
from .ratfunc import singular_part_at
from .stats import gaussian_discrepancy, moment, moment_convergence
from .words import (
    enumerate_cyclic,
    histogram_at_length,
    histograms_through,
    log_j,
    matrix_power_trace,
    sample_many,
    transfer_matrix,
)
from .zeta import BouquetParams, G0, G_k, count_cyclic, laurent_check, power_sums

MOMENT_TOLERANCES = {2: 0.02, 4: 0.05, 6: 0.10}  # |M_2 - 1|, then relative for k = 4, 6
DISCREPANCY_TOLERANCE = 0.05
TAUBERIAN_TOLERANCE = 0.10
CHI_SQUARE_ALPHA = 0.001


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    measured: str
    seconds: float = 0.0


def strictly_decreasing(xs) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


def check_counts(quick: bool = False) -> CheckResult:
    cases = [(2, 8 if quick else 10), (3, 5 if quick else 7)]
    bad = []
    for n, m_max in cases:
        params = BouquetParams(n)
        M = transfer_matrix(n)
        g0 = G0(params).series_coefficients(m_max)
        for m in range(1, m_max + 1):
            vals = (
                sum(1 for _ in enumerate_cyclic(n, m)),
                matrix_power_trace(M, m),
                count_cyclic(params, m),
                g0[m],
            )
            if len(set(vals)) != 1:
                bad.append((n, m, vals))
    desc = "; ".join(f"n={n} m<={m}" for n, m in cases)
    return CheckResult(1, "count agreement", not bad, f"{desc}; mismatches={bad}")


def check_power_sums(quick: bool = False) -> CheckResult:
    params = BouquetParams(2, 1)
    m_small, m_large = 8, (20 if quick else 50)
    bad = []
    hists = histograms_through(2, 1, m_large)
    enum_sums = {}
    for m in range(1, m_small + 1):
        logs = Counter(log_j(w, 1) for w in enumerate_cyclic(2, m))
        enum_sums[m] = logs
    for k in range(1, 7):
        if k % 2 and not G_k(params, k).is_zero():
            bad.append(("G_k not identically zero", k))
        gf = power_sums(params, k, m_large)
        for m in range(1, m_large + 1):
            h = hists[m - 1].power_sum(k)
            if h != gf[m]:
                bad.append((k, m, "hist", h, gf[m]))
            if m <= m_small:
                e = sum(c * v**k for v, c in enum_sums[m].items())
                if e != gf[m]:
                    bad.append((k, m, "enum", e, gf[m]))
    return CheckResult(
        2, "power-sum agreement", not bad, f"k=1..6, enum m<={m_small}, hist m<={m_large}; mismatches={bad}"
    )


def check_laurent(quick: bool = False) -> CheckResult:
    rows = []
    ok = True
    for n in (2, 3):
        for k in (2, 4, 6, 8):
            r = laurent_check(BouquetParams(n), k)
            ok &= r.matches
            rows.append(f"n={n},k={k}:order={r.order},leading={r.leading}")
    return CheckResult(3, "Laurent leading term", ok, " ".join(rows))


def check_residue(quick: bool = False) -> CheckResult:
    rows, ok = [], True
    for n in (2, 3, 4):
        params = BouquetParams(n)
        sp = singular_part_at(G0(params), Fraction(1, params.q))
        good = sp.order == 1 and sp.leading == Fraction(-1, params.q)
        ok &= good
        rows.append(f"n={n}:res={sp.leading}")
    return CheckResult(4, "residue of G0 at 1/q", ok, " ".join(rows))


def check_tauberian(quick: bool = False) -> CheckResult:
    params = BouquetParams(2)
    ok, rows = True, []
    for k in (2, 4):
        preds = [powersum_partial_check(params, k, l) for l in (10, 20, 40)]
        devs = [p.deviation for p in preds]
        ok &= strictly_decreasing(devs) and devs[-1] <= Fraction(TAUBERIAN_TOLERANCE)
        rows.append(f"k={k}:ratios=" + ",".join(f"{float(p.ratio):.6f}" for p in preds))
    return CheckResult(5, "Tauberian main terms", ok, " ".join(rows))


def check_moments(quick: bool = False) -> CheckResult:
    lens = [25, 50, 100] if quick else [25, 50, 100, 200]
    report = moment_convergence(BouquetParams(2), 6, lens)
    ok, rows = True, []
    last = lens[-1]
    for k, tol in MOMENT_TOLERANCES.items():
        devs = report.deviations(k)
        row = report.row(k, last)
        err = row.deviation if k == 2 else row.relative_deviation
        ok &= strictly_decreasing(devs) and err <= tol
        rows.append(f"M_{k}(X_{last})={row.decimal:.6f}")
    return CheckResult(6, "moment convergence", ok, " ".join(rows))


def check_discrepancy(quick: bool = False) -> CheckResult:
    lens = [12, 50, 200]
    params = BouquetParams(2)
    ds = [gaussian_discrepancy(params, l) for l in lens]
    ok = strictly_decreasing(ds) and ds[-1] <= DISCREPANCY_TOLERANCE
    return CheckResult(7, "Gaussian discrepancy", ok, " ".join(f"l={l}:{d:.6f}" for l, d in zip(lens, ds)))


def chi_square_uniform(n: int, m: int, count: int, seed: int) -> tuple[float, float]:
    """Chi-square statistic and p-value of sampled log_1 values vs the exact histogram."""
    hist = histogram_at_length(n, 1, m)
    total = hist.total()
    observed = Counter(log_j(w, 1) for w in sample_many(n, m, count, seed))
    stat = 0.0
    for v, c in hist.counts.items():
        expected = count * c / total
        stat += (observed.get(v, 0) - expected) ** 2 / expected
    return stat, float(chi2.sf(stat, len(hist.counts) - 1))


def check_sampler(quick: bool = False) -> CheckResult:
    count = 20_000 if quick else 100_000
    stat, p = chi_square_uniform(2, 6, count, seed=12345)
    a = [str(w) for w in sample_many(2, 6, 50, seed=99)]
    b = [str(w) for w in sample_many(2, 6, 50, seed=99)]
    ok = p > CHI_SQUARE_ALPHA and a == b
    return CheckResult(8, "sampler uniformity", ok, f"samples={count} chi2={stat:.3f} p={p:.4f} reproducible={a == b}")


def check_anchors(quick: bool = False) -> CheckResult:
    params = BouquetParams(2)
    s2 = tuple(power_sums(params, 2, 3).values())
    m2 = moment(params, 2, 3)
    counts = tuple(count_cyclic(params, m) for m in (1, 2, 3))
    ok = s2 == (2, 16, 78) and m2 == Fraction(9, 11) and counts == (4, 12, 28)
    return CheckResult(9, "anchor values", ok, f"S_2={s2} M_2(X_3)={m2} counts={counts}")


CHECKS: list[Callable[[bool], CheckResult]] = [
    check_counts,
    check_power_sums,
    check_laurent,
    check_residue,
    check_tauberian,
    check_moments,
    check_discrepancy,
    check_sampler,
    check_anchors,
]


def run_all(quick: bool = False) -> list[CheckResult]:
    out = []
    for check in CHECKS:
        t0 = time.perf_counter()
        r = check(quick)
        r.seconds = time.perf_counter() - t0
        out.append(r)
    return out
