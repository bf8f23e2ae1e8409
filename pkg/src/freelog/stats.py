"""Moments and distribution of the normalized discrete logarithm.

X_l is the value sqrt(g/m) * log_j(C) for C uniform over all cyclically
reduced words of length 1 <= m <= l.  Moments are exact rationals because
only even k contribute and then (g/m)^(k/2) is rational.  Probabilities of
closed intervals are exact too: membership of sqrt(g/m) * v in [a, b] is
decided with integer square roots, never with floats.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Sequence

from .words import Histogram, histograms_through
from .zeta import BouquetParams, count_cyclic, power_sums

DEFAULT_GRID = tuple(Fraction(i, 2) for i in range(-8, 9))


def total_count(params: BouquetParams, l: int) -> int:
    """N(l): cyclically reduced words of length 1..l."""
    return sum(count_cyclic(params, m) for m in range(1, l + 1))


def moment(params: BouquetParams, k: int, l: int) -> Fraction:
    """M_k(X_l) = N(l)^-1 sum_{m<=l} (g/m)^(k/2) S_k(m), via the generating function."""
    if l < 1 or k < 0:
        raise ValueError("need l >= 1 and k >= 0")
    if k % 2:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    half = k // 2
    sums = power_sums(params, k, l).values()
    acc = sum(Fraction(params.g**half * s, m**half) for m, s in enumerate(sums, start=1))
    return acc / total_count(params, l)


def gaussian_moment(k: int) -> int:
    """E[Z^k] for a standard normal Z: k!/(2^(k/2) (k/2)!) for even k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k % 2:
        return 0
    return math.factorial(k) // (2 ** (k // 2) * math.factorial(k // 2))


def gaussian_cdf(x: float) -> float:
    """Phi(x) = erfc(-x/sqrt 2)/2; erfc keeps full relative accuracy in the lower tail."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def _isqrt_floor(r: Fraction) -> int:
    return math.isqrt(r.numerator // r.denominator)


def _isqrt_ceil(r: Fraction) -> int:
    s = _isqrt_floor(r)
    return s if s * s == r else s + 1


def max_atom_at_most(b: Fraction, m: int, g: int) -> int:
    """Largest integer v with sqrt(g/m) * v <= b."""
    r = b * b * m / g
    return _isqrt_floor(r) if b >= 0 else -_isqrt_ceil(r)


def min_atom_at_least(a: Fraction, m: int, g: int) -> int:
    """Smallest integer v with sqrt(g/m) * v >= a."""
    return -max_atom_at_most(-a, m, g)


@dataclass(frozen=True)
class DistributionTable:
    """Exact joint counts of (length m, log value v) for 1 <= m <= l."""

    params: BouquetParams
    l: int
    histograms: tuple[Histogram, ...]

    def __post_init__(self):
        values, cums = [], []
        for h in self.histograms:
            vs = sorted(h.counts)
            values.append(vs)
            cums.append([0] + list(accumulate(h.counts[v] for v in vs)))
        object.__setattr__(self, "_values", values)
        object.__setattr__(self, "_cums", cums)

    @property
    def total(self) -> int:
        return sum(h.total() for h in self.histograms)

    def atoms(self) -> Iterable[tuple[int, int, int]]:
        for m, h in enumerate(self.histograms, start=1):
            for v in sorted(h.counts):
                yield m, v, h.counts[v]

    def probability(self, m: int, v: int) -> Fraction:
        return Fraction(self.histograms[m - 1][v], self.total)

    def count_in(self, a, b, lengths: Sequence[int] | None = None) -> int:
        """Number of words with sqrt(g/m) * log_j in the closed interval [a, b]."""
        a, b = Fraction(a), Fraction(b)
        if a > b:
            return 0
        g = self.params.g
        out = 0
        for m in lengths or range(1, self.l + 1):
            vs, cum = self._values[m - 1], self._cums[m - 1]
            lo = bisect_left(vs, min_atom_at_least(a, m, g))
            hi = bisect_right(vs, max_atom_at_most(b, m, g))
            if hi > lo:
                out += cum[hi] - cum[lo]
        return out

    def interval_probability(self, a, b) -> Fraction:
        """P(X_l in [a, b]) over all lengths 1..l, endpoints included."""
        return Fraction(self.count_in(a, b), self.total)

    def conditional_probability(self, m: int, a, b) -> Fraction:
        """P(sqrt(g/m) log_j in [a, b]) among words of length exactly m."""
        return Fraction(self.count_in(a, b, [m]), self.histograms[m - 1].total())

    def moment(self, k: int) -> Fraction:
        if k % 2:
            # per-length odd sums vanish by v -> -v symmetry, so the moment is exactly 0
            if any(h.power_sum(k) for h in self.histograms):
                raise AssertionError(f"odd power sum k={k} did not vanish")
            return Fraction(0)
        g, half = self.params.g, k // 2
        s = sum(Fraction(c * v**k * g**half, m**half) for m, v, c in self.atoms())
        return s / self.total


def distribution(params: BouquetParams, l: int) -> DistributionTable:
    if l < 1:
        raise ValueError("l must be >= 1")
    return DistributionTable(params, l, histograms_through(params.n, params.j, l))


def gaussian_discrepancy(params: BouquetParams, l: int, grid: Sequence = DEFAULT_GRID) -> float:
    """max over consecutive grid cells [a, b] of |P(X_l in [a,b]) - (Phi(b) - Phi(a))|."""
    pts = [Fraction(x) for x in grid]
    if pts != sorted(pts):
        raise ValueError("grid must be sorted")
    table = distribution(params, l)
    return max(
        abs(float(table.interval_probability(a, b)) - (gaussian_cdf(float(b)) - gaussian_cdf(float(a))))
        for a, b in zip(pts, pts[1:])
    )


@dataclass(frozen=True)
class MomentRow:
    l: int
    k: int
    value: Fraction
    target: int

    @property
    def decimal(self) -> float:
        return float(self.value)

    @property
    def exact_deviation(self) -> Fraction:
        return abs(self.value - self.target)

    @property
    def deviation(self) -> float:
        return float(self.exact_deviation)

    @property
    def relative_deviation(self) -> float:
        return self.deviation / self.target if self.target else self.deviation


@dataclass(frozen=True)
class MomentReport:
    rows: tuple[MomentRow, ...]

    def row(self, k: int, l: int) -> MomentRow:
        return next(r for r in self.rows if r.k == k and r.l == l)

    def deviations(self, k: int) -> list[Fraction]:
        """Exact |M_k - target| in the order of ``lens``."""
        return [r.exact_deviation for r in self.rows if r.k == k]


def moment_convergence(params: BouquetParams, k_max: int, lens: Sequence[int]) -> MomentReport:
    rows = []
    for l in lens:
        for k in range(0, k_max + 1, 2):
            rows.append(MomentRow(l, k, moment(params, k, l), gaussian_moment(k)))
    return MomentReport(tuple(rows))
