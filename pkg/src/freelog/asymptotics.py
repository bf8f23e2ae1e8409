"""Partial sums of series coefficients against their pole-driven main terms.

If f has radius of convergence 1/q and its only poles in the closed unit disc
are u = 1/q (order K, top coefficient a_K) and u = 1, then

    sum_{m<=l} c_m ~ (-q)^K a_K / ((q-1)(K-1)!) * q^(l+1) l^(K-1).

Everything here is exact: partial sums are big-integer/Fraction sums and the
main terms are rational for rational q, so ratios are exact Fractions that
are only rendered to decimals at the edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import factorial

from .ratfunc import SingularPart, rising_factorial, singular_part_at
from .zeta import BouquetParams, G_k, power_sums


def to_decimal(x: Fraction, digits: int = 12) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(x.numerator) / Decimal(x.denominator)


def pochhammer_term(k: int, m: int, q=1) -> Fraction:
    """a(k, m, q) = (k)_m q^m / m!."""
    return Fraction(rising_factorial(k, m), factorial(m)) * Fraction(q) ** m


def pochhammer_sum(k: int, l: int, q=1, weighted: bool = True) -> Fraction:
    """sum_{m=0}^{l} (k)_m/m! (times q^m if weighted)."""
    if k < 1 or l < 0:
        raise ValueError("need k >= 1 and l >= 0")
    q = Fraction(q) if weighted else Fraction(1)
    if weighted and q <= 1:
        raise ValueError("weighted sums need q > 1")
    total, term = Fraction(0), Fraction(1)
    for m in range(l + 1):
        if m:
            # (k)_m/m! = (k)_{m-1}/(m-1)! * (k+m-1)/m
            term = term * (k + m - 1) / m * q
        total += term
    return total


def pochhammer_asymptotic(k: int, l: int, q=1, weighted: bool = True) -> Fraction:
    """Main term: l^k/k! unweighted, q^(l+1) l^(k-1) / ((q-1)(k-1)!) weighted."""
    if not weighted:
        return Fraction(l**k, factorial(k))
    q = Fraction(q)
    return q ** (l + 1) * l ** (k - 1) / ((q - 1) * factorial(k - 1))


def main_term_coefficient(singular: SingularPart) -> Fraction:
    """(-q)^K a_K / ((q-1)(K-1)!) for a pole at 1/q; 0 for an empty part."""
    if singular.order == 0:
        return Fraction(0)
    q = 1 / singular.pole
    K = singular.order
    return (-q) ** K * singular.leading / ((q - 1) * factorial(K - 1))


def partial_sum_main_term(singular: SingularPart, l: int) -> Fraction:
    """Dominant part of sum_{m<=l} c_m implied by the singular part at 1/q."""
    if singular.order == 0:
        return Fraction(0)
    q = 1 / singular.pole
    return main_term_coefficient(singular) * q ** (l + 1) * Fraction(l) ** (singular.order - 1)


def boundary_contribution(singular: SingularPart, l: int) -> Fraction:
    """Exact sum_{m<=l} of the Taylor coefficients of a singular part at a unit-circle pole.

    These are the b_k terms: polynomial in l, no q^l growth, so they are
    reported next to the main term rather than folded into it.
    """
    p = singular.pole
    total = Fraction(0)
    for k, b in enumerate(singular.coefficients, start=1):
        if b:
            # coefficient of u^m in (u - p)^(-k) is (-1/p)^k (k)_m/m! p^(-m)
            s = sum(pochhammer_term(k, m, 1 / p) for m in range(l + 1))
            total += b * (-1 / p) ** k * s
    return total


def theorem_main_term(params: BouquetParams, k: int, l: int) -> Fraction:
    """k!/(k/2)! * q^(l+1) l^(k/2) / (q-1)^(k/2+1) for even k, 0 for odd k."""
    if k % 2:
        return Fraction(0)
    q = params.q
    return Fraction(factorial(k) * q ** (l + 1) * l ** (k // 2), factorial(k // 2) * (q - 1) ** (k // 2 + 1))


@dataclass(frozen=True)
class PartialSumPrediction:
    l: int
    main_term: Fraction
    exact_value: int
    ratio: Fraction | None

    @property
    def deviation(self) -> Fraction | None:
        return None if self.ratio is None else abs(self.ratio - 1)


def powersum_partial_check(params: BouquetParams, k: int, l: int) -> PartialSumPrediction:
    """Exact sum_{m=1}^{l} S_k(m) against the closed-form main term."""
    if k < 0 or l < 1:
        raise ValueError("need k >= 0 and l >= 1")
    exact = sum(power_sums(params, k, l).values())
    main = theorem_main_term(params, k, l)
    if k == 0:
        main = Fraction(params.q ** (l + 1), params.q - 1)
    ratio = Fraction(exact) / main if main else None
    return PartialSumPrediction(l, main, exact, ratio)


def signed_singular_part(params: BouquetParams, k: int) -> SingularPart:
    """Singular part at 1/q of (-1)^(k/2) G^(k), whose coefficients are S_k(m)."""
    sp = singular_part_at(G_k(params, k), Fraction(1, params.q))
    sign = (-1) ** (k // 2)
    return SingularPart(sp.pole, tuple(sign * a for a in sp.coefficients))
