"""Twisted Ihara generating function of the bouquet of n loops.

For the one-vertex quotient the adjacency operator twisted by the character
exp(i eps log_j) is the scalar A(eps) = 2(n-1) + 2 cos(eps), and

    G(u, eps) = 2 g u^2 / (1 - u^2) + (u A(eps) - 2 q u^2) / (1 - u A(eps) + q u^2)

with q = 2n - 1, g = n - 1.  Its k-th eps-derivative at 0 has u^m coefficient
i^k S_k(m), where S_k(m) is the sum of log_j^k over cyclically reduced words
of length m.  Odd k vanish identically, so only the real sign (-1)^(k/2) is
ever carried and no complex numbers appear.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .ratfunc import ArithmeticDomainError, Polynomial, RationalFunction, U, singular_part_at

MAX_CHEAP_K = 12


@dataclass(frozen=True)
class BouquetParams:
    n: int
    j: int = 1
    q: int = field(init=False)
    g: int = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank must be >= 2, got {self.n}")
        if not 1 <= self.j <= self.n:
            raise ValueError(f"generator index {self.j} out of range 1..{self.n}")
        object.__setattr__(self, "q", 2 * self.n - 1)
        object.__setattr__(self, "g", self.n - 1)


def A_derivative(n: int, l: int) -> int:
    """l-th derivative at eps = 0 of A(eps) = 2(n-1) + 2 cos(eps)."""
    if l < 0:
        raise ValueError("derivative order must be >= 0")
    if l == 0:
        return 2 * n
    if l % 2:
        return 0
    return 2 * (-1) ** (l // 2)


def D0(params: BouquetParams) -> Polynomial:
    """1 - u A(0) + q u^2, which factors as (1 - q u)(1 - u)."""
    return Polynomial([1, -A_derivative(params.n, 0), params.q])


@lru_cache(maxsize=None)
def _inverse_D_derivative(n: int, l: int) -> RationalFunction:
    params = BouquetParams(n)
    inv_D0 = RationalFunction(1, D0(params))
    if l == 0:
        return inv_D0
    if l % 2:
        return RationalFunction(0)
    acc = RationalFunction(0)
    for r in range(l):
        a = A_derivative(n, l - r)
        if a and r % 2 == 0:
            acc = acc + comb(l, r) * a * U * _inverse_D_derivative(n, r)
    return inv_D0 * acc


def inverse_D_derivative(params: BouquetParams, l: int) -> RationalFunction:
    """l-th eps-derivative at 0 of (1 - u A(eps) + q u^2)^(-1).

    Built from differentiating D * D^(-1) = 1 l times:
    D_l = D_0^(-1) * sum_{r<l} C(l, r) A^(l-r)(0) u D_r.
    """
    if l < 0:
        raise ValueError("derivative order must be >= 0")
    return _inverse_D_derivative(params.n, l)


def G0(params: BouquetParams) -> RationalFunction:
    q, g = params.q, params.g
    A0 = A_derivative(params.n, 0)
    return RationalFunction(Polynomial([0, 0, 2 * g]), Polynomial([1, 0, -1])) + RationalFunction(
        Polynomial([0, A0, -2 * q]), D0(params)
    )


@lru_cache(maxsize=None)
def _G_k(n: int, k: int) -> RationalFunction:
    params = BouquetParams(n)
    if k % 2:
        return RationalFunction(0)
    acc = RationalFunction(0)
    for l in range(k + 1):
        if (k - l) % 2:
            continue
        front = Polynomial([0, A_derivative(n, l)] + ([-2 * params.q] if l == 0 else []))
        if front:
            acc = acc + comb(k, l) * RationalFunction(front) * _inverse_D_derivative(n, k - l)
    return acc


def G_k(params: BouquetParams, k: int) -> RationalFunction:
    """k-th eps-derivative of G(u, eps) at eps = 0 (k >= 1; k = 0 gives G0).

    Leibniz over the two factors of the eps-dependent term; the 2gu^2/(1-u^2)
    term is constant in eps and drops out.
    """
    if k < 0:
        raise ValueError("order must be >= 0")
    if k == 0:
        return G0(params)
    if k > MAX_CHEAP_K:
        warnings.warn(f"G_k with k={k} > {MAX_CHEAP_K}: numerator degree grows with k", stacklevel=2)
    return _G_k(params.n, k)


class ConsistencyError(AssertionError):
    """An identity that must hold for a correct build did not."""


@dataclass(frozen=True)
class PowerSumTable:
    k: int
    entries: tuple[tuple[int, int], ...]

    def values(self) -> list[int]:
        return [s for _, s in self.entries]

    def __getitem__(self, m: int) -> int:
        return self.entries[m - 1][1]


@lru_cache(maxsize=64)
def _power_sums(n: int, k: int, m_max: int) -> tuple[int, ...]:
    params = BouquetParams(n)
    if k % 2:
        return (0,) * m_max
    coeffs = G_k(params, k).series_coefficients(m_max)
    sign = (-1) ** (k // 2)
    out = []
    for m in range(1, m_max + 1):
        c = sign * coeffs[m]
        if c.denominator != 1:
            raise ConsistencyError(f"S_{k}({m}) = {c} is not an integer")
        out.append(int(c))
    return tuple(out)


def power_sums(params: BouquetParams, k: int, m_max: int) -> PowerSumTable:
    """S_k(m) for m = 1..m_max, read off as (-1)^(k/2) [u^m] G^(k)(u).

    The bouquet is symmetric under relabelling generators, so ``params.j``
    does not change the table.
    """
    if k < 0 or m_max < 1:
        raise ValueError("need k >= 0 and m_max >= 1")
    vals = _power_sums(params.n, k, m_max)
    return PowerSumTable(k, tuple(enumerate(vals, start=1)))


def count_cyclic(params: BouquetParams, m: int) -> int:
    """Number of cyclically reduced words of length m (closed form)."""
    if m < 1:
        raise ValueError("length must be >= 1")
    return params.q**m + 1 + params.g * (1 + (-1) ** m)


def predicted_leading(params: BouquetParams, k: int) -> Fraction:
    """-k! / (q^(k/2+1) (q-1)^(k/2)): leading Laurent coefficient of G^(k) at 1/q."""
    q = params.q
    return Fraction(-factorial(k), q ** (k // 2 + 1) * (q - 1) ** (k // 2))


@dataclass(frozen=True)
class LaurentCheck:
    k: int
    order: int
    leading: Fraction
    predicted_order: int
    predicted_leading: Fraction

    @property
    def matches(self) -> bool:
        return self.order == self.predicted_order and self.leading == self.predicted_leading


def laurent_check(params: BouquetParams, k: int) -> LaurentCheck:
    """Compare the singular part of G^(k) at u = 1/q with the closed form."""
    if k < 2 or k % 2:
        raise ValueError("k must be even and >= 2")
    sp = singular_part_at(G_k(params, k), Fraction(1, params.q))
    return LaurentCheck(k, sp.order, sp.leading, k // 2 + 1, predicted_leading(params, k))


def poles(f: RationalFunction, candidates) -> dict[Fraction, int]:
    """Pole orders of ``f`` among the candidate points (nonzero orders only)."""
    out = {}
    for p in candidates:
        K = f.pole_order(Fraction(p))
        if K:
            out[Fraction(p)] = K
    return out


def candidate_poles(params: BouquetParams) -> list[Fraction]:
    return [Fraction(1, params.q), Fraction(1), Fraction(-1)]


def zeta_function(params: BouquetParams) -> RationalFunction:
    """Z(u) = (1 - u^2)^(-g) (1 - u A(0) + q u^2)^(-1), trivial character."""
    return RationalFunction(1, Polynomial([1, 0, -1]) ** params.g * D0(params))


def ihara_zeta(params: BouquetParams, u) -> Fraction:
    u = Fraction(u)
    den = (1 - u * u) ** params.g * D0(params)(u)
    if den == 0:
        raise ArithmeticDomainError(f"u = {u} is a pole of the zeta function")
    return 1 / den


def log_derivative(f: RationalFunction) -> RationalFunction:
    """u f'(u) / f(u)."""
    return U * f.derivative() / f
