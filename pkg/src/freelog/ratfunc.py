"""Exact univariate polynomials and rational functions over Q.

Everything is ``fractions.Fraction``; there is no floating point in here.
Rational functions are kept in canonical form: numerator and denominator
coprime, denominator monic.  Poles are only looked for at rational points the
caller names, which is all the bouquet generating functions need.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class ArithmeticDomainError(ArithmeticError):
    pass


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients constant term first, no trailing zeros (zero poly is ``()``)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def const(cls, c: Number) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = _poly(other)
        size = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-_poly(other))

    def __rsub__(self, other: Number) -> "Polynomial":
        return _poly(other) - self

    def __mul__(self, other: "Polynomial | Number") -> "Polynomial":
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = _poly(other)
        if not self or not other:
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result, base = Polynomial.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if not other:
            raise ArithmeticDomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv_lead = 1 / other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv_lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Polynomial":
        return Polynomial(c / self.lead for c in self.coeffs) if self else self

    def taylor_shift(self, p: Number) -> "Polynomial":
        """Coefficients of ``self(p + t)`` in ``t`` (Horner-style synthetic division)."""
        c = list(self.coeffs)
        size = len(c)
        for i in range(size):
            for j in range(size - 2, i - 1, -1):
                c[j] += p * c[j + 1]
        return Polynomial(c)

    def root_multiplicity(self, p: Number) -> int:
        if not self:
            raise ArithmeticDomainError("zero polynomial has every point as a root")
        return next(i for i, c in enumerate(self.taylor_shift(p).coeffs) if c)


def _poly(x: "Polynomial | Number") -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial.const(x)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean remainder sequence (gcd(0, 0) = 0)."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


U = Polynomial([0, 1])


@dataclass(frozen=True)
class RationalFunction:
    numerator: Polynomial
    denominator: Polynomial

    def __init__(self, numerator: "Polynomial | Number", denominator: "Polynomial | Number" = 1):
        num, den = _poly(numerator), _poly(denominator)
        if not den:
            raise ArithmeticDomainError("zero denominator")
        if not num:
            num, den = Polynomial(), Polynomial.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
            lead = den.lead
            num = Polynomial(c / lead for c in num.coeffs)
            den = Polynomial(c / lead for c in den.coeffs)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def of(cls, x: "RationalFunction | Polynomial | Number") -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else cls(x)

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def __add__(self, other) -> "RationalFunction":
        o = RationalFunction.of(other)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.of(other) - self

    def __mul__(self, other) -> "RationalFunction":
        o = RationalFunction.of(other)
        return RationalFunction(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = RationalFunction.of(other)
        if o.is_zero():
            raise ArithmeticDomainError("division by the zero function")
        return RationalFunction(self.numerator * o.denominator, self.denominator * o.numerator)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.of(other) / self

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return RationalFunction(1) / (self ** (-e))
        return RationalFunction(self.numerator**e, self.denominator**e)

    def derivative(self) -> "RationalFunction":
        p, q = self.numerator, self.denominator
        return RationalFunction(p.derivative() * q - p * q.derivative(), q * q)

    def __call__(self, x: Number) -> Fraction:
        d = self.denominator(x)
        if d == 0:
            raise ArithmeticDomainError(f"pole at {x}")
        return self.numerator(x) / d

    def series_coefficients(self, l: int) -> list[Fraction]:
        """Taylor coefficients c_0..c_l at u = 0.

        Uses the recurrence sum_i d_i c_{m-i} = p_m from ``den * f = num``.
        """
        den, num = self.denominator, self.numerator
        if den[0] == 0:
            raise ArithmeticDomainError("pole at u = 0; no Taylor expansion")
        inv = 1 / den[0]
        c: list[Fraction] = []
        for m in range(l + 1):
            acc = num[m]
            for i in range(1, min(m, den.degree) + 1):
                acc -= den.coeffs[i] * c[m - i]
            c.append(acc * inv)
        return c

    def pole_order(self, p: Number) -> int:
        return self.denominator.root_multiplicity(p)

    def singular_part_at(self, p: Number) -> "SingularPart":
        return singular_part_at(self, p)


@dataclass(frozen=True)
class SingularPart:
    """sum_k coefficients[k-1] / (u - pole)^k; empty when there is no pole."""

    pole: Fraction
    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def as_rational_function(self) -> RationalFunction:
        out = RationalFunction(0)
        base = U - self.pole
        for k, a in enumerate(self.coefficients, start=1):
            if a:
                out = out + RationalFunction(a, base**k)
        return out


def _series_quotient(num: Sequence[Fraction], den: Sequence[Fraction], terms: int) -> list[Fraction]:
    out: list[Fraction] = []
    for m in range(terms):
        acc = num[m] if m < len(num) else Fraction(0)
        for i in range(1, min(m, len(den) - 1) + 1):
            acc -= den[i] * out[m - i]
        out.append(acc / den[0])
    return out


def singular_part_at(f: RationalFunction, p: Number) -> SingularPart:
    """Exact singular part of ``f`` at the rational point ``p``.

    With K the multiplicity of p in the reduced denominator, h = (u-p)^K f is
    regular at p and a_{K-i} = h^(i)(p)/i!.  Those Taylor coefficients come
    from shifting numerator and cofactor to u = p + t and dividing as series.
    """
    p = Fraction(p)
    K = f.pole_order(p)
    if K == 0:
        return SingularPart(p, ())
    cofactor = f.denominator.divmod((U - p) ** K)[0]
    taylor = _series_quotient(
        f.numerator.taylor_shift(p).coeffs, cofactor.taylor_shift(p).coeffs, K
    )
    coeffs = tuple(reversed(taylor))
    part = SingularPart(p, coeffs)
    if (f - part.as_rational_function()).pole_order(p) != 0:
        raise AssertionError("singular part subtraction left a pole behind")
    return part


def rising_factorial(k: int, m: int) -> int:
    """(k)_m = k (k+1) ... (k+m-1), with (k)_0 = 1."""
    out = 1
    for i in range(m):
        out *= k + i
    return out


def pochhammer_series_coefficient(k: int, p: Number, m: int) -> Fraction:
    """Coefficient of u^m in (u - p)^(-k), p != 0.

    (u - p)^(-k) = (-1/p)^k sum_m (k)_m / m! * p^(-m) u^m; for p = 1 and
    p = 1/q this is (-1)^k (k)_m/m! and (-q)^k (k)_m q^m / m! respectively.
    """
    p = Fraction(p)
    if p == 0:
        raise ArithmeticDomainError("pole at 0 has no Taylor expansion at 0")
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    return (-1 / p) ** k * Fraction(rising_factorial(k, m), factorial(m)) / p**m
