"""Word combinatorics in the free group F(A_1, ..., A_n).

Letters are indexed in the fixed order A_1, A_1^-1, A_2, A_2^-1, ..., so the
inverse of letter index ``i`` is ``i ^ 1``.  That order is used both for
lexicographic enumeration and for rows/columns of the transfer matrix.

Cyclically reduced words of length m are in bijection with closed
non-backtracking walks of length m on the one-vertex bouquet of n loops, and
their number is ``trace(M^m)`` where ``M`` is the 2n x 2n non-cancellation
matrix.  The same matrix with entries weighted by a formal variable ``t``
(``t`` for A_j, ``1/t`` for A_j^-1) gives the exact distribution of the signed
count log_j at polynomial cost.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

import numpy as np

# exhaustive enumeration ceiling, (2n-1)^m words; equals m <= 16 at n = 2
_DEFAULT_CAP_WORDS = 3**16


class WordDomainError(ValueError):
    """Raised for letters, generator indices or words outside the valid domain."""


class Letter(NamedTuple):
    generator: int
    sign: int

    @property
    def index(self) -> int:
        return 2 * (self.generator - 1) + (0 if self.sign > 0 else 1)

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return f"a{self.generator}" + ("'" if self.sign < 0 else "")

    @classmethod
    def from_index(cls, i: int) -> "Letter":
        return cls(i // 2 + 1, 1 if i % 2 == 0 else -1)


def letter(token: str) -> Letter:
    """Parse ``a3`` or ``a3'`` into a Letter."""
    tok = token.strip()
    sign = 1
    if tok.endswith("'"):
        sign, tok = -1, tok[:-1]
    if len(tok) < 2 or tok[0] != "a" or not tok[1:].isdigit():
        raise WordDomainError(f"cannot parse letter {token!r}")
    return Letter(int(tok[1:]), sign)


def _check_letter(x: Letter, n: int) -> None:
    if not 1 <= x.generator <= n or x.sign not in (1, -1):
        raise WordDomainError(f"letter {x!r} not in the rank-{n} alphabet")


def _cancels(x: Letter, y: Letter) -> bool:
    return x.generator == y.generator and x.sign == -y.sign


@dataclass(frozen=True)
class ReducedWord:
    """A freely reduced word over the rank-``n`` alphabet."""

    letters: tuple[Letter, ...]
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise WordDomainError(f"rank must be >= 2, got {self.n}")
        for x in self.letters:
            _check_letter(x, self.n)
        for x, y in zip(self.letters, self.letters[1:]):
            if _cancels(x, y):
                raise WordDomainError(f"{self} is not reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    @property
    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or not _cancels(self.letters[-1], self.letters[0])


@dataclass(frozen=True)
class CyclicWord(ReducedWord):
    """A cyclically reduced word: last and first letters do not cancel either."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_cyclically_reduced:
            raise WordDomainError(f"{self} is not cyclically reduced")


def parse_word(text: str, n: int) -> ReducedWord:
    """Parse a space-separated letter string and freely reduce it."""
    return reduce([letter(t) for t in text.split()], n)


def reduce(letters: Iterable[Letter], n: int) -> ReducedWord:
    """Free reduction with a stack; the result is the unique reduced form."""
    stack: list[Letter] = []
    for x in letters:
        x = Letter(*x)
        _check_letter(x, n)
        if stack and _cancels(stack[-1], x):
            stack.pop()
        else:
            stack.append(x)
    return ReducedWord(tuple(stack), n)


def cyclic_reduce(w: ReducedWord) -> CyclicWord:
    letters = w.letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and _cancels(letters[lo], letters[hi - 1]):
        lo += 1
        hi -= 1
    return CyclicWord(letters[lo:hi], w.n)


def log_j(w: ReducedWord, j: int) -> int:
    """Signed number of occurrences of generator ``j`` in ``w``."""
    if not 1 <= j <= w.n:
        raise WordDomainError(f"generator index {j} out of range 1..{w.n}")
    return sum(x.sign for x in w.letters if x.generator == j)


@dataclass(frozen=True)
class NormalizedLog:
    """sqrt(radicand) * numerator, with radicand = (n-1)/wl kept exact."""

    numerator: int
    radicand: Fraction

    @property
    def value(self) -> float:
        return self.numerator * math.sqrt(self.radicand)

    def __float__(self) -> float:
        return self.value


def normalized_log(w: CyclicWord, j: int) -> NormalizedLog:
    if len(w) == 0:
        raise WordDomainError("normalized log undefined for the empty word")
    return NormalizedLog(log_j(w, j), Fraction(w.n - 1, len(w)))


def _check_rank(n: int) -> None:
    if n < 2:
        raise WordDomainError(f"rank must be >= 2, got {n}")


def enumerate_cyclic(n: int, m: int, *, allow_large: bool = False) -> Iterator[CyclicWord]:
    """Yield every cyclically reduced word of length ``m`` once.

    Depth-first over the letter order A_1, A_1^-1, ..., A_n, A_n^-1, so the
    output is lexicographic in letter indices.  Refuses more than 3**16 words
    (the m <= 16 cap at n = 2) unless ``allow_large`` is set.
    """
    _check_rank(n)
    if m <= 0:
        return
    if not allow_large and (2 * n - 1) ** m > _DEFAULT_CAP_WORDS:
        raise WordDomainError(
            f"enumeration of length {m} at rank {n} exceeds the cap; pass allow_large=True"
        )
    alphabet = [Letter.from_index(i) for i in range(2 * n)]
    path = [0] * m

    def walk(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == m:
            if m == 1 or path[-1] != path[0] ^ 1:
                yield tuple(path)
            return
        for i in range(2 * n):
            if depth and i == path[depth - 1] ^ 1:
                continue
            path[depth] = i
            yield from walk(depth + 1)

    for idx in walk(0):
        yield CyclicWord(tuple(alphabet[i] for i in idx), n)


def transfer_matrix(n: int) -> np.ndarray:
    """0/1 matrix with M[x, y] = 1 unless y is the inverse of x."""
    _check_rank(n)
    size = 2 * n
    M = np.ones((size, size), dtype=object)
    for x in range(size):
        M[x, x ^ 1] = 0
    return M


def matrix_power_trace(M: np.ndarray, m: int) -> int:
    P = np.identity(M.shape[0], dtype=object)
    for _ in range(m):
        P = P.dot(M)
    return int(sum(P[i, i] for i in range(M.shape[0])))


@dataclass(frozen=True)
class Histogram:
    """Exact counts of log_j values over cyclically reduced words of one length."""

    counts: Mapping[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def power_sum(self, k: int) -> int:
        return sum(c * v**k for v, c in self.counts.items())

    def is_symmetric(self) -> bool:
        return all(self.counts.get(-v, 0) == c for v, c in self.counts.items())

    def __getitem__(self, v: int) -> int:
        return self.counts.get(v, 0)


@lru_cache(maxsize=32)
def _histograms(n: int, j: int, l: int) -> tuple[Histogram, ...]:
    # P[x, y, :] holds the Laurent polynomial (M_t^m)[x, y], exponent e stored at e + l.
    size = 2 * n
    a, ainv = 2 * (j - 1), 2 * (j - 1) + 1
    width = 2 * l + 1
    P = np.zeros((size, size, width), dtype=object)
    for x in range(size):
        P[x, x, l] = 1
    inv = [y ^ 1 for y in range(size)]
    out = []
    for _ in range(l):
        # (P M_t)[x, y] = w(y) * (sum_z P[x, z] - P[x, inv(y)])
        Q = P.sum(axis=1)[:, None, :] - P[:, inv, :]
        Q[:, a, :] = np.roll(Q[:, a, :], 1, axis=-1)
        Q[:, ainv, :] = np.roll(Q[:, ainv, :], -1, axis=-1)
        P = Q
        trace = sum(P[x, x, :] for x in range(size))
        out.append(
            Histogram({e - l: int(c) for e, c in enumerate(trace) if c})
        )
    return tuple(out)


def histograms_through(n: int, j: int, l: int) -> tuple[Histogram, ...]:
    """Histograms for every length 1..l; element ``m - 1`` is length ``m``."""
    _check_rank(n)
    if not 1 <= j <= n:
        raise WordDomainError(f"generator index {j} out of range 1..{n}")
    if l <= 0:
        return ()
    return _histograms(n, j, l)


def histogram_at_length(n: int, j: int, m: int) -> Histogram:
    if m < 1:
        raise WordDomainError("length must be >= 1")
    return histograms_through(n, j, m)[m - 1]


class UniformSampler:
    """Exact uniform sampler for cyclically reduced words of length ``m``.

    First letter x0 is drawn with weight (M^m)[x0, x0]; each later letter y
    after x is drawn with weight M[x, y] * (M^r)[y, x0], where r counts the
    steps left to close the walk.  All weights are exact integers.
    """

    def __init__(self, n: int, m: int):
        _check_rank(n)
        if m < 1:
            raise WordDomainError("length must be >= 1")
        self.n, self.m = n, m
        M = transfer_matrix(n)
        powers = [np.identity(2 * n, dtype=object)]
        for _ in range(m):
            powers.append(powers[-1].dot(M))
        self._M = M
        self._powers = powers
        self._alphabet = [Letter.from_index(i) for i in range(2 * n)]

    @staticmethod
    def _pick(rng: random.Random, weights: Sequence[int]) -> int:
        r = rng.randrange(sum(weights))
        for i, w in enumerate(weights):
            if r < w:
                return i
            r -= w
        raise AssertionError("unreachable")

    def sample(self, rng: random.Random) -> CyclicWord:
        size, m = 2 * self.n, self.m
        Pm = self._powers[m]
        x0 = self._pick(rng, [Pm[x, x] for x in range(size)])
        path = [x0]
        for pos in range(1, m):
            rest = self._powers[m - pos]
            x = path[-1]
            path.append(self._pick(rng, [self._M[x, y] * rest[y, x0] for y in range(size)]))
        return CyclicWord(tuple(self._alphabet[i] for i in path), self.n)


def sample_uniform(n: int, m: int, seed: int) -> CyclicWord:
    return UniformSampler(n, m).sample(random.Random(seed))


def sample_many(n: int, m: int, count: int, seed: int) -> list[CyclicWord]:
    sampler = UniformSampler(n, m)
    rng = random.Random(seed)
    return [sampler.sample(rng) for _ in range(count)]
