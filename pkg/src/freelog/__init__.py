"""Exact counts, power sums and the Gaussian limit of discrete logarithms
of cyclically reduced words in free groups."""

from .ratfunc import Polynomial, RationalFunction, SingularPart, singular_part_at
from .words import CyclicWord, Letter, ReducedWord, cyclic_reduce, log_j, reduce
from .zeta import BouquetParams, G0, G_k, count_cyclic, power_sums

__all__ = [
    "BouquetParams",
    "CyclicWord",
    "G0",
    "G_k",
    "Letter",
    "Polynomial",
    "RationalFunction",
    "ReducedWord",
    "SingularPart",
    "count_cyclic",
    "cyclic_reduce",
    "log_j",
    "power_sums",
    "reduce",
    "singular_part_at",
]
