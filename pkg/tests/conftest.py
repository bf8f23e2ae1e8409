from itertools import product

import pytest


def brute_force_cyclic(n, m):
    """All cyclically reduced words of length m as (generator, sign) tuples.

    Independent of the package: filters every one of the (2n)^m letter tuples.
    """
    alphabet = [(g, s) for g in range(1, n + 1) for s in (1, -1)]
    out = []
    for w in product(alphabet, repeat=m):
        if all(not (w[i][0] == w[(i + 1) % m][0] and w[i][1] == -w[(i + 1) % m][1]) for i in range(m)):
            out.append(w)
    return out


def brute_force_logs(n, m, j=1):
    return [sum(s for g, s in w if g == j) for w in brute_force_cyclic(n, m)]


# Frozen from brute_force_cyclic: S_k(m) = sum of log_1^k over cyclic words of length m.
BRUTE_POWER_SUMS = {
    (2, 2): [2, 16, 78, 320, 1210, 4368, 15302, 52480],
    (2, 4): [2, 40, 366, 2336, 12250, 57000, 245126, 997504],
    (2, 6): [2, 136, 2238, 21920, 160810, 981768, 5287142, 26020480],
    (3, 2): [2, 24, 186, 1248, 7810],
    (3, 4): [2, 48, 618, 5952, 48850],
    (3, 6): [2, 144, 3066, 42048, 454210],
}
BRUTE_COUNTS = {2: [4, 12, 28, 84, 244, 732, 2188, 6564], 3: [6, 30, 126, 630, 3126]}


@pytest.fixture
def brute():
    return brute_force_cyclic
