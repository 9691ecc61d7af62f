"""Instance generators for the GF(2) property checks"""
from itertools import combinations, product

from .linalg import BitMatrix, Subspace


def random_matrix(rng, rows, cols):
    return BitMatrix(rows, cols, tuple(rng.getrandbits(cols) if cols else 0 for _ in range(rows)))


def random_symmetric_matrix(rng, n):
    data = [0] * n
    for i in range(n):
        for j in range(i, n):
            if rng.getrandbits(1):
                data[i] |= 1 << j
                data[j] |= 1 << i
    return BitMatrix(n, n, tuple(data))


def all_subspaces(n):
    """Every subspace of GF(2)^n, each produced once in canonical form"""
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            pivot_set = set(pivots)
            free_slots = [
                [j for j in range(p + 1, n) if j not in pivot_set]
                for p in pivots
            ]
            widths = [len(slots) for slots in free_slots]
            for fills in product(*(range(1 << w) for w in widths)):
                basis = []
                for p, slots, fill in zip(pivots, free_slots, fills):
                    v = 1 << p
                    for k_bit, j in enumerate(slots):
                        if fill >> k_bit & 1:
                            v |= 1 << j
                    basis.append(v)
                yield Subspace(n, tuple(basis))
