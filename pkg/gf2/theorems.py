"""Executable properties of the GF(2) kernel, used by tests and the verify runner"""
from itertools import combinations

from .linalg import (
    BitMatrix, BitVector, Subspace, echelon_basis, is_nonsingular, mask_of, nullity,
    nullspace, orthogonal_complement, principal_submatrix, rank, symmetrize_nullspace,
)


def brute_force_nullspace(m):
    """Nullspace by trying all 2^cols vectors"""
    return Subspace.span(
        m.cols,
        [x for x in range(1 << m.cols) if m.apply(BitVector(m.cols, x)).bits == 0],
    )


def rank_plus_nullity(m):
    return rank(m) + nullity(m) == m.cols


def nullspace_is_annihilated(m):
    ker = nullspace(m)
    return ker.dim == nullity(m) and all(m.apply(k).bits == 0 for k in ker.basis_vectors())


def complement_is_involution(w):
    comp = orthogonal_complement(w)
    if comp.dim != w.ambient_dim - w.dim:
        return False
    if any(BitVector(w.ambient_dim, a).dot(BitVector(w.ambient_dim, b)) for a in w.basis for b in comp.basis):
        return False
    return orthogonal_complement(comp) == w


def symmetrization_keeps_nullspace(a):
    b = symmetrize_nullspace(a)
    return b.is_symmetric() and b.rows == a.cols and brute_force_nullspace(b) == brute_force_nullspace(a)


def strong_principal_minors(m):
    """
    For symmetric ``m`` of rank r: a column set S of size r is independent
    exactly when the principal submatrix on S is nonsingular.
    """
    r = rank(m)
    for s in combinations(range(m.cols), r):
        mask = mask_of(s)
        independent = len(echelon_basis([row & mask for row in m.data])) == r
        if independent != is_nonsingular(principal_submatrix(m, s)):
            return False
    return True


def zero_by_zero_is_nonsingular():
    empty = BitMatrix(0, 0)
    return is_nonsingular(empty) and rank(empty) == 0 and nullity(empty) == 0
