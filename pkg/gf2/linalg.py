"""
Bit-packed linear algebra over GF(2).

A vector over GF(2)^n is a Python int whose bit ``1 << i`` is coordinate ``i``;
a matrix keeps one such int per row. Subspaces are stored through their reduced
row echelon basis, where the pivot of a basis vector is its lowest set bit, so
two equal subspaces always compare equal field by field.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from matroid_lab.exceptions import DimensionMismatchError, check_gate

logger = logging.getLogger(__name__)


def popcount(bits):
    return bin(bits).count('1')


def parity(bits):
    return popcount(bits) & 1


def bit_positions(bits):
    """Yield the indices of the set bits of ``bits`` in ascending order"""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def mask_of(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def compress(bits, keep):
    """Re-index ``bits`` so that position ``keep[k]`` becomes position ``k``"""
    out = 0
    for k, position in enumerate(keep):
        if bits >> position & 1:
            out |= 1 << k
    return out


def expand(bits, keep):
    """Inverse of :func:`compress`"""
    out = 0
    for k, position in enumerate(keep):
        if bits >> k & 1:
            out |= 1 << position
    return out


def gray_code_subsets(n):
    """Yield every subset mask of an n-set, consecutive masks differing in one bit"""
    for i in range(1 << n):
        yield i ^ (i >> 1)


def _extend(basis, v):
    """``basis`` (distinct leading bits, highest first) with ``v`` added"""
    for b in basis:
        v = min(v, v ^ b)
    if not v:
        return basis
    return tuple(sorted(basis + (v,), reverse=True))


def gray_code_ranks(choices):
    """
    Yield ``(mask, rank)`` for every subset mask, in :func:`gray_code_subsets` order.

    ``choices[k]`` is the pair ``(absent, present)`` of vectors standing for
    position k outside and inside the subset; rank is that of the chosen
    vectors. The walk follows the reflected Gray-code tree, so every subset
    costs one reduction against its parent's basis.
    """
    def walk(k, mask, basis, reflected):
        if k < 0:
            yield mask, len(basis)
            return
        absent, present = choices[k]
        for bit in ((1, 0) if reflected else (0, 1)):
            if bit:
                yield from walk(k - 1, mask | 1 << k, _extend(basis, present), not reflected)
            else:
                yield from walk(k - 1, mask, _extend(basis, absent), reflected)

    yield from walk(len(choices) - 1, 0, (), False)


def principal_nullities(a):
    """
    Yield ``(mask, nullity of a[mask])`` for every principal submatrix of the
    symmetric matrix ``a``, in Gray-code order.

    a[S] is singular exactly as far as the columns a_k (k in S) together with
    the unit vectors e_k (k not in S) fall short of rank n.
    """
    n = a.rows
    for mask, r in gray_code_ranks([(1 << k, a.data[k]) for k in range(n)]):
        yield mask, n - r


def echelon_basis(vectors):
    """Reduced echelon basis of the span of ``vectors``, sorted by pivot"""
    basis = {}
    for v in vectors:
        for pivot, b in basis.items():
            if v & pivot:
                v ^= b
        if not v:
            continue
        pivot = v & -v
        for q, b in basis.items():
            if b & pivot:
                basis[q] = b ^ v
        basis[pivot] = v
    return tuple(basis[p] for p in sorted(basis))


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0 or self.bits < 0 or self.bits >> self.length:
            raise DimensionMismatchError(
                f"bits {self.bits:b} do not fit a vector of length {self.length}"
            )

    @classmethod
    def from_entries(cls, entries):
        entries = list(entries)
        return cls(len(entries), mask_of(i for i, e in enumerate(entries) if e))

    def __xor__(self, other):
        if self.length != other.length:
            raise DimensionMismatchError(
                f"cannot add vectors of lengths {self.length} and {other.length}"
            )
        return BitVector(self.length, self.bits ^ other.bits)

    def __getitem__(self, i):
        if not 0 <= i < self.length:
            raise IndexError(i)
        return self.bits >> i & 1

    def __len__(self):
        return self.length

    def dot(self, other):
        return parity(self.bits & other.bits)

    @property
    def support(self):
        return tuple(bit_positions(self.bits))

    @property
    def weight(self):
        return popcount(self.bits)

    def to_tuple(self):
        return tuple(self.bits >> i & 1 for i in range(self.length))

    def __str__(self):
        return ''.join(str(e) for e in self.to_tuple())


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple = ()

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise DimensionMismatchError(f"expected {self.rows} rows, got {len(self.data)}")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise DimensionMismatchError(f"row {r:b} does not fit {self.cols} columns")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError(f"row of length {len(r)} in a matrix with {cols} columns")
        return cls(len(rows), cols, tuple(mask_of(j for j, e in enumerate(r) if e) for r in rows))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i, j):
        return self.data[i] >> j & 1

    def row(self, i):
        return BitVector(self.cols, self.data[i])

    def column(self, j):
        return BitVector(self.rows, mask_of(i for i, r in enumerate(self.data) if r >> j & 1))

    def transpose(self):
        return BitMatrix(self.cols, self.rows, tuple(self.column(j).bits for j in range(self.cols)))

    def apply(self, vector):
        """Matrix-vector product ``self @ vector``"""
        if vector.length != self.cols:
            raise DimensionMismatchError(f"vector of length {vector.length} against {self.cols} columns")
        return BitVector(self.rows, mask_of(i for i, r in enumerate(self.data) if parity(r & vector.bits)))

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and self == self.transpose()

    def with_entry(self, i, j, value):
        data = list(self.data)
        if value:
            data[i] |= 1 << j
        else:
            data[i] &= ~(1 << j)
        return BitMatrix(self.rows, self.cols, tuple(data))

    def to_lists(self):
        return [[r >> j & 1 for j in range(self.cols)] for r in self.data]

    def __str__(self):
        return '\n'.join(' '.join(str(e) for e in row) for row in self.to_lists())


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^ambient_dim held by its canonical echelon basis"""

    ambient_dim: int
    basis: tuple = ()

    def __post_init__(self):
        previous = 0
        for b in self.basis:
            if b <= 0 or b >> self.ambient_dim:
                raise DimensionMismatchError(f"basis vector {b:b} outside GF(2)^{self.ambient_dim}")
            pivot = b & -b
            if pivot <= previous:
                raise DimensionMismatchError("basis pivots must be strictly increasing")
            previous = pivot
        pivots = mask_of(p.bit_length() - 1 for p in self.pivots)
        for b in self.basis:
            if popcount(b & pivots) != 1:
                raise DimensionMismatchError("basis is not in reduced echelon form")

    @classmethod
    def span(cls, ambient_dim, vectors=()):
        bits = [v.bits if isinstance(v, BitVector) else v for v in vectors]
        return cls(ambient_dim, echelon_basis(bits))

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, tuple(1 << i for i in range(ambient_dim)))

    @property
    def dim(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(b & -b for b in self.basis)

    @property
    def support(self):
        """Mask of coordinates on which some vector of the subspace is nonzero"""
        out = 0
        for b in self.basis:
            out |= b
        return out

    def contains(self, v):
        if isinstance(v, BitVector):
            v = v.bits
        for b in self.basis:
            if v & (b & -b):
                v ^= b
        return v == 0

    __contains__ = contains

    def issubspace(self, other):
        return self.ambient_dim == other.ambient_dim and all(other.contains(b) for b in self.basis)

    def __le__(self, other):
        return self.issubspace(other)

    def __lt__(self, other):
        return self.issubspace(other) and self.dim < other.dim

    def __add__(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("subspaces live in different ambient spaces")
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("subspaces live in different ambient spaces")
        # W1 ∩ W2 = (W1⊥ + W2⊥)⊥
        return orthogonal_complement(orthogonal_complement(self) + orthogonal_complement(other))

    def avoiding(self, mask):
        """Vectors of the subspace that vanish on every coordinate in ``mask``"""
        working = list(self.basis)
        for c in bit_positions(mask):
            bit = 1 << c
            chosen = next((v for v in working if v & bit), None)
            if chosen is None:
                continue
            working = [v ^ chosen if v & bit else v for v in working if v is not chosen]
        return Subspace.span(self.ambient_dim, working)

    def drop_coordinates(self, mask):
        """Project away the coordinates in ``mask``, shrinking the ambient space"""
        keep = [i for i in range(self.ambient_dim) if not mask >> i & 1]
        return Subspace.span(len(keep), [compress(b, keep) for b in self.basis])

    def embed(self, ambient_dim, keep):
        """Place this subspace on coordinates ``keep`` of a larger ambient space"""
        if len(keep) != self.ambient_dim:
            raise DimensionMismatchError("coordinate list does not match the ambient dimension")
        return Subspace.span(ambient_dim, [expand(b, keep) for b in self.basis])

    def permuted(self, order):
        """Coordinate ``k`` of the result is coordinate ``order[k]`` of this subspace"""
        if sorted(order) != list(range(self.ambient_dim)):
            raise DimensionMismatchError("order is not a permutation of the coordinates")
        return Subspace.span(self.ambient_dim, [compress(b, order) for b in self.basis])

    def vectors(self):
        """Every vector of the subspace, as ints"""
        check_gate('subspace enumeration', self.dim, settings.GF2_EXHAUSTIVE_MAX_COLS)
        for combo in range(1 << self.dim):
            v = 0
            for i in bit_positions(combo):
                v ^= self.basis[i]
            yield v

    def basis_vectors(self):
        return tuple(BitVector(self.ambient_dim, b) for b in self.basis)


def rank(m):
    return len(echelon_basis(m.data))


def nullity(m):
    return m.cols - rank(m)


def is_nonsingular(m):
    """Square with full rank; the 0x0 matrix counts as nonsingular"""
    return m.is_square() and rank(m) == m.rows


def nullspace(m):
    """Right nullspace ``{x : m @ x = 0}`` as a canonical subspace"""
    reduced = echelon_basis(m.data)
    pivot_mask = 0
    for r in reduced:
        pivot_mask |= r & -r
    vectors = []
    for f in range(m.cols):
        bit = 1 << f
        if pivot_mask & bit:
            continue
        v = bit
        for r in reduced:
            if r & bit:
                v |= r & -r
        vectors.append(v)
    return Subspace.span(m.cols, vectors)


def orthogonal_complement(w):
    return nullspace(BitMatrix(len(w.basis), w.ambient_dim, w.basis))


def principal_submatrix(a, s):
    """Rows and columns of the square matrix ``a`` indexed by ``s``, order preserved"""
    if not a.is_square():
        raise DimensionMismatchError("principal submatrices need a square matrix")
    keep = sorted(set(s))
    for i in keep:
        if not 0 <= i < a.rows:
            raise DimensionMismatchError(f"index {i} out of range for a {a.rows}x{a.cols} matrix")
    return BitMatrix(len(keep), len(keep), tuple(compress(a.data[i], keep) for i in keep))


def principal_nullity(a, mask):
    """Nullity of the principal submatrix on the index set ``mask``"""
    rows = [a.data[i] & mask for i in bit_positions(mask)]
    return len(rows) - len(echelon_basis(rows))


def symmetrize_nullspace(a):
    """
    Symmetric n x n matrix whose nullspace equals the right nullspace of ``a``.

    With the echelon form of ``a`` written as [I | C''] after moving pivot
    columns to the front, the matrix [[I, C''], [C''^T, C''^T C'']] has the
    required nullspace; the columns are then moved back.
    """
    n = a.cols
    reduced = echelon_basis(a.data)
    r = len(reduced)
    if r == 0:
        return BitMatrix.zeros(n, n)
    if r == n:
        return BitMatrix.identity(n)

    pivots = [(row & -row).bit_length() - 1 for row in reduced]
    free = [j for j in range(n) if j not in set(pivots)]
    order = pivots + free
    # c2[i] is row i of C'' packed over the free columns
    c2 = [compress(row, free) for row in reduced]

    block = []
    for i in range(r):
        block.append((1 << i) | (c2[i] << r))
    for j in range(n - r):
        col_j = mask_of(i for i in range(r) if c2[i] >> j & 1)
        row = col_j
        for k in range(n - r):
            col_k = mask_of(i for i in range(r) if c2[i] >> k & 1)
            if parity(col_j & col_k):
                row |= 1 << (r + k)
        block.append(row)

    data = [0] * n
    for a_idx, row in enumerate(block):
        data[order[a_idx]] = expand(row, order)
    return BitMatrix(n, n, tuple(data))
