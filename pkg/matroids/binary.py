"""
Binary matroids stored as canonical cycle spaces.

A binary matroid on an ordered ground set is determined by its cycle space,
the GF(2) span of its circuits. Everything else (circuits, ranks, bases) is
derived from that subspace, so equality of matroids is equality of subspaces.
Subsets of the ground set are bitmasks over the ground order.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from django.conf import settings

from gf2.linalg import (
    BitMatrix, Subspace, bit_positions, echelon_basis, mask_of, nullspace, orthogonal_complement,
    popcount,
)
from matroid_lab.exceptions import (
    DefinitionError, DimensionMismatchError, LabelCollisionError, UnknownElementError, check_gate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BinaryMatroid:
    ground: tuple
    cycle_space: Subspace

    def __post_init__(self):
        object.__setattr__(self, 'ground', tuple(self.ground))
        if len(set(self.ground)) != len(self.ground):
            raise DimensionMismatchError(f"ground labels are not distinct: {list(self.ground)}")
        if self.cycle_space.ambient_dim != len(self.ground):
            raise DimensionMismatchError(
                f"cycle space of GF(2)^{self.cycle_space.ambient_dim} on {len(self.ground)} elements"
            )

    @property
    def size(self):
        return len(self.ground)

    @property
    def full_mask(self):
        return (1 << self.size) - 1

    @property
    def nullity(self):
        return self.cycle_space.dim

    @property
    def rank(self):
        return self.size - self.cycle_space.dim

    def index(self, e):
        try:
            return self.ground.index(e)
        except ValueError:
            raise UnknownElementError(f"unknown element {e!r}") from None

    def mask(self, elements):
        return mask_of(self.index(e) for e in elements)

    def labels_of(self, mask):
        return frozenset(self.ground[i] for i in bit_positions(mask))

    def sorted_labels(self, mask):
        return [self.ground[i] for i in bit_positions(mask)]

    @cached_property
    def representation(self):
        """Rows spanning the orthogonal complement; the matroid is their column matroid"""
        return orthogonal_complement(self.cycle_space).basis

    @cached_property
    def columns(self):
        """Column j of the representation, one bit per representation row"""
        rows = self.representation
        return tuple(mask_of(i for i, row in enumerate(rows) if row >> j & 1) for j in range(self.size))

    def rank_of_mask(self, mask):
        return len(echelon_basis([row & mask for row in self.representation]))

    @cached_property
    def circuit_masks(self):
        """Minimal nonempty supports of cycle-space vectors"""
        found = []
        for v in sorted(self.cycle_space.vectors(), key=lambda v: (popcount(v), v)):
            if v and not any(c & v == c for c in found):
                found.append(v)
        return frozenset(found)

    def reorder(self, labels):
        """The same matroid with its ground set listed in the order ``labels``"""
        labels = tuple(labels)
        if sorted(labels) != sorted(self.ground):
            raise DimensionMismatchError(f"{list(labels)} is not a reordering of {list(self.ground)}")
        order = [self.index(e) for e in labels]
        return BinaryMatroid(labels, self.cycle_space.permuted(order))

    def __str__(self):
        return f"BinaryMatroid(ground={' '.join(self.ground)}, rank={self.rank}, nullity={self.nullity})"


def from_matrix(a, labels):
    labels = tuple(labels)
    if a.cols != len(labels):
        raise DimensionMismatchError(f"{a.cols} columns against {len(labels)} labels")
    return BinaryMatroid(labels, nullspace(a))


def from_subspace(w, labels):
    labels = tuple(labels)
    if w.ambient_dim != len(labels):
        raise DimensionMismatchError(f"subspace of GF(2)^{w.ambient_dim} against {len(labels)} labels")
    return BinaryMatroid(labels, w)


def cycle_space(m):
    return m.cycle_space


def circuits(m):
    return m.circuit_masks


def rank_of(m, s):
    return m.rank_of_mask(m.mask(s))


def dual(m):
    return BinaryMatroid(m.ground, orthogonal_complement(m.cycle_space))


def _without(m, v):
    i = m.index(v)
    return i, m.ground[:i] + m.ground[i + 1:]


def delete(m, v):
    i, ground = _without(m, v)
    return BinaryMatroid(ground, m.cycle_space.avoiding(1 << i).drop_coordinates(1 << i))


def contract(m, v):
    i, ground = _without(m, v)
    return BinaryMatroid(ground, m.cycle_space.drop_coordinates(1 << i))


def direct_sum(m1, m2):
    clash = set(m1.ground) & set(m2.ground)
    if clash:
        raise LabelCollisionError(f"ground sets share {sorted(clash)}")
    shift = m1.size
    basis = list(m1.cycle_space.basis) + [b << shift for b in m2.cycle_space.basis]
    return BinaryMatroid(m1.ground + m2.ground, Subspace.span(m1.size + m2.size, basis))


def is_loop(m, v):
    return m.cycle_space.contains(1 << m.index(v))


def is_coloop(m, v):
    return not m.cycle_space.support >> m.index(v) & 1


def polygon_matroid(g):
    """Cycle matroid of a multigraph, from its GF(2) vertex-edge incidence matrix"""
    rows = [0] * g.n
    for k, (a, b) in enumerate(g.edges):
        if a != b:
            rows[a] |= 1 << k
            rows[b] |= 1 << k
    return from_matrix(BitMatrix(g.n, len(g.edges), tuple(rows)), g.edge_labels)


def equals(m1, m2):
    return m1 == m2


def _signature(m, i):
    return tuple(sorted(popcount(c) for c in m.circuit_masks if c >> i & 1))


def isomorphic(m1, m2):
    """
    A bijection ``{element of m1: element of m2}`` carrying the cycle space of
    ``m1`` onto that of ``m2``, or None.
    """
    limit = settings.MATROID_ISOMORPHISM_MAX_GROUND
    check_gate('matroid isomorphism', max(m1.size, m2.size), limit)
    if m1.size != m2.size or m1.rank != m2.rank:
        return None
    sizes1 = sorted(popcount(c) for c in m1.circuit_masks)
    sizes2 = sorted(popcount(c) for c in m2.circuit_masks)
    if sizes1 != sizes2:
        return None

    n = m1.size
    sig1 = [_signature(m1, i) for i in range(n)]
    sig2 = [_signature(m2, j) for j in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None

    image = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            inverse = [0] * n
            for a, b in enumerate(image):
                inverse[b] = a
            return m1.cycle_space.permuted(inverse) == m2.cycle_space
        for j in range(n):
            if not used[j] and sig2[j] == sig1[i]:
                used[j] = True
                image[i] = j
                if extend(i + 1):
                    return True
                used[j] = False
        return False

    if not extend(0):
        return None
    return {m1.ground[i]: m2.ground[j] for i, j in enumerate(image)}


def bases(m):
    check_gate('basis enumeration', m.size, settings.MATROID_ENUMERATION_MAX_GROUND)
    r = m.rank
    found = set()
    for combo in combinations(range(m.size), r):
        mask = mask_of(combo)
        if m.rank_of_mask(mask) == r:
            found.add(mask)
    return frozenset(found)


def independent_sets(m):
    check_gate('independent-set enumeration', m.size, settings.MATROID_ENUMERATION_MAX_GROUND)
    return frozenset(s for s in range(1 << m.size) if m.rank_of_mask(s) == popcount(s))


def free_matroid(labels):
    labels = tuple(labels)
    return BinaryMatroid(labels, Subspace.zero(len(labels)))


def binary_uniform(n, k, labels=None):
    """U_{n,k} for the binary cases k in {0, 1, n-1, n}"""
    labels = tuple(labels) if labels is not None else tuple(f"u{i}" for i in range(n))
    if len(labels) != n:
        raise DimensionMismatchError(f"{len(labels)} labels for U_{{{n},{k}}}")
    all_ones = (1 << n) - 1
    if k == n:
        space = Subspace.zero(n)
    elif k == 0:
        space = Subspace.full(n)
    elif k == n - 1:
        space = Subspace.span(n, [all_ones])
    elif k == 1:
        space = orthogonal_complement(Subspace.span(n, [all_ones]))
    else:
        raise DefinitionError(f"U_{{{n},{k}}} is not binary")
    return BinaryMatroid(labels, space)


def binary_matroid_from_bases(ground, basis_masks):
    """
    Rebuild a binary matroid from its bases through the fundamental circuits
    of the lexicographically first basis.
    """
    ground = tuple(ground)
    basis_masks = frozenset(basis_masks)
    if not basis_masks:
        raise DefinitionError("a matroid has at least one basis")
    base = min(basis_masks)
    vectors = []
    for e in range(len(ground)):
        bit = 1 << e
        if base & bit:
            continue
        circuit = bit
        for b in bit_positions(base):
            if ((base & ~(1 << b)) | bit) in basis_masks:
                circuit |= 1 << b
        vectors.append(circuit)
    return BinaryMatroid(ground, Subspace.span(len(ground), vectors))
