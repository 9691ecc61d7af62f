"""
Set systems and delta-matroids.

A set system is an ordered ground set with a family of subsets, each subset a
bitmask over the ground order. All operations return new systems; improper
systems (empty families) are representable and reported through
``is_proper``.
"""
import logging
from collections import Counter
from dataclasses import dataclass

from django.conf import settings
from django.db import models

from gf2.linalg import bit_positions, compress, mask_of, popcount, principal_nullities
from graphs.graph import LoopedSimpleGraph, simplify
from matroid_lab.exceptions import (
    DefinitionError, DimensionMismatchError, ImproperSetSystemError, InvariantViolation,
    LabelCollisionError, NotAMatroidError, NotGraphicError, UnknownElementError, check_gate,
)

logger = logging.getLogger(__name__)

# beyond this the exchange axiom is also checked through min(D * X)
EQUICARDINAL_CROSS_CHECK_MAX_GROUND = 6


class FlipKind(models.TextChoices):
    PIVOT = 'pivot', 'Pivot D * v'
    DUAL_PIVOT = 'dual_pivot', 'Dual pivot D *bar v'
    LOOP_COMPLEMENT = 'loop_complement', 'Loop complementation D + v'


@dataclass(frozen=True, eq=False)
class SetSystem:
    ground: tuple
    family: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'ground', tuple(self.ground))
        object.__setattr__(self, 'family', frozenset(self.family))
        if len(set(self.ground)) != len(self.ground):
            raise DimensionMismatchError(f"ground labels are not distinct: {list(self.ground)}")
        check_gate('set system ground', len(self.ground), settings.DELTA_MATROID_MAX_GROUND)
        full = self.full_mask
        for y in self.family:
            if y < 0 or y & ~full:
                raise DimensionMismatchError(f"set {y:b} is not a subset of the ground set")

    @classmethod
    def from_sets(cls, ground, sets):
        ground = tuple(ground)
        position = {e: i for i, e in enumerate(ground)}
        family = set()
        for s in sets:
            try:
                family.add(mask_of(position[e] for e in s))
            except KeyError as exc:
                raise UnknownElementError(f"unknown element {exc.args[0]!r}") from None
        return cls(ground, frozenset(family))

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground == other.ground and self.family == other.family

    def __hash__(self):
        return hash((self.ground, self.family))

    def __contains__(self, mask):
        return mask in self.family

    def __len__(self):
        return len(self.family)

    @property
    def size(self):
        return len(self.ground)

    @property
    def full_mask(self):
        return (1 << len(self.ground)) - 1

    @property
    def is_proper(self):
        return bool(self.family)

    @property
    def is_normal(self):
        return 0 in self.family

    @property
    def masks(self):
        """Members sorted by size, then by mask"""
        return tuple(sorted(self.family, key=lambda y: (popcount(y), y)))

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

    def sets(self):
        return [self.sorted_labels(y) for y in self.masks]

    def reorder(self, labels):
        labels = tuple(labels)
        if sorted(labels) != sorted(self.ground):
            raise DimensionMismatchError(f"{list(labels)} is not a reordering of {list(self.ground)}")
        keep = [self.index(e) for e in labels]
        return SetSystem(labels, frozenset(compress(y, keep) for y in self.family))

    def __str__(self):
        members = ', '.join('{' + ','.join(s) + '}' for s in self.sets())
        return f"({' '.join(self.ground)}; {members})"


class DeltaMatroid(SetSystem):
    """A proper set system satisfying the symmetric exchange axiom"""

    @classmethod
    def from_system(cls, d):
        if not is_delta_matroid(d):
            raise DefinitionError(f"{d} violates the symmetric exchange axiom")
        return cls(d.ground, d.family)


def _element_mask(d, x):
    """Mask of an element label or a collection of labels"""
    if isinstance(x, str):
        return 1 << d.index(x)
    return d.mask(x)


def _pivot_mask(d, mx):
    return SetSystem(d.ground, frozenset(y ^ mx for y in d.family))


def pivot(d, x):
    return _pivot_mask(d, _element_mask(d, x))


def _subsets_of(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def loop_complement(d, x):
    """D + X: Y is kept when an odd number of members Z satisfy Y - X <= Z <= Y"""
    mx = _element_mask(d, x)
    counts = Counter()
    for z in d.family:
        for t in _subsets_of(mx & ~z):
            counts[z | t] += 1
    return SetSystem(d.ground, frozenset(y for y, c in counts.items() if c & 1))


def loop_complement_element(d, v):
    """D + v for a single element, as D with {Y + v : v not in Y in D} toggled in"""
    bit = 1 << d.index(v)
    toggled = {y | bit for y in d.family if not y & bit}
    return SetSystem(d.ground, d.family ^ frozenset(toggled))


def dual_pivot(d, x):
    """D *bar X: Y is kept when an odd number of members Z satisfy Y <= Z <= Y + X"""
    mx = _element_mask(d, x)
    counts = Counter()
    for z in d.family:
        for t in _subsets_of(z & mx):
            counts[z & ~t] += 1
    return SetSystem(d.ground, frozenset(y for y, c in counts.items() if c & 1))


def dual_pivot_composite(d, x):
    """D *bar X as D + X * X + X"""
    return loop_complement(pivot(loop_complement(d, x), x), x)


def _require_proper(d, what):
    if not d.is_proper:
        raise ImproperSetSystemError(f"{what} of an empty family")


def min_sys(d):
    _require_proper(d, 'min')
    members = d.masks
    kept = [y for y in members if not any(z != y and z & y == z for z in members)]
    return SetSystem(d.ground, frozenset(kept))


def max_sys(d):
    _require_proper(d, 'max')
    members = d.masks
    kept = [y for y in members if not any(z != y and z & y == y for z in members)]
    return SetSystem(d.ground, frozenset(kept))


def distance(d, x=()):
    _require_proper(d, 'distance')
    mx = _element_mask(d, x)
    return min(popcount(y ^ mx) for y in d.family)


def restrict(d, labels):
    """D[X], re-indexed onto X in ground order"""
    keep_mask = d.mask(labels)
    keep = list(bit_positions(keep_mask))
    family = frozenset(compress(y, keep) for y in d.family if not y & ~keep_mask)
    return SetSystem(tuple(d.ground[i] for i in keep), family)


def delete_sys(d, v):
    i = d.index(v)
    result = restrict(d, d.ground[:i] + d.ground[i + 1:])
    if not result.is_proper:
        logger.debug("deleting coloop %s leaves an improper system", v)
    return result


def contract_sys(d, v):
    return delete_sys(pivot(d, v), v)


def tilde_minus(d, v):
    bit = 1 << d.index(v)
    return SetSystem(d.ground, frozenset(y for y in d.family if not y & bit))


def tilde_contract(d, v):
    bit = 1 << d.index(v)
    return SetSystem(d.ground, frozenset(y for y in d.family if y & bit))


def is_coloop_sys(d, v):
    bit = 1 << d.index(v)
    return all(y & bit for y in d.family)


def is_loop_sys(d, v):
    bit = 1 << d.index(v)
    return not any(y & bit for y in d.family)


def is_equicardinal(d):
    return len({popcount(y) for y in d.family}) <= 1


def direct_sum_sys(d1, d2):
    clash = set(d1.ground) & set(d2.ground)
    if clash:
        raise LabelCollisionError(f"ground sets share {sorted(clash)}")
    shift = d1.size
    family = frozenset(y1 | (y2 << shift) for y1 in d1.family for y2 in d2.family)
    return SetSystem(d1.ground + d2.ground, family)


def with_coloop_sys(d, v, labels):
    """``d`` plus the element ``v`` contained in every member, ground listed as ``labels``"""
    return direct_sum_sys(d, SetSystem((v,), frozenset([1]))).reorder(labels)


def satisfies_exchange_axiom(d):
    family = d.family
    for x in family:
        for y in family:
            diff = x ^ y
            for u in bit_positions(diff):
                ux = x ^ (1 << u)
                if ux in family:
                    continue
                if not any(w != u and ux ^ (1 << w) in family for w in bit_positions(diff)):
                    return False
    return True


def min_pivots_are_equicardinal(d):
    return all(is_equicardinal(min_sys(_pivot_mask(d, x))) for x in range(1 << d.size))


def is_delta_matroid(d):
    if not d.is_proper:
        return False
    result = satisfies_exchange_axiom(d)
    if d.size <= EQUICARDINAL_CROSS_CHECK_MAX_GROUND and result != min_pivots_are_equicardinal(d):
        raise InvariantViolation(f"exchange axiom and equicardinal minima disagree on {d}")
    return result


def from_graph(g):
    """The delta-matroid of subsets S whose principal submatrix A(G)[S] is nonsingular"""
    g = simplify(g)
    check_gate('graph delta-matroid', g.n, settings.DELTA_MATROID_MAX_GROUND)
    family = frozenset(s for s, nu in principal_nullities(g.adj) if nu == 0)
    return DeltaMatroid(g.labels, family)


def to_graph(d):
    """Decode a normal graphic set system back into its looped simple graph"""
    if not d.is_normal:
        raise NotGraphicError(f"{d} does not contain the empty set")
    looped = [i for i in range(d.size) if 1 << i in d.family]
    edges = []
    for i in range(d.size):
        for j in range(i + 1, d.size):
            pair = (1 << i | 1 << j) in d.family
            if pair != (i in looped and j in looped):
                edges.append((d.ground[i], d.ground[j]))
    g = LoopedSimpleGraph.from_edges(d.ground, edges, [d.ground[i] for i in looped])
    if from_graph(g) != d:
        raise NotGraphicError(f"{d} is not the delta-matroid of a graph")
    return g


def max_as_matroid(d):
    """max(D) as a basis family; it must be equicardinal"""
    top = max_sys(d)
    if not is_equicardinal(top):
        raise NotAMatroidError(f"max of {d} is not equicardinal")
    return top


def matroid_rank(bases):
    _require_proper(bases, 'rank')
    return popcount(next(iter(bases.family)))


def matroid_nullity(bases):
    return bases.size - matroid_rank(bases)


def vertex_flip_sequence(d, ops):
    """Apply ``(kind, element)`` flips left to right"""
    apply = {
        FlipKind.PIVOT: pivot,
        FlipKind.DUAL_PIVOT: dual_pivot,
        FlipKind.LOOP_COMPLEMENT: loop_complement,
    }
    for kind, v in ops:
        d = apply[FlipKind(kind)](d, v)
    return d
