"""
Adjacency matroids and their minors.

The adjacency matroid of a looped simple graph is the column matroid of its
adjacency matrix over GF(2). Contractions and deletions are read off graphs
obtained by local complementation followed by vertex deletion.
"""
import logging
from dataclasses import dataclass

from django.db import models

from graphs.graph import VariantKind, delete_vertex, local_complement, simplify, variant
from matroid_lab.exceptions import DefinitionError, InvariantViolation
from matroids.binary import (
    BinaryMatroid, binary_uniform, delete, direct_sum, from_matrix, is_coloop,
)

logger = logging.getLogger(__name__)


class ContractionRoute(models.TextChoices):
    LOOPED = 'looped', 'v looped: G^v - v'
    ISOLATED = 'isolated', 'v unlooped and isolated: G - v'
    UNLOOPED_NEIGHBOR = 'unlooped_neighbor', 'unlooped neighbor w: (G^w)^v - v'
    LOOPED_NEIGHBOR = 'looped_neighbor', 'looped neighbor w: ((G^v)^w)^v - v'


@dataclass(frozen=True)
class MinorDerivation:
    """M_A(G)/v as the adjacency matroid of ``witness_graph - vertex``"""

    vertex: str
    route: str
    lc_sequence: tuple
    witness_graph: object
    result: BinaryMatroid


def adjacency_matroid(g):
    g = simplify(g)
    return from_matrix(g.adj, g.labels)


def variant_matroid(g, v, kind):
    return adjacency_matroid(variant(simplify(g), v, kind))


def with_coloop(m, v, labels):
    """``m`` plus the coloop ``v``, with the ground set listed as ``labels``"""
    return direct_sum(m, binary_uniform(1, 1, [v])).reorder(labels)


def local_complement_sequence(g, vertices):
    for w in vertices:
        g = local_complement(g, w)
    return g


def _route(g, v, via):
    if g.is_looped(v):
        if via is not None:
            raise DefinitionError(f"{v!r} is looped; contraction takes no neighbor")
        return ContractionRoute.LOOPED, (v,)
    neighbors = g.neighbors(v)
    if not neighbors:
        if via is not None:
            raise DefinitionError(f"{v!r} is isolated; contraction takes no neighbor")
        return ContractionRoute.ISOLATED, ()
    if via is None:
        unlooped = [w for w in neighbors if not g.is_looped(w)]
        via = unlooped[0] if unlooped else neighbors[0]
    elif via not in neighbors:
        raise DefinitionError(f"{via!r} is not a neighbor of {v!r}")
    if g.is_looped(via):
        return ContractionRoute.LOOPED_NEIGHBOR, (v, via, v)
    return ContractionRoute.UNLOOPED_NEIGHBOR, (via, v)


def contract_via_lc(g, v, via=None):
    """
    Compute M_A(G)/v from a graph.

    ``via`` picks the neighbor used when ``v`` is unlooped and not isolated;
    by default the first unlooped neighbor in label order, else the first
    looped one.
    """
    g = simplify(g)
    g.index(v)
    route, sequence = _route(g, v, via)
    witness = local_complement_sequence(g, sequence)
    logger.debug("contracting %s by route %s through %s", v, route, list(sequence))
    return MinorDerivation(
        vertex=v,
        route=route,
        lc_sequence=sequence,
        witness_graph=witness,
        result=adjacency_matroid(delete_vertex(witness, v)),
    )


def is_triple_coloop(g, v):
    g = simplify(g)
    return all(is_coloop(variant_matroid(g, v, kind), v) for kind in VariantKind)


def delete_via_subgraph(g, v):
    """M_A(G) - v, read from G - v unless v is a triple coloop"""
    g = simplify(g)
    if is_triple_coloop(g, v):
        logger.debug("%s is a triple coloop; deleting it as a contraction", v)
        return contract_via_lc(g, v).result
    result = adjacency_matroid(delete_vertex(g, v))
    if result != delete(adjacency_matroid(g), v):
        raise InvariantViolation(f"M_A(G) - {v} differs from M_A(G - {v})")
    return result


@dataclass(frozen=True)
class TrioResult:
    vertex: str
    equal_pair: tuple
    odd_one: str
    nullity: int
    shared: BinaryMatroid
    odd: BinaryMatroid

    @property
    def odd_nullity(self):
        return self.odd.nullity


def trio(g, v):
    """Which two of M_A(G(v)), M_A(G(v,l)), M_A(G(v,li)) coincide"""
    g = simplify(g)
    matroids = {kind: variant_matroid(g, v, kind) for kind in VariantKind}
    kinds = list(VariantKind)
    pairs = [
        (a, b) for i, a in enumerate(kinds) for b in kinds[i + 1:]
        if matroids[a].cycle_space == matroids[b].cycle_space
    ]
    if len(pairs) != 1:
        raise InvariantViolation(f"{len(pairs)} of the three variant matroids at {v} coincide")
    equal_pair = pairs[0]
    odd_one = next(k for k in kinds if k not in equal_pair)
    shared, odd = matroids[equal_pair[0]], matroids[odd_one]
    if not (shared.cycle_space < odd.cycle_space and odd.nullity == shared.nullity + 1):
        raise InvariantViolation(f"the odd variant matroid at {v} does not extend the shared cycle space")
    return TrioResult(
        vertex=v,
        equal_pair=tuple(VariantKind(k) for k in equal_pair),
        odd_one=VariantKind(odd_one),
        nullity=shared.nullity,
        shared=shared,
        odd=odd,
    )
