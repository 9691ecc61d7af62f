"""
Adjacency matroid minors computed through delta-matroids.

Only the delta-matroid of the starting graph is built from matrices; every
minor below is then obtained by set-system operations and max(), and turned
back into a binary matroid from its bases.
"""
import logging

from graphs.graph import simplify
from matroids.binary import binary_matroid_from_bases

from .set_systems import (
    contract_sys, delete_sys, dual_pivot, from_graph, is_coloop_sys, is_loop_sys, max_as_matroid, pivot,
)

logger = logging.getLogger(__name__)


def matroid_of_bases(bases):
    return binary_matroid_from_bases(bases.ground, bases.family)


def delta_adjacency_matroid(g):
    return matroid_of_bases(max_as_matroid(from_graph(g)))


def delta_delete(g, v):
    """M_A(G) - v as max(D_G) - v; v must not be a coloop of max(D_G)"""
    top = max_as_matroid(from_graph(g))
    if is_coloop_sys(top, v):
        logger.debug("%s is a coloop of max(D_G); deleting it as a contraction", v)
        return matroid_of_bases(delete_sys(pivot(top, v), v))
    return matroid_of_bases(delete_sys(top, v))


def delta_contract(g, v):
    """M_A(G)/v as max(D_G * v - v), or max(D_G - v) when v is a loop of D_G"""
    d = from_graph(g)
    if is_loop_sys(d, v):
        return matroid_of_bases(max_as_matroid(delete_sys(d, v)))
    return matroid_of_bases(max_as_matroid(contract_sys(d, v)))


def delta_local_complement_matroid(g, v):
    """M_A(G^v): max(D_G *bar v) for unlooped v, max(D_G * v) for looped v"""
    g = simplify(g)
    d = from_graph(g)
    flipped = pivot(d, v) if g.is_looped(v) else dual_pivot(d, v)
    return matroid_of_bases(max_as_matroid(flipped))
