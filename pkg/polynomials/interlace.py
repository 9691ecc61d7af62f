"""
Interlace polynomial q(G) of a looped simple graph.

q(G) = sum over S of (x - 1)^(|S| - nu(S)) (y - 1)^nu(S), where nu(S) is the
GF(2) nullity of the principal submatrix of the adjacency matrix on S.
"""
import logging
from collections import Counter

from django.conf import settings

from adjacency.minors import adjacency_matroid
from gf2.linalg import gray_code_subsets, popcount, principal_nullities
from graphs.graph import delete_vertex, induced, local_complement, simplify
from matroid_lab.exceptions import check_gate

from .bivariate import X, Y, ZERO, sum_shifted
from .tutte import substituted_lambda

logger = logging.getLogger(__name__)


def _gated(g):
    g = simplify(g)
    check_gate('interlace polynomial', g.n, settings.POLYNOMIAL_MAX_VERTICES)
    return g


def nullity_counts(g):
    """Counter of ``(|S| - nu(S), nu(S))`` over every vertex subset, nullities updated along a Gray code"""
    counts = Counter()
    for s, nu in principal_nullities(g.adj):
        counts[popcount(s) - nu, nu] += 1
    return counts


def interlace_subset(g):
    return sum_shifted(nullity_counts(_gated(g)))


def interlace_recursive(g):
    """
    q(G) by vertex recursion. A looped v gives q(G - v) + (x - 1) q(G^v - v);
    an edge vw between unlooped vertices gives
    q(G - v) + q(G^vwv - v) + ((x - 1)^2 - 1) q(G^vwv - v - w);
    n isolated unlooped vertices give y^n.
    """
    return _interlace(_gated(g), {})


def _interlace(g, memo):
    key = (g.n, g.adj.data)
    if key in memo:
        return memo[key]

    looped = g.loops()
    edges = g.edges()
    if looped:
        v = looped[0]
        logger.debug("looped rule at %s on %d vertices", v, g.n)
        result = _interlace(delete_vertex(g, v), memo) + (X - 1) * _interlace(
            delete_vertex(local_complement(g, v), v), memo
        )
    elif edges:
        v, w = edges[0]
        logger.debug("edge rule at %s%s on %d vertices", v, w, g.n)
        pivoted = delete_vertex(local_complement(local_complement(local_complement(g, v), w), v), v)
        result = (
            _interlace(delete_vertex(g, v), memo)
            + _interlace(pivoted, memo)
            + ((X - 1) ** 2 - 1) * _interlace(delete_vertex(pivoted, w), memo)
        )
    else:
        result = Y ** g.n
    memo[key] = result
    return result


def lambda_terms(g, containing=None):
    """
    (x - 1)^|S| times the lambda of M_A(G[S]) at 1 + (y - 1)/(x - 1), for every
    S (or every S holding ``containing``), each term already cleared of the
    division.
    """
    g = simplify(g)
    required = g.mask([containing]) if containing is not None else 0
    total = ZERO
    for s in gray_code_subsets(g.n):
        if s & required != required:
            continue
        total = total + substituted_lambda(adjacency_matroid(induced(g, g.labels_of(s))), popcount(s))
    return total


def q_from_lambda(g):
    return lambda_terms(_gated(g))
