"""Executable identities of the interlace polynomial, the Tutte polynomial and lambda"""
from collections import Counter
from itertools import combinations

from adjacency.minors import adjacency_matroid
from gf2.linalg import nullity, popcount
from graphs.graph import delete_vertex, induced, local_complement, simplify
from matroids.binary import bases, contract, delete, dual, is_coloop, is_loop

from .bivariate import Y, sum_shifted
from .interlace import interlace_recursive, interlace_subset, lambda_terms, q_from_lambda
from .tutte import lambda_leading, rank_counts, tutte_recursive, tutte_subset


def interlace_by_elimination(g):
    """q(G) from a fresh elimination on every induced subgraph, in size order"""
    g = simplify(g)
    counts = Counter()
    for k in range(g.n + 1):
        for s in combinations(g.labels, k):
            nu = nullity(induced(g, s).adj)
            counts[k - nu, nu] += 1
    return sum_shifted(counts)


def interlace_evaluators_agree(g):
    q = interlace_subset(g)
    return q == interlace_recursive(g) == q_from_lambda(g)


def gray_code_matches_elimination(g):
    return interlace_subset(g) == interlace_by_elimination(g)


def interlace_evaluations(g):
    """q(G)(2, 2) counts the subsets; q(G)(1, 1) keeps only the empty one"""
    q = interlace_subset(g)
    return q.evaluate(2, 2) == 2 ** simplify(g).n and q.evaluate(1, 1) == 1


def tutte_by_elimination_matches(m):
    """Gray-code rank counts against a fresh elimination on every subset"""
    full = m.rank
    counts = Counter()
    for s in range(1 << m.size):
        r = m.rank_of_mask(s)
        counts[full - r, popcount(s) - r] += 1
    return rank_counts(m) == counts


def tutte_evaluators_agree(m):
    return tutte_subset(m) == tutte_recursive(m)


def tutte_duality(m):
    return tutte_subset(dual(m)) == tutte_subset(m).swap_variables()


def tutte_counts_bases(m):
    t = tutte_subset(m)
    return t.evaluate(1, 1) == len(bases(m)) and t.evaluate(2, 2) == 2 ** m.size


def lambda_recursion(m, v):
    """lambda under deleting and contracting a loop, a coloop, or any other element"""
    here = lambda_leading(m)
    deleted = lambda_leading(delete(m, v))
    contracted = lambda_leading(contract(m, v))
    if is_loop(m, v):
        return here == (Y - 1) * deleted == (Y - 1) * contracted
    if is_coloop(m, v):
        return here == deleted == contracted
    return here == (Y - 1) * deleted == contracted


def lambda_under_local_complement(g, v):
    """
    lambda of M_A(G) equals that of M_A(G^v) for unlooped v and of M_A(G^v - v)
    for looped v; an isolated unlooped v contributes a factor y - 1.
    """
    g = simplify(g)
    here = lambda_leading(adjacency_matroid(g))
    lc = local_complement(g, v)
    if g.is_looped(v):
        return here == lambda_leading(adjacency_matroid(delete_vertex(lc, v)))
    if here != lambda_leading(adjacency_matroid(lc)):
        return False
    if g.is_isolated(v):
        return here == (Y - 1) * lambda_leading(adjacency_matroid(delete_vertex(g, v)))
    return True


def vertex_deletion_difference(g, v):
    """q(G) - q(G - v) is the lambda sum over the subsets holding v"""
    g = simplify(g)
    return interlace_subset(g) - interlace_subset(delete_vertex(g, v)) == lambda_terms(g, containing=v)


GRAPH_PROPERTIES = (
    ('subset, recursive and lambda forms of q agree', interlace_evaluators_agree),
    ('Gray-code subset sum matches per-subset elimination', gray_code_matches_elimination),
    ('q at (2, 2) and (1, 1)', interlace_evaluations),
)

VERTEX_PROPERTIES = (
    ('lambda under local complementation', lambda_under_local_complement),
    ('vertex deletion difference of q', vertex_deletion_difference),
)

MATROID_PROPERTIES = (
    ('subset and deletion-contraction Tutte polynomials agree', tutte_evaluators_agree),
    ('Gray-code rank counts match per-subset elimination', tutte_by_elimination_matches),
    ('Tutte polynomial of the dual swaps x and y', tutte_duality),
    ('t(1, 1) counts bases and t(2, 2) subsets', tutte_counts_bases),
)

ELEMENT_PROPERTIES = (
    ('lambda under deletion and contraction', lambda_recursion),
)
