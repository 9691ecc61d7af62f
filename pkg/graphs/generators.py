"""Named graphs and instance streams for property checks"""
from string import ascii_lowercase

from gf2.linalg import BitMatrix

from .graph import LoopedSimpleGraph, MultiGraph, local_complement


def default_labels(n):
    if n <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:n])
    return tuple(f"v{i}" for i in range(n))


def triangle():
    """K3 on a, b, c"""
    return LoopedSimpleGraph.from_edges('abc', [('a', 'b'), ('b', 'c'), ('a', 'c')])


def looped_triangle():
    """K3 with a loop on a"""
    return LoopedSimpleGraph.from_edges('abc', [('a', 'b'), ('b', 'c'), ('a', 'c')], ['a'])


def looped_path():
    """Path b - a - c with loops on both ends, the local complement of K3 at a"""
    return local_complement(triangle(), 'a')


def two_vertex_path():
    """P2: the vertices v and w joined by one edge"""
    return LoopedSimpleGraph.from_edges('vw', [('v', 'w')])


def _pair_slots(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def _graph_from_slots(labels, slots, choice):
    data = [0] * len(labels)
    for k, (i, j) in enumerate(slots):
        if choice >> k & 1:
            data[i] |= 1 << j
            data[j] |= 1 << i
    return LoopedSimpleGraph(labels, BitMatrix(len(labels), len(labels), tuple(data)))


def all_looped_simple_graphs(n, labels=None):
    """Every looped simple graph on n labelled vertices (2^(n(n+1)/2) of them)"""
    labels = tuple(labels) if labels is not None else default_labels(n)
    slots = _pair_slots(n)
    for choice in range(1 << len(slots)):
        yield _graph_from_slots(labels, slots, choice)


def random_looped_simple_graph(rng, n, labels=None):
    labels = tuple(labels) if labels is not None else default_labels(n)
    slots = _pair_slots(n)
    return _graph_from_slots(labels, slots, rng.getrandbits(len(slots)) if slots else 0)


def graph_stream(rng, max_n, trials, exhaustive_max_n, min_n=0):
    """
    Exhaustive graphs for n up to ``exhaustive_max_n``, then ``trials`` random
    graphs for each larger n up to ``max_n``, in increasing n.
    """
    for n in range(min_n, max_n + 1):
        if n <= exhaustive_max_n:
            yield from all_looped_simple_graphs(n)
        else:
            for _ in range(trials):
                yield random_looped_simple_graph(rng, n)


def random_multigraph(rng, n, edge_count):
    labels = default_labels(n)
    edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(edge_count)] if n else []
    return MultiGraph(labels, tuple(edges))
