"""Instance generators for 4-regular multigraphs"""
from graphs.generators import default_labels
from graphs.graph import MultiGraph

from .euler import HalfEdgeGraph, TransitionSystem


def figure_eight(label='v'):
    """One vertex carrying two loops"""
    return HalfEdgeGraph.from_multigraph(MultiGraph.from_labeled([label], [(label, label)] * 2))


def quadruple_edge(labels='vw'):
    v, w = labels
    return HalfEdgeGraph.from_multigraph(MultiGraph.from_labeled([v, w], [(v, w)] * 4))


def two_figure_eights(labels='vw'):
    """Two figure eights side by side, the smallest disconnected case"""
    v, w = labels
    return HalfEdgeGraph.from_multigraph(MultiGraph.from_labeled([v, w], [(v, v)] * 2 + [(w, w)] * 2))


def five_clique():
    labels = default_labels(5)
    edges = [(labels[i], labels[j]) for i in range(5) for j in range(i + 1, 5)]
    return HalfEdgeGraph.from_multigraph(MultiGraph.from_labeled(labels, edges))


def _pairings(rng, block):
    stubs = [i for i in block for _ in range(4)]
    rng.shuffle(stubs)
    return [(stubs[k], stubs[k + 1]) for k in range(0, len(stubs), 2)]


def random_four_regular(rng, n, labels=None):
    """Uniform random pairing of 4n half-edges; loops and parallel edges allowed"""
    return HalfEdgeGraph.from_multigraph(MultiGraph(labels or default_labels(n), tuple(_pairings(rng, range(n)))))


def random_connected_four_regular(rng, n, labels=None):
    while True:
        f = random_four_regular(rng, n, labels)
        if f.component_count <= 1:
            return f


def random_disconnected_four_regular(rng, n, labels=None):
    """Random pairings within two vertex blocks, so at least two components (n >= 2)"""
    k = rng.randint(1, n - 1)
    edges = _pairings(rng, range(k)) + _pairings(rng, range(k, n))
    return HalfEdgeGraph.from_multigraph(MultiGraph(labels or default_labels(n), tuple(edges)))


def random_transition_system(rng, f):
    return TransitionSystem(tuple(rng.randrange(3) for _ in range(f.n)))


def four_regular_stream(rng, max_n, trials):
    """
    The fixed small examples, then ``trials`` random connected graphs per size
    and half as many (at least one) with two or more components
    """
    yield figure_eight()
    yield quadruple_edge()
    if max_n >= 2:
        yield two_figure_eights()
    if max_n >= 5:
        yield five_clique()
    for n in range(1, max_n + 1):
        for _ in range(trials):
            yield random_connected_four_regular(rng, n)
        if n >= 2:
            for _ in range(max(1, trials // 2)):
                yield random_disconnected_four_regular(rng, n)
