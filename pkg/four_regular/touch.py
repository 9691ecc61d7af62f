"""
Touch-graphs of circuit partitions, and 4-regular graphs realizing a given
graph as a touch-graph.
"""
import logging
from dataclasses import dataclass

from graphs.graph import MultiGraph, simplify
from matroid_lab.exceptions import DefinitionError

from .euler import CircuitPartition, HalfEdgeGraph, TransitionSystem, partition_from_transitions

logger = logging.getLogger(__name__)


def circuit_labels(p):
    return tuple(f"c{t}" for t in range(p.size))


def touch_graph(p):
    """A vertex per circuit of P and an edge, labelled by v, per vertex v of F"""
    f = p.four_regular
    edges = []
    for half_edges in f.incident:
        circuits = sorted({p.owners[h] for h in half_edges})
        edges.append((circuits[0], circuits[-1]))
    return MultiGraph(circuit_labels(p), tuple(edges), f.labels)


@dataclass(frozen=True)
class Realization:
    four_regular: HalfEdgeGraph
    partition: CircuitPartition
    owners: tuple

    def labeled_touch_graph(self, labels):
        """The touch-graph with each circuit named after the vertex it was built for"""
        tch = touch_graph(self.partition)
        edges = [(self.owners[a], self.owners[b]) for a, b in tch.edges]
        return MultiGraph.from_labeled(labels, edges, tch.edge_labels)


def _walk(stops, looped_stop=None):
    """Directed steps around ``stops``; ``looped_stop`` also gets a loop step"""
    steps = []
    for k, stop in enumerate(stops):
        if stop == looped_stop:
            steps.append((stop, stop))
        steps.append((stop, stops[(k + 1) % len(stops)]))
    return steps


def is_realizable(g):
    g = simplify(g)
    return not any(g.is_isolated(v) and not g.is_looped(v) for v in g.labels)


def realize_touch_graph(g):
    """
    A 4-regular graph F and a circuit partition P of F whose touch-graph is ``g``.

    F has a vertex ``u~w`` for every edge uw of ``g``. Each non-isolated vertex u
    gets a circuit through its edge vertices in label order of the other end.
    A loop at u adds a vertex ``u~u`` carrying a loop: as a figure eight when u
    has no other edges, otherwise in the middle of the first edge of u's circuit.
    """
    g = simplify(g)
    bare = [v for v in g.labels if g.is_isolated(v) and not g.is_looped(v)]
    if bare:
        raise DefinitionError(f"isolated unlooped vertices {bare} cannot be realized", code='not_realizable')

    vertices = [f"{u}~{w}" for u, w in g.edges()]
    incident = {u: [] for u in g.labels}
    for (u, w), x in zip(g.edges(), vertices):
        incident[u].append(x)
        incident[w].append(x)

    walks = []
    for u in g.labels:
        stops = incident[u]
        looped_stop = None
        if g.is_looped(u):
            looped_stop = f"{u}~{u}"
            vertices.append(looped_stop)
            stops = stops[:1] + [looped_stop] + stops[1:]
        walks.append((u, _walk(stops, looped_stop)))

    position = {x: i for i, x in enumerate(vertices)}
    edges = []
    edge_owner = []
    partner = {}
    for u, steps in walks:
        first = len(edges)
        for a, b in steps:
            edges.append((position[a], position[b]))
            edge_owner.append(u)
        last = len(edges) - 1
        for k in range(first, last + 1):
            following = k + 1 if k < last else first
            partner[2 * k + 1] = 2 * following
            partner[2 * following] = 2 * k + 1

    f = HalfEdgeGraph.from_multigraph(MultiGraph(tuple(vertices), tuple(edges)))
    choices = tuple(f.choice_pairing(half_edges[0], partner[half_edges[0]]) for half_edges in f.incident)
    p = partition_from_transitions(f, TransitionSystem(choices))
    owners = tuple(edge_owner[trail[0] >> 1] for trail in p.trails)
    logger.debug("realized %s on %d vertices with %d circuits", g, f.n, p.size)
    return Realization(f, p, owners)
