"""
4-regular multigraphs, transition systems, circuit partitions and Euler systems.

Half-edge ``2k`` is the end of edge ``k`` at its first endpoint and ``2k + 1``
the end at its second, so a loop puts both ends at one vertex. Each vertex
lists its four half-edges in edge insertion order; a transition picks one of
the three pairings of those four positions. A trail is stored as the cyclic
sequence of half-edges it leaves its vertices through.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

import networkx as nx
from django.conf import settings
from django.db import models

from graphs.graph import LoopedSimpleGraph, MultiGraph, induced
from matroid_lab.exceptions import DefinitionError, DimensionMismatchError, InvariantViolation

logger = logging.getLogger(__name__)

# transition k pairs position 0 with position k + 1
PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


class TransitionType(models.TextChoices):
    PHI = 'phi', 'follows the Euler system'
    CHI = 'chi', 'crosses the Euler system consistently with its orientation'
    PSI = 'psi', 'pairs the two in-directed half-edges'


@dataclass(frozen=True)
class HalfEdgeGraph:
    graph: MultiGraph
    incident: tuple

    @classmethod
    def from_multigraph(cls, graph):
        incident = [[] for _ in range(graph.n)]
        for k, (a, b) in enumerate(graph.edges):
            incident[a].append(2 * k)
            incident[b].append(2 * k + 1)
        wrong = [graph.labels[i] for i, half_edges in enumerate(incident) if len(half_edges) != 4]
        if wrong:
            raise DefinitionError(f"not 4-regular at {wrong}", code='not_four_regular')
        return cls(graph, tuple(tuple(half_edges) for half_edges in incident))

    @property
    def labels(self):
        return self.graph.labels

    @property
    def n(self):
        return self.graph.n

    @property
    def half_edge_count(self):
        return 2 * len(self.graph.edges)

    def index(self, v):
        return self.graph.index(v)

    def vertex_of(self, h):
        return self.graph.edges[h >> 1][h & 1]

    @cached_property
    def positions(self):
        """Half-edge -> its position among the four at its vertex"""
        return {h: p for half_edges in self.incident for p, h in enumerate(half_edges)}

    def choice_pairing(self, h, partner):
        """The transition at the vertex of ``h`` that pairs ``h`` with ``partner``"""
        pair = {self.positions[h], self.positions[partner]}
        for choice, pairing in enumerate(PAIRINGS):
            if any(set(p) == pair for p in pairing):
                return choice
        raise DefinitionError(f"half-edges {h} and {partner} do not meet at one vertex", code='invalid_pairing')

    @cached_property
    def component_count(self):
        return self.graph.component_count()


@dataclass(frozen=True)
class TransitionSystem:
    choices: tuple

    def __post_init__(self):
        object.__setattr__(self, 'choices', tuple(self.choices))
        for choice in self.choices:
            if choice not in (0, 1, 2):
                raise DefinitionError(f"transition {choice!r} is not one of 0, 1, 2", code='invalid_pairing')

    @classmethod
    def from_mapping(cls, f, mapping):
        """Transitions given per vertex label; every vertex needs one"""
        for v in mapping:
            f.index(v)
        missing = [v for v in f.labels if v not in mapping]
        if missing:
            raise DefinitionError(f"no transition given for {missing}", code='invalid_pairing')
        return cls(tuple(mapping[v] for v in f.labels))

    def as_mapping(self, f):
        return dict(zip(f.labels, self.choices))

    def with_choice(self, i, choice):
        choices = list(self.choices)
        choices[i] = choice
        return TransitionSystem(tuple(choices))

    def partners(self, f):
        if len(self.choices) != f.n:
            raise DimensionMismatchError(f"{len(self.choices)} transitions for {f.n} vertices")
        partner = [0] * f.half_edge_count
        for half_edges, choice in zip(f.incident, self.choices):
            for p, q in PAIRINGS[choice]:
                partner[half_edges[p]] = half_edges[q]
                partner[half_edges[q]] = half_edges[p]
        return partner


def _trace(f, partner):
    used = [False] * len(f.graph.edges)
    trails = []
    for k in range(len(used)):
        if used[k]:
            continue
        start = h = 2 * k
        trail = []
        while True:
            used[h >> 1] = True
            trail.append(h)
            h = partner[h ^ 1]
            if h == start:
                break
        trails.append(tuple(trail))
    return tuple(trails)


@dataclass(frozen=True)
class CircuitPartition:
    four_regular: HalfEdgeGraph
    transitions: TransitionSystem
    trails: tuple

    def __post_init__(self):
        if sum(len(trail) for trail in self.trails) != len(self.four_regular.graph.edges):
            raise InvariantViolation("trails do not use every edge exactly once")

    @property
    def size(self):
        return len(self.trails)

    @cached_property
    def partner(self):
        return self.transitions.partners(self.four_regular)

    @cached_property
    def owners(self):
        """Half-edge -> index of the trail through its edge"""
        owner = {}
        for t, trail in enumerate(self.trails):
            for h in trail:
                owner[h] = owner[h ^ 1] = t
        return owner

    def vertex_sequence(self, t):
        f = self.four_regular
        return [f.labels[f.vertex_of(h)] for h in self.trails[t]]

    def edge_sets(self):
        edge_labels = self.four_regular.graph.edge_labels
        return [sorted(edge_labels[h >> 1] for h in trail) for trail in self.trails]


def partition_from_transitions(f, t):
    return CircuitPartition(f, t, _trace(f, t.partners(f)))


def all_transition_systems(f):
    for choices in product(range(3), repeat=f.n):
        yield TransitionSystem(choices)


class EulerSystem(CircuitPartition):
    """A circuit partition with one trail per connected component, each oriented as stored"""

    def __post_init__(self):
        super().__post_init__()
        if self.size != self.four_regular.component_count:
            raise DefinitionError(
                f"{self.size} circuits for {self.four_regular.component_count} components is not an Euler system"
            )

    @cached_property
    def visits(self):
        """Vertex index -> its two ``(arriving, leaving)`` half-edge pairs in trail order"""
        f = self.four_regular
        seen = {i: [] for i in range(f.n)}
        for trail in self.trails:
            for previous, h in zip(trail[-1:] + trail[:-1], trail):
                seen[f.vertex_of(h)].append((previous ^ 1, h))
        return seen


def _transitions_of(f, trails):
    partner = {}
    for trail in trails:
        for previous, h in zip(trail[-1:] + trail[:-1], trail):
            partner[previous ^ 1] = h
            partner[h] = previous ^ 1
    return TransitionSystem(
        tuple(f.choice_pairing(half_edges[0], partner[half_edges[0]]) for half_edges in f.incident)
    )


def euler_system(f):
    """One Euler circuit per component by Hierholzer's algorithm, started at the lowest vertex"""
    graph = f.graph.to_networkx()
    trails = []
    for component in sorted(nx.connected_components(graph), key=min):
        trail = []
        for u, _, k in nx.eulerian_circuit(graph.subgraph(component), source=min(component), keys=True):
            trail.append(2 * k if f.graph.edges[k][0] == u else 2 * k + 1)
        trails.append(tuple(trail))
    return EulerSystem(f, _transitions_of(f, trails), tuple(trails))


def euler_system_from_transitions(f, t):
    return EulerSystem(f, t, _trace(f, t.partners(f)))


def interlacement(c):
    """Unlooped graph on V(F); v, w adjacent when they alternate v..w..v..w on a circuit"""
    f = c.four_regular
    edges = []
    for trail in c.trails:
        seen = {}
        for position, h in enumerate(trail):
            seen.setdefault(f.vertex_of(h), []).append(position)
        for i, j in combinations(sorted(seen), 2):
            (a1, a2), (b1, b2) = seen[i], seen[j]
            if (a1 < b1 < a2) != (a1 < b2 < a2):
                edges.append((f.labels[i], f.labels[j]))
    return LoopedSimpleGraph.from_edges(f.labels, edges)


def _classify(partner, arriving, other_in, own_out, other_out):
    leaving = partner[arriving]
    if leaving == own_out:
        return TransitionType.PHI
    if leaving == other_out:
        return TransitionType.CHI
    if leaving == other_in:
        return TransitionType.PSI
    raise InvariantViolation(f"half-edge {leaving} is not at the vertex of {arriving}")


def transition_type(c, p, v):
    i = c.four_regular.index(v)
    (in0, out0), (in1, out1) = c.visits[i]
    partner = p.partner
    kind = _classify(partner, in0, in1, out0, out1)
    if settings.FOUR_REGULAR_ORIENTATION_AUDIT:
        other_edge = _classify(partner, in1, in0, out1, out0)
        reversed_orientation = _classify(partner, out0, out1, in0, in1)
        if other_edge != kind or reversed_orientation != kind:
            raise InvariantViolation(
                f"transition at {v} read as {kind}, {other_edge} and {reversed_orientation}"
            )
    return TransitionType(kind)


def transition_types(c, p):
    return {v: transition_type(c, p, v) for v in c.four_regular.labels}


def relative_interlacement(c, p):
    """Interlacement of C without its phi vertices, with a loop on every psi vertex"""
    f = c.four_regular
    types = transition_types(c, p)
    looped = [v for v in f.labels if types[v] == TransitionType.PSI]
    g = LoopedSimpleGraph.from_edges(f.labels, interlacement(c).edges(), looped)
    return induced(g, [v for v in f.labels if types[v] != TransitionType.PHI])


def inconsistent_choice(c, v):
    """The transition at ``v`` pairing the two half-edges C enters ``v`` through"""
    f = c.four_regular
    (in0, _), (in1, _) = c.visits[f.index(v)]
    return f.choice_pairing(in0, in1)


def kappa(c, v):
    """C * v: C with the orientation-inconsistent transition at v"""
    f = c.four_regular
    i = f.index(v)
    return euler_system_from_transitions(f, c.transitions.with_choice(i, inconsistent_choice(c, v)))


def compatible_euler_system(f, p):
    """An Euler system that never follows P, by kappa at each vertex where it does"""
    c = euler_system(f)
    for v in f.labels:
        if transition_type(c, p, v) == TransitionType.PHI:
            logger.debug("kappa at %s to leave the transition of the partition", v)
            c = kappa(c, v)
    return c


def parse_four_regular(graph, transitions=None):
    """
    A half-edge graph and, when ``transitions`` maps every vertex to a choice,
    its circuit partition; otherwise the partition of its Euler system.
    """
    if isinstance(graph, LoopedSimpleGraph):
        graph = graph.as_multigraph()
    f = HalfEdgeGraph.from_multigraph(graph)
    if transitions:
        return f, partition_from_transitions(f, TransitionSystem.from_mapping(f, transitions))
    return f, euler_system(f)
