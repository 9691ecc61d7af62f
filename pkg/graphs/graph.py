"""
Looped simple graphs and multigraphs.

A looped simple graph is held by its adjacency matrix over GF(2): the diagonal
entry of a vertex is 1 exactly when it carries a loop. Label order fixes the
matrix index order and is preserved by every operation.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx
from django.db import models

from gf2.linalg import BitMatrix, bit_positions, mask_of, principal_nullity, principal_submatrix
from matroid_lab.exceptions import (
    DefinitionError, DimensionMismatchError, InconsistentOracleError, UnknownElementError,
)

logger = logging.getLogger(__name__)


class VariantKind(models.TextChoices):
    PLAIN = 'plain', 'G(v): v unlooped'
    LOOP = 'loop', 'G(v,l): v looped'
    LOOP_ISOLATE = 'loop_isolate', 'G(v,li): v looped and isolated'


class PivotKind(models.TextChoices):
    PIVOT = 'pivot', 'Pivot (looped vertex)'
    DUAL_PIVOT = 'dual_pivot', 'Dual pivot (unlooped vertex)'


def _check_labels(labels):
    if len(set(labels)) != len(labels):
        raise DimensionMismatchError(f"vertex labels are not distinct: {list(labels)}")


@dataclass(frozen=True)
class LoopedSimpleGraph:
    labels: tuple
    adj: BitMatrix

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))
        _check_labels(self.labels)
        n = len(self.labels)
        if self.adj.rows != n or self.adj.cols != n:
            raise DimensionMismatchError(f"{n} labels against a {self.adj.rows}x{self.adj.cols} matrix")
        if not self.adj.is_symmetric():
            raise DimensionMismatchError("adjacency matrix is not symmetric")

    @classmethod
    def from_edges(cls, labels, edges=(), loops=()):
        labels = tuple(labels)
        _check_labels(labels)
        position = {v: i for i, v in enumerate(labels)}
        data = [0] * len(labels)

        def lookup(v):
            try:
                return position[v]
            except KeyError:
                raise UnknownElementError(f"unknown vertex {v!r}") from None

        for v in loops:
            i = lookup(v)
            data[i] |= 1 << i
        for u, v in edges:
            i, j = lookup(u), lookup(v)
            if i == j:
                data[i] |= 1 << i
                continue
            data[i] |= 1 << j
            data[j] |= 1 << i
        return cls(labels, BitMatrix(len(labels), len(labels), tuple(data)))

    @classmethod
    def empty(cls, labels):
        labels = tuple(labels)
        return cls(labels, BitMatrix.zeros(len(labels), len(labels)))

    @property
    def n(self):
        return len(self.labels)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def looped_mask(self):
        return mask_of(i for i in range(self.n) if self.adj.data[i] >> i & 1)

    def index(self, v):
        try:
            return self.labels.index(v)
        except ValueError:
            raise UnknownElementError(f"unknown vertex {v!r}") from None

    def mask(self, vertices):
        return mask_of(self.index(v) for v in vertices)

    def labels_of(self, mask):
        return tuple(self.labels[i] for i in bit_positions(mask))

    def is_looped(self, v):
        i = self.index(v)
        return bool(self.adj.data[i] >> i & 1)

    def neighbor_mask(self, i):
        return self.adj.data[i] & ~(1 << i)

    def neighbors(self, v):
        return self.labels_of(self.neighbor_mask(self.index(v)))

    def has_edge(self, u, v):
        i, j = self.index(u), self.index(v)
        return i != j and bool(self.adj.data[i] >> j & 1)

    def is_isolated(self, v):
        return self.neighbor_mask(self.index(v)) == 0

    def loops(self):
        return self.labels_of(self.looped_mask)

    def edges(self):
        return [
            (self.labels[i], self.labels[j])
            for i in range(self.n)
            for j in bit_positions(self.adj.data[i])
            if j > i
        ]

    def as_multigraph(self):
        pairs = [(i, i) for i in bit_positions(self.looped_mask)]
        pairs += [(self.index(u), self.index(v)) for u, v in self.edges()]
        return MultiGraph(self.labels, tuple(pairs))

    def to_networkx(self):
        graph = nx.Graph()
        for i, v in enumerate(self.labels):
            graph.add_node(v, looped=bool(self.adj.data[i] >> i & 1))
        graph.add_edges_from(self.edges())
        return graph

    def __str__(self):
        edges = " ".join(f"{u}-{v}" for u, v in self.edges())
        return f"vertices: {' '.join(self.labels)}; loops: {' '.join(self.loops())}; edges: {edges}"


@dataclass(frozen=True)
class MultiGraph:
    """Vertices plus a list of edges given as index pairs; loops and parallels allowed"""

    labels: tuple
    edges: tuple
    edge_labels: tuple = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))
        object.__setattr__(self, 'edges', tuple(tuple(e) for e in self.edges))
        _check_labels(self.labels)
        for u, v in self.edges:
            if not (0 <= u < len(self.labels) and 0 <= v < len(self.labels)):
                raise UnknownElementError(f"edge endpoint out of range in {(u, v)}")
        if self.edge_labels is None:
            object.__setattr__(self, 'edge_labels', tuple(f"e{k}" for k in range(len(self.edges))))
        else:
            object.__setattr__(self, 'edge_labels', tuple(self.edge_labels))
        if len(self.edge_labels) != len(self.edges):
            raise DimensionMismatchError("one label per edge is required")
        if len(set(self.edge_labels)) != len(self.edge_labels):
            raise DimensionMismatchError("edge labels are not distinct")

    @classmethod
    def from_labeled(cls, labels, edges, edge_labels=None):
        labels = tuple(labels)
        position = {v: i for i, v in enumerate(labels)}
        try:
            pairs = tuple((position[u], position[v]) for u, v in edges)
        except KeyError as exc:
            raise UnknownElementError(f"unknown vertex {exc.args[0]!r}") from None
        return cls(labels, pairs, edge_labels)

    @property
    def n(self):
        return len(self.labels)

    def index(self, v):
        try:
            return self.labels.index(v)
        except ValueError:
            raise UnknownElementError(f"unknown vertex {v!r}") from None

    def degree(self, v):
        i = self.index(v)
        return sum((a == i) + (b == i) for a, b in self.edges)

    def labeled_edges(self):
        return [(self.labels[a], self.labels[b]) for a, b in self.edges]

    def is_simple(self):
        """True when no vertex has two loops and no pair has two edges"""
        keys = [tuple(sorted(e)) for e in self.edges]
        return len(set(keys)) == len(keys)

    def to_networkx(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for k, (a, b) in enumerate(self.edges):
            graph.add_edge(a, b, key=k)
        return graph

    def component_count(self):
        return nx.number_connected_components(self.to_networkx())


def simplify(g):
    """Looped simple graph with the same loops and adjacencies as ``g``"""
    if isinstance(g, LoopedSimpleGraph):
        return g
    return LoopedSimpleGraph.from_edges(g.labels, g.labeled_edges())


def local_complement(g, v):
    """
    Toggle the loop on every neighbor of ``v`` and the adjacency between every
    pair of distinct neighbors; ``v`` itself is unchanged.
    """
    g = simplify(g)
    i = g.index(v)
    nbrs = g.neighbor_mask(i)
    data = list(g.adj.data)
    for u in bit_positions(nbrs):
        data[u] ^= nbrs
    return LoopedSimpleGraph(g.labels, BitMatrix(g.n, g.n, tuple(data)))


def loop_complement(g, v):
    i = g.index(v)
    return LoopedSimpleGraph(g.labels, g.adj.with_entry(i, i, not g.adj.entry(i, i)))


def induced(g, s):
    keep = sorted({g.index(v) for v in s})
    return LoopedSimpleGraph(tuple(g.labels[i] for i in keep), principal_submatrix(g.adj, keep))


def delete_vertex(g, v):
    """G - v"""
    i = g.index(v)
    return induced(g, [u for k, u in enumerate(g.labels) if k != i])


def delete_vertices(g, vertices):
    drop = g.mask(vertices)
    return induced(g, g.labels_of(g.full_mask & ~drop))


def variant(g, v, kind):
    """G(v), G(v,l) or G(v,li)"""
    i = g.index(v)
    kind = VariantKind(kind)
    data = list(g.adj.data)
    if kind == VariantKind.PLAIN:
        data[i] &= ~(1 << i)
    elif kind == VariantKind.LOOP:
        data[i] |= 1 << i
    else:
        for u in bit_positions(g.neighbor_mask(i)):
            data[u] &= ~(1 << i)
        data[i] = 1 << i
    return LoopedSimpleGraph(g.labels, BitMatrix(g.n, g.n, tuple(data)))


def pivot_ops(g, v, kind):
    kind = PivotKind(kind)
    looped = g.is_looped(v)
    if kind == PivotKind.PIVOT and not looped:
        raise DefinitionError(f"pivot is only defined on a looped vertex; {v!r} is unlooped")
    if kind == PivotKind.DUAL_PIVOT and looped:
        raise DefinitionError(f"dual pivot is only defined on an unlooped vertex; {v!r} is looped")
    return local_complement(g, v)


def nullity_oracle(g):
    """Map a set of vertex labels to the nullity of its induced adjacency matrix"""
    def oracle(vertices):
        return principal_nullity(g.adj, g.mask(vertices))
    return oracle


# (loop status of v, loop status of w) -> {nullity: adjacent}
_PAIR_TABLE = {
    (False, False): {0: True, 2: False},
    (True, False): {0: True, 1: False},
    (False, True): {0: True, 1: False},
    (True, True): {1: True, 0: False},
}


def reconstruct_from_nullity_oracle(labels, oracle):
    """Rebuild the looped simple graph whose 1- and 2-vertex nullities match ``oracle``"""
    labels = tuple(labels)
    looped = {}
    for v in labels:
        value = oracle(frozenset([v]))
        if value not in (0, 1):
            raise InconsistentOracleError(f"nullity {value} of {{{v}}} is impossible")
        looped[v] = value == 0

    edges = []
    for i, v in enumerate(labels):
        for w in labels[i + 1:]:
            value = oracle(frozenset([v, w]))
            table = _PAIR_TABLE[(looped[v], looped[w])]
            if value not in table:
                raise InconsistentOracleError(
                    f"nullity {value} of {{{v}, {w}}} does not fit their loop status"
                )
            if table[value]:
                edges.append((v, w))
    return LoopedSimpleGraph.from_edges(labels, edges, [v for v in labels if looped[v]])
