"""Executable properties of binary matroids"""
from itertools import product

import networkx as nx

from gf2.linalg import Subspace, popcount, symmetrize_nullspace

from .binary import (
    circuits, contract, delete, dual, from_matrix, from_subspace, is_coloop, is_loop, polygon_matroid,
)


def decompose_into_circuits(vector, circuit_list):
    """Greedily split a cycle-space vector into disjoint circuits, or return None"""
    parts = []
    while vector:
        circuit = next((c for c in circuit_list if c & vector == c), None)
        if circuit is None:
            return None
        parts.append(circuit)
        vector ^= circuit
    return parts


def circuit_axioms(m):
    """Circuit axioms: no empty circuit, no nesting, elimination, and disjoint decomposition"""
    cs = sorted(circuits(m))
    if 0 in cs:
        return False
    for c1 in cs:
        for c2 in cs:
            if c1 != c2 and c1 & c2 == c1:
                return False
            if c1 != c2 and c1 & c2:
                symmetric = c1 ^ c2
                if not any(c & symmetric == c for c in cs):
                    return False
    return all(decompose_into_circuits(v, cs) is not None for v in m.cycle_space.vectors())


def cycle_space_round_trip(w, labels):
    m = from_subspace(w, labels)
    return m.cycle_space == w and Subspace.span(w.ambient_dim, circuits(m)) == w


def dual_is_involution(m):
    return dual(dual(m)) == m


def deletion_contraction_duality(m, v):
    return dual(delete(m, v)) == contract(dual(m), v)


def loops_and_coloops_delete_like_contract(m, v):
    return (is_loop(m, v) or is_coloop(m, v)) == (delete(m, v) == contract(m, v))


def rank_axioms(m):
    """Rank is bounded by size, monotone, unit-increase and submodular on every subset"""
    n = m.size
    ranks = [m.rank_of_mask(s) for s in range(1 << n)]
    for s in range(1 << n):
        if not 0 <= ranks[s] <= popcount(s):
            return False
        for i in range(n):
            t = s | (1 << i)
            if not ranks[s] <= ranks[t] <= ranks[s] + 1:
                return False
    for s, t in product(range(1 << n), repeat=2):
        if ranks[s | t] + ranks[s & t] > ranks[s] + ranks[t]:
            return False
    return True


def symmetrization_keeps_matroid(a, labels):
    return from_matrix(symmetrize_nullspace(a), labels) == from_matrix(a, labels)


def simple_cycle_edge_sets(g):
    """Edge masks of the cycles of a multigraph, by direct enumeration"""
    found = set()
    for s in range(1, 1 << len(g.edges)):
        chosen = [k for k in range(len(g.edges)) if s >> k & 1]
        degree = {}
        for k in chosen:
            a, b = g.edges[k]
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        sub = nx.MultiGraph()
        sub.add_nodes_from(degree)
        sub.add_edges_from(g.edges[k] for k in chosen)
        if nx.is_connected(sub):
            found.add(s)
    return frozenset(found)


def polygon_circuits_are_cycles(g):
    return circuits(polygon_matroid(g)) == simple_cycle_edge_sets(g)
