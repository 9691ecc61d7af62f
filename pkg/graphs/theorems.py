"""Executable properties of graph operations"""
from .graph import local_complement, nullity_oracle, reconstruct_from_nullity_oracle, simplify


def local_complement_entrywise(g, v):
    """Compare G^v against the case-by-case description of local complementation"""
    lc = local_complement(g, v)
    if lc.labels != g.labels:
        return False
    nbrs = set(g.neighbors(v))
    for w in g.labels:
        expected_loop = g.is_looped(w) != (w in nbrs)
        if lc.is_looped(w) != expected_loop:
            return False
        for x in g.labels:
            if x == w:
                continue
            toggled = w != v and x != v and w in nbrs and x in nbrs
            if lc.has_edge(w, x) != (g.has_edge(w, x) != toggled):
                return False
    return True


def local_complement_is_involution(g, v):
    return local_complement(local_complement(g, v), v) == g


def reconstruction_inverts(g):
    return reconstruct_from_nullity_oracle(g.labels, nullity_oracle(g)) == g


def simplify_keeps_adjacency(mg):
    s = simplify(mg)
    for a, b in mg.edges:
        if not s.adj.entry(a, b):
            return False
    for i in range(mg.n):
        for j in range(mg.n):
            if s.adj.entry(i, j) and not any({a, b} == {i, j} for a, b in mg.edges):
                return False
    return True
