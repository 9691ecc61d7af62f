"""Executable properties of Euler systems, circuit partitions and touch-graphs"""
from itertools import combinations

from adjacency.minors import adjacency_matroid, with_coloop
from gf2.linalg import nullity, nullspace, orthogonal_complement, rank
from graphs.graph import LoopedSimpleGraph, delete_vertex, delete_vertices, local_complement, simplify
from matroids.binary import cycle_space, delete, dual, is_loop, polygon_matroid, rank_of

from .euler import (
    TransitionType, all_transition_systems, compatible_euler_system, euler_system, inconsistent_choice,
    interlacement, kappa, partition_from_transitions, relative_interlacement, transition_type,
    transition_types,
)
from .touch import is_realizable, realize_touch_graph, touch_graph


def circuit_nullity_formula(c, p):
    """nu(I_P(C)) = |P| - c(F)"""
    return nullity(relative_interlacement(c, p).adj) == p.size - c.four_regular.component_count


def circuit_nullity_for_every_partition(f):
    c = euler_system(f)
    return all(circuit_nullity_formula(c, partition_from_transitions(f, t)) for t in all_transition_systems(f))


def euler_partition_follows_itself(f):
    c = euler_system(f)
    return (
        c.size == f.component_count
        and all(kind == TransitionType.PHI for kind in transition_types(c, c).values())
        and relative_interlacement(c, c).n == 0
    )


def kappa_is_an_involution(f, v):
    c = euler_system(f)
    cv = kappa(c, v)
    return kappa(cv, v).transitions == c.transitions and transition_type(c, cv, v) == TransitionType.PSI


def kappa_local_complements_interlacement(f, v):
    c = euler_system(f)
    lc = local_complement(interlacement(c), v)
    return interlacement(kappa(c, v)) == LoopedSimpleGraph.from_edges(lc.labels, lc.edges())


def two_of_three_transitions_close_a_loop(p, v):
    """With the other transitions fixed, exactly one transition at v joins two different circuits"""
    f = p.four_regular
    i = f.index(v)
    joining = 0
    for choice in range(3):
        q = partition_from_transitions(f, p.transitions.with_choice(i, choice))
        if len({q.owners[h] for h in f.incident[i]}) == 2:
            joining += 1
    return joining == 1


def compatible_system_avoids_partition(f, p):
    c = compatible_euler_system(f, p)
    kinds = transition_types(c, p).values()
    return TransitionType.PHI not in kinds and relative_interlacement(c, p).labels == f.labels


def nullspace_complements_touch_cycles(c, p):
    """For compatible (C, P) the nullspace of I_P(C) is orthogonal to the cycle space of Tch(P)"""
    ip = relative_interlacement(c, p)
    return orthogonal_complement(nullspace(ip.adj)) == cycle_space(polygon_matroid(touch_graph(p)))


def touch_polygon_is_dual(c, p):
    """For compatible (C, P): M_A(I_P(C))* is the polygon matroid of Tch(P)"""
    return dual(adjacency_matroid(relative_interlacement(c, p))) == polygon_matroid(touch_graph(p))


def incidence_matches_rank(c, p):
    """Two circuits of P meet at x exactly when deleting x keeps the rank of I_P(C)"""
    f = c.four_regular
    ip = relative_interlacement(c, p)
    tch = touch_graph(p)
    full = rank(ip.adj)
    for x in ip.labels:
        a, b = tch.edges[f.index(x)]
        if (a != b) != (rank(delete_vertex(ip, x).adj) == full):
            return False
    return True


def rank_conditions_agree(c, p, xs):
    """Independence in Tch(P), unchanged rank of I_P(C) - X and one fewer circuit per step"""
    f = c.four_regular
    ip = relative_interlacement(c, p)
    independent = rank_of(polygon_matroid(touch_graph(p)), xs) == len(xs)
    keeps_rank = rank(delete_vertices(ip, xs).adj) == rank(ip.adj)
    merging = True
    t = p.transitions
    for step, x in enumerate(xs, start=1):
        i = f.index(x)
        t = t.with_choice(i, c.transitions.choices[i])
        if partition_from_transitions(f, t).size != p.size - step:
            merging = False
            break
    return independent == keeps_rank == merging


def rank_conditions_for_every_subset(c, p):
    labels = relative_interlacement(c, p).labels
    return all(
        rank_conditions_agree(c, p, xs)
        for k in range(len(labels) + 1)
        for xs in combinations(labels, k)
    )


def touch_graph_counts(p):
    f = p.four_regular
    tch = touch_graph(p)
    return tch.n == p.size and len(tch.edges) == f.n and tch.component_count() == f.component_count


def local_complement_scenarios(c, p, v):
    """
    For compatible (C, P): an unlooped v of I_P(C) keeps P compatible with C * v
    and I_P(C * v) = I_P(C)^v. A looped v gives I_P'(C * v) = I_P(C)^v for the P'
    taking the orientation-inconsistent transition of C * v at v, and the two
    touch-graph matroids agree when v is a loop of both, or otherwise differ by
    replacing v with a coloop.
    """
    f = c.four_regular
    ip = relative_interlacement(c, p)
    cv = kappa(c, v)
    lc = local_complement(ip, v)
    if not ip.is_looped(v):
        kinds = transition_types(cv, p).values()
        return TransitionType.PHI not in kinds and relative_interlacement(cv, p) == lc

    changed = partition_from_transitions(f, p.transitions.with_choice(f.index(v), inconsistent_choice(cv, v)))
    if relative_interlacement(cv, changed) != lc:
        return False
    here = polygon_matroid(touch_graph(p))
    there = polygon_matroid(touch_graph(changed))
    loop_here, loop_there = is_loop(here, v), is_loop(there, v)
    if loop_here and loop_there:
        return here == there
    if loop_here == loop_there:
        return False
    looped, other = (here, there) if loop_here else (there, here)
    return dual(looped) == with_coloop(delete(dual(other), v), v, f.labels)


def compatible_pair_properties(f, p):
    """Every check that needs a compatible Euler system for P"""
    c = compatible_euler_system(f, p)
    return (
        nullspace_complements_touch_cycles(c, p)
        and touch_polygon_is_dual(c, p)
        and rank_conditions_for_every_subset(c, p)
        and all(local_complement_scenarios(c, p, v) for v in f.labels)
    )


def realization_reproduces_graph(g):
    """Tch(P) of the realization is g; graphs with an isolated unlooped vertex are out of scope"""
    g = simplify(g)
    if not is_realizable(g):
        return True
    r = realize_touch_graph(g)
    return simplify(r.labeled_touch_graph(g.labels)) == g


FOUR_REGULAR_PROPERTIES = (
    ('circuit-nullity formula over all transition systems', circuit_nullity_for_every_partition),
    ('Euler partition follows its own system', euler_partition_follows_itself),
)

VERTEX_PROPERTIES = (
    ('kappa is an involution with psi at v', kappa_is_an_involution),
    ('kappa local-complements the interlacement graph', kappa_local_complements_interlacement),
)

PARTITION_PROPERTIES = (
    ('compatible Euler system has no phi vertex', compatible_system_avoids_partition),
    ('touch-graph counts', lambda f, p: touch_graph_counts(p)),
    ('circuits meet at x iff rank survives deleting x', lambda f, p: incidence_matches_rank(euler_system(f), p)),
    ('compatible pair: nullspace, duality, rank conditions, local complements', compatible_pair_properties),
    (
        'two of three transitions close a loop',
        lambda f, p: all(two_of_three_transitions_close_a_loop(p, v) for v in f.labels),
    ),
)

GRAPH_PROPERTIES = (
    ('touch-graph realization', realization_reproduces_graph),
)
