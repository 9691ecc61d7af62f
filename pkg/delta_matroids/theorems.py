"""Executable properties of set systems, delta-matroids and graph delta-matroids"""
from adjacency.minors import adjacency_matroid, contract_via_lc
from gf2.linalg import bit_positions, compress, expand, principal_nullity
from graphs.graph import (
    VariantKind, delete_vertex, induced, local_complement, loop_complement as toggle_loop, simplify, variant,
)
from matroid_lab.exceptions import NotGraphicError
from matroids.binary import bases, contract, delete, independent_sets

from .routes import delta_contract, delta_delete, delta_local_complement_matroid, matroid_of_bases
from .set_systems import (
    SetSystem, contract_sys, delete_sys, distance, dual_pivot, dual_pivot_composite, from_graph,
    is_coloop_sys, is_delta_matroid, is_loop_sys, loop_complement, loop_complement_element, matroid_nullity,
    max_as_matroid, max_sys, min_sys, pivot, tilde_contract, tilde_minus, to_graph, vertex_flip_sequence,
    with_coloop_sys,
)


def flips_are_involutions(d, x):
    return (
        pivot(pivot(d, x), x) == d
        and loop_complement(loop_complement(d, x), x) == d
        and dual_pivot(dual_pivot(d, x), x) == d
    )


def parity_rules_match_single_steps(d, x):
    """Multi-element loop complement and dual pivot agree with their element-by-element forms"""
    sequential_loops = d
    sequential_duals = d
    for v in x:
        sequential_loops = loop_complement_element(sequential_loops, v)
        sequential_duals = dual_pivot(sequential_duals, v)
    return (
        loop_complement(d, x) == sequential_loops
        and dual_pivot(d, x) == sequential_duals
        and dual_pivot(d, x) == dual_pivot_composite(d, x)
    )


def dual_pivot_keeps_max(d, x):
    return max_sys(dual_pivot(d, x)) == max_sys(d)


def min_and_max_are_dual(d):
    everything = d.ground
    return (
        min_sys(d) == pivot(max_sys(pivot(d, everything)), everything)
        and max_sys(d) == pivot(min_sys(pivot(d, everything)), everything)
    )


def flips_commute(d, v, w):
    return (
        delete_sys(pivot(d, w), v) == pivot(delete_sys(d, v), w)
        and pivot(dual_pivot(d, v), w) == dual_pivot(pivot(d, w), v)
        and dual_pivot(dual_pivot(d, v), w) == dual_pivot(dual_pivot(d, w), v)
    )


def min_commutes_with_deletion(d, v):
    if not delete_sys(d, v).is_proper:
        return True
    return delete_sys(min_sys(d), v) == min_sys(delete_sys(d, v))


def max_commutes_with_deletion(d, v):
    """Requires a delta-matroid; vacuous when v is a coloop of max(D)"""
    top = max_sys(d)
    if is_coloop_sys(top, v):
        return True
    return delete_sys(top, v) == max_sys(delete_sys(d, v))


def max_deletion_fails_for_set_systems():
    d = SetSystem.from_sets('uvw', [['u'], ['v'], ['v', 'w']])
    top = max_sys(d)
    return not is_coloop_sys(top, 'w') and delete_sys(top, 'w') != max_sys(delete_sys(d, 'w'))


def contraction_commutes_with_max(d, v):
    if not d.is_proper:
        return True
    if not is_loop_sys(d, v) and contract_sys(max_sys(d), v) != max_sys(contract_sys(d, v)):
        return False
    if is_delta_matroid(d) and not is_loop_sys(min_sys(d), v):
        return contract_sys(min_sys(d), v) == min_sys(contract_sys(d, v))
    return True


def loop_complement_after_tilde_deletion(d, v):
    """max(D ~- v + v) keeps the members of max(D * v) that contain v"""
    removed = tilde_minus(d, v)
    if not removed.is_proper:
        return True
    return max_sys(loop_complement(removed, v)) == tilde_contract(max_sys(pivot(d, v)), v)


def two_of_three_maxima_agree(d, v):
    """For delta-matroids D and D + v: two of max(D), max(D * v), max(D + v) coincide"""
    tops = [max_sys(d), max_sys(pivot(d, v)), max_sys(loop_complement(d, v))]
    pairs = [(i, j) for i in range(3) for j in range(i + 1, 3) if tops[i] == tops[j]]
    if len(pairs) != 1:
        return False
    i, j = pairs[0]
    shared = tops[i]
    odd = tops[3 - i - j]
    return (
        with_coloop_sys(delete_sys(odd, v), v, d.ground) == shared
        and matroid_nullity(odd) == matroid_nullity(shared) + 1
    )


def graph_system_is_normal_delta_matroid(g):
    d = from_graph(g)
    return is_delta_matroid(d) and d.is_normal and min_sys(d) == SetSystem(d.ground, frozenset([0]))


def distance_is_principal_nullity(g):
    g = simplify(g)
    d = from_graph(g)
    return all(distance(d, d.sorted_labels(x)) == principal_nullity(g.adj, x) for x in range(1 << g.n))


def graph_round_trip(g):
    g = simplify(g)
    return to_graph(from_graph(g)) == g


def vertex_operations_are_represented(g, v):
    """Vertex deletion, loop toggling and local complementation as set-system operations"""
    g = simplify(g)
    d = from_graph(g)
    flipped = pivot(d, v) if g.is_looped(v) else dual_pivot(d, v)
    return (
        from_graph(delete_vertex(g, v)) == delete_sys(d, v)
        and from_graph(toggle_loop(g, v)) == loop_complement(d, v)
        and from_graph(local_complement(g, v)) == flipped
    )


def flipped_system_is_graphic_iff_normal(g, ops):
    result = vertex_flip_sequence(from_graph(g), ops)
    try:
        to_graph(result)
    except NotGraphicError:
        return not result.is_normal
    return result.is_normal


def max_is_adjacency_matroid(g):
    return max_as_matroid(from_graph(g)).family == bases(adjacency_matroid(g))


def restriction_characterisations(g, labels):
    """Bases, independent sets and the delta-matroid of G[S], all read off D_G"""
    g = simplify(g)
    d = from_graph(g)
    s_mask = d.mask(labels)
    keep = list(bit_positions(s_mask))
    inside = SetSystem(d.ground, frozenset(y for y in d.family if not y & ~s_mask))
    matroid = adjacency_matroid(induced(g, labels))

    basis_masks = frozenset(compress(y, keep) for y in max_sys(inside).family)
    independent = frozenset(
        compress(sub, keep) for y in inside.family for sub in range(y + 1) if sub & y == sub
    )
    union = set()
    for t in range(1 << len(keep)):
        positions = list(bit_positions(t))
        part = adjacency_matroid(induced(g, matroid.sorted_labels(t)))
        union |= {expand(b, positions) for b in bases(part)}

    return (
        basis_masks == bases(matroid)
        and independent == independent_sets(matroid)
        and frozenset(union) == from_graph(induced(g, labels)).family
    )


def delta_routes_agree(g, v):
    """Matroid minors and local complements through D_G equal the matrix results"""
    g = simplify(g)
    m = adjacency_matroid(g)
    gv = local_complement(g, v)
    return (
        matroid_of_bases(max_as_matroid(from_graph(g))) == m
        and delta_delete(g, v) == delete(m, v)
        and delta_contract(g, v) == contract(m, v) == contract_via_lc(g, v).result
        and delta_local_complement_matroid(g, v) == adjacency_matroid(gv)
        and delta_delete(g, v) == delta_delete(gv, v)
    )


def looped_local_complement_ranks(g, v):
    """Looped v that is a non-coloop of one of M_A(G), M_A(G^v): the other has it as coloop and another rank"""
    g = simplify(g)
    if not g.is_looped(v):
        return True
    d = from_graph(g)
    m1 = max_as_matroid(d)
    m2 = max_as_matroid(pivot(d, v))
    c1, c2 = is_coloop_sys(m1, v), is_coloop_sys(m2, v)
    if c1 and c2:
        return m1 == m2
    return (c1 or c2) and matroid_nullity(m1) != matroid_nullity(m2)


def isolated_variant_through_systems(g, v):
    """For looped v: D_G ~- v + v is D_G(v,li), and M_A(G(v,li)) keeps the bases of M_A(G^v) containing v"""
    g = simplify(g)
    if not g.is_looped(v):
        return True
    d = from_graph(g)
    isolated_graph = variant(g, v, VariantKind.LOOP_ISOLATE)
    isolated = adjacency_matroid(isolated_graph)
    lc = adjacency_matroid(local_complement(g, v))
    bit = 1 << g.index(v)
    return (
        loop_complement(tilde_minus(d, v), v) == from_graph(isolated_graph)
        and isolated.nullity == lc.nullity
        and bases(isolated) == frozenset(b for b in bases(lc) if b & bit)
        and (isolated == lc) == (adjacency_matroid(g).nullity >= lc.nullity)
    )


SYSTEM_PROPERTIES = (
    ('flips are involutions', lambda d, v: flips_are_involutions(d, [v])),
    ('min commutes with deletion', min_commutes_with_deletion),
    ('contraction commutes with max', contraction_commutes_with_max),
    ('max(D ~- v + v) filters max(D * v)', loop_complement_after_tilde_deletion),
)

GRAPH_PROPERTIES = (
    ('graph delta-matroid is normal', graph_system_is_normal_delta_matroid),
    ('distance is principal nullity', distance_is_principal_nullity),
    ('graph decoding round trip', graph_round_trip),
    ('max of D_G is the adjacency matroid', max_is_adjacency_matroid),
)

VERTEX_PROPERTIES = (
    ('vertex operations as set-system operations', vertex_operations_are_represented),
    ('delta-matroid routes agree with matrices', delta_routes_agree),
    ('looped local complement changes rank or nothing', looped_local_complement_ranks),
    ('isolated looped variant through set systems', isolated_variant_through_systems),
    ('max commutes with deletion', lambda g, v: max_commutes_with_deletion(from_graph(g), v)),
    ('two of three maxima agree', lambda g, v: two_of_three_maxima_agree(from_graph(g), v)),
)
