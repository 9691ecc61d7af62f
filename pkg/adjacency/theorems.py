"""Executable properties of adjacency matroids, minors and the tripartition"""
from graphs.generators import looped_path, looped_triangle, triangle
from graphs.graph import VariantKind, delete_vertex, local_complement, loop_complement, simplify
from matroids.binary import binary_uniform, contract, delete, is_coloop, isomorphic

from .minors import (
    adjacency_matroid, contract_via_lc, delete_via_subgraph, is_triple_coloop, trio, variant_matroid,
    with_coloop,
)
from .tripartition import EQUAL_VARIANTS, CaseTag, case_counts, classify_vertex, tripartition_report


def contraction_matches_lc(g, v):
    return contract_via_lc(g, v).result == contract(adjacency_matroid(g), v)


def contraction_ignores_neighbor_choice(g, v):
    """Every neighbor of an unlooped v gives the same contraction"""
    g = simplify(g)
    if g.is_looped(v):
        return True
    expected = contract(adjacency_matroid(g), v)
    return all(contract_via_lc(g, v, via=w).result == expected for w in g.neighbors(v))


def deletion_matches_subgraph(g, v):
    """Deleting v from M_A(G) agrees with M_A(G - v) whenever v is not a coloop"""
    m = adjacency_matroid(g)
    if is_coloop(m, v):
        return True
    return delete(m, v) == adjacency_matroid(delete_vertex(g, v))


def deletion_matches_subgraph_sharp(g, v):
    m = adjacency_matroid(g)
    if not is_triple_coloop(g, v) and delete(m, v) != adjacency_matroid(delete_vertex(g, v)):
        return False
    return delete_via_subgraph(g, v) == delete(m, v)


def local_complement_keeps_deletion(g, v):
    return delete(adjacency_matroid(g), v) == delete(adjacency_matroid(local_complement(g, v)), v)


def local_complement_relations(g, v):
    """
    Unlooped v: M_A(G^v) = M_A(G). Looped v: equal when v is a coloop of
    both, neither a triple coloop; otherwise v is a triple coloop of the
    matroid where it is a coloop, and that matroid is the other with v made
    a coloop.
    """
    g = simplify(g)
    gv = local_complement(g, v)
    m, mv = adjacency_matroid(g), adjacency_matroid(gv)
    if not g.is_looped(v):
        return m == mv
    c, cv = is_coloop(m, v), is_coloop(mv, v)
    if c and cv:
        return m == mv and not is_triple_coloop(g, v) and not is_triple_coloop(gv, v)
    if not c and not cv:
        return False
    m1, (g2, m2) = (m, (gv, mv)) if not c else (mv, (g, m))
    return is_triple_coloop(g2, v) and m2 == with_coloop(delete(m1, v), v, g.labels)


def trio_holds(g, v):
    result = trio(g, v)
    return set(result.equal_pair) == set(EQUAL_VARIANTS[classify_vertex(g, v).tag])


def isolated_variant_splits(g, v):
    """M_A(G(v,li)) = M_A(G - v) + coloop v = (M_A(G^v(v,l))/v) + coloop v, with equal nullities"""
    g = simplify(g)
    isolated = variant_matroid(g, v, VariantKind.LOOP_ISOLATE)
    without = adjacency_matroid(delete_vertex(g, v))
    looped_lc = variant_matroid(local_complement(g, v), v, VariantKind.LOOP)
    contracted = contract(looped_lc, v)
    return (
        is_coloop(isolated, v)
        and isolated == with_coloop(without, v, g.labels)
        and isolated == with_coloop(contracted, v, g.labels)
        and len({isolated.nullity, without.nullity, contracted.nullity, looped_lc.nullity}) == 1
    )


def toggling_loop_leaves_a_coloop(g, v):
    g = simplify(g)
    return is_coloop(adjacency_matroid(g), v) or is_coloop(adjacency_matroid(loop_complement(g, v)), v)


def triple_coloop_by_cycle_spaces(g, v):
    """Triple coloop test through Z(G(v)) = Z(G(v,l)) strictly inside Z(G(v,li))"""
    z = {kind: variant_matroid(g, v, kind).cycle_space for kind in VariantKind}
    return z[VariantKind.PLAIN] == z[VariantKind.LOOP] and z[VariantKind.LOOP] < z[VariantKind.LOOP_ISOLATE]


def triple_coloop_tests_agree(g, v):
    return is_triple_coloop(g, v) == triple_coloop_by_cycle_spaces(g, v)


def _outer_case_holds(g, gv, v):
    """Relations when v is a coloop of both M_A(G(v)) and M_A(G(v,l))"""
    labels = g.labels
    plain, loop, isolated = (variant_matroid(g, v, k) for k in VariantKind)
    lc_plain, lc_loop, lc_isolated = (variant_matroid(gv, v, k) for k in VariantKind)
    without_v = delete(lc_loop, v)
    return (
        not is_coloop(lc_loop, v)
        and isolated == with_coloop(contract(lc_loop, v), v, labels)
        and plain == loop == lc_plain == lc_isolated == with_coloop(without_v, v, labels)
        and isolated.nullity == lc_loop.nullity == plain.nullity + 1
        and isolated.cycle_space.intersection(lc_loop.cycle_space) == plain.cycle_space
        and delete_vertex(gv, v).looped_mask != 0
    )


def tripartition_relations(g, v):
    g = simplify(g)
    gv = local_complement(g, v)
    case = classify_vertex(g, v).tag
    lc_case = classify_vertex(gv, v).tag
    six = [variant_matroid(x, v, k) for x in (g, gv) for k in VariantKind]
    distinct = set(six)
    if len(distinct) not in (2, 3) or sum(not is_coloop(m, v) for m in distinct) != 1:
        return False
    if case == CaseTag.CASE1:
        return lc_case == CaseTag.CASE2 and _outer_case_holds(g, gv, v)
    if case == CaseTag.CASE2:
        return lc_case == CaseTag.CASE1 and _outer_case_holds(gv, g, v)
    plain, loop, isolated = (variant_matroid(g, v, k) for k in VariantKind)
    lc_plain, lc_loop, lc_isolated = (variant_matroid(gv, v, k) for k in VariantKind)
    return (
        lc_case == CaseTag.CASE3
        and lc_plain == plain
        and loop == lc_loop == isolated == lc_isolated == with_coloop(delete(plain, v), v, g.labels)
        and plain.nullity == loop.nullity + 1
        and loop.cycle_space < plain.cycle_space
    )


def fibers_partition_vertices(g):
    report = tripartition_report(g)
    return sum(case_counts(report).values()) == len(simplify(g).labels)


def matroid_and_tripartition_are_independent():
    """
    K3 and its local complement share a matroid but not a tripartition;
    K3 with one loop and that local complement share the case counts but
    not a matroid.
    """
    k3, k3l, p3 = triangle(), looped_triangle(), looped_path()
    same_matroid = isomorphic(adjacency_matroid(k3), adjacency_matroid(p3)) is not None
    different_cases = case_counts(tripartition_report(k3)) != case_counts(tripartition_report(p3))
    different_matroid = isomorphic(adjacency_matroid(k3l), adjacency_matroid(p3)) is None
    same_cases = case_counts(tripartition_report(k3l)) == case_counts(tripartition_report(p3))
    return same_matroid and different_cases and different_matroid and same_cases


def worked_examples_hold():
    """Matroids, single-vertex minors and tripartitions of K3, K3 with one loop and the looped path"""
    k3, k3l, p3 = triangle(), looped_triangle(), looped_path()
    pairs = (
        (adjacency_matroid(k3), binary_uniform(3, 2)),
        (adjacency_matroid(k3l), binary_uniform(3, 3)),
        (adjacency_matroid(p3), binary_uniform(3, 2)),
        (contract(adjacency_matroid(k3), 'a'), binary_uniform(2, 1)),
        (delete(adjacency_matroid(k3), 'a'), binary_uniform(2, 2)),
        (contract(adjacency_matroid(k3l), 'b'), binary_uniform(2, 2)),
        (contract(adjacency_matroid(p3), 'b'), binary_uniform(2, 1)),
    )
    if any(isomorphic(m, expected) is None for m, expected in pairs):
        return False
    tags = {
        name: tuple(case.tag for case in tripartition_report(g).values())
        for name, g in (('k3', k3), ('k3l', k3l), ('p3', p3))
    }
    return (
        tags['k3'] == (CaseTag.CASE3,) * 3
        and sorted(tags['k3l']) == [CaseTag.CASE2, CaseTag.CASE2, CaseTag.CASE3]
        and tags['p3'] == (CaseTag.CASE3, CaseTag.CASE2, CaseTag.CASE2)
    )


VERTEX_PROPERTIES = (
    ('contraction through local complementation', contraction_matches_lc),
    ('contraction independent of neighbor choice', contraction_ignores_neighbor_choice),
    ('deletion of a non-coloop', deletion_matches_subgraph),
    ('deletion of a non-triple-coloop', deletion_matches_subgraph_sharp),
    ('deletion unchanged by local complementation', local_complement_keeps_deletion),
    ('local complementation and the matroid', local_complement_relations),
    ('two of three variant matroids coincide', trio_holds),
    ('isolated looped variant splits off a coloop', isolated_variant_splits),
    ('toggling a loop leaves a coloop', toggling_loop_leaves_a_coloop),
    ('triple coloop through cycle spaces', triple_coloop_tests_agree),
    ('tripartition case relations', tripartition_relations),
)
