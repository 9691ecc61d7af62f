"""
Property suites run by ``manage.py verify``.

Each suite is a generator of ``Outcome`` records in a fixed order: exhaustive
instances by increasing size first, then random instances drawn from the
``random.Random`` it is given. The first failing instance of a property is
therefore also one of the smallest.
"""
from dataclasses import dataclass
from itertools import combinations

from django.conf import settings

from adjacency import theorems as adjacency_theorems
from adjacency.minors import adjacency_matroid
from delta_matroids import theorems as delta_theorems
from delta_matroids.generators import random_flip_sequence, random_set_system
from four_regular import theorems as four_regular_theorems
from four_regular.euler import all_transition_systems, euler_system, partition_from_transitions
from four_regular.generators import four_regular_stream, random_transition_system
from gf2 import theorems as gf2_theorems
from gf2.generators import all_subspaces, random_matrix, random_symmetric_matrix
from graphs import theorems as graph_theorems
from graphs.generators import default_labels, graph_stream, random_multigraph
from graphs.text import render_graph
from matroid_lab.exceptions import ToolkitError
from matroids import theorems as matroid_theorems
from matroids.binary import from_subspace, polygon_matroid
from polynomials import theorems as polynomial_theorems

from .models import Suite

SUBSPACE_MAX_N = 5
RANK_AXIOMS_MAX_N = 3
ALL_PARTITIONS_MAX_N = 3
CIRCUIT_NULLITY_MAX_N = 5
REALIZATION_MAX_N = 6
RANDOM_PARTITIONS = 12
POLYGON_MAX_EDGES = 6


@dataclass(frozen=True)
class Outcome:
    label: str
    passed: bool
    describe: object
    error: str = ''

    def counterexample(self):
        instance = self.describe()
        if self.error:
            instance['error'] = self.error
        return instance


def evaluate(label, check, args=(), describe=dict):
    """Run one property on one instance; toolkit errors count as failures"""
    try:
        return Outcome(label, bool(check(*args)), describe)
    except ToolkitError as exc:
        return Outcome(label, False, describe, f"{exc.code}: {exc}")


def graph_instance(g, v=None):
    def describe():
        instance = {'graph': render_graph(g)}
        if v is not None:
            instance['vertex'] = v
        return instance
    return describe


def four_regular_instance(f, t=None, v=None):
    def describe():
        instance = {'graph': render_graph(f.graph, t.as_mapping(f) if t is not None else None)}
        if v is not None:
            instance['vertex'] = v
        return instance
    return describe


def matrix_instance(a):
    return lambda: {'matrix': a.to_lists()}


def subspace_instance(w):
    return lambda: {'ambient_dim': w.ambient_dim, 'basis': list(w.basis)}


def matroid_instance(m, v=None):
    def describe():
        instance = {'ground': list(m.ground), 'cycle_space': list(m.cycle_space.basis)}
        if v is not None:
            instance['element'] = v
        return instance
    return describe


def set_system_instance(d, extra=None):
    def describe():
        instance = {'ground': list(d.ground), 'family': [d.sorted_labels(y) for y in d.masks]}
        instance.update(extra or {})
        return instance
    return describe


def _exhaustive(max_n):
    return min(max_n, settings.VERIFY_EXHAUSTIVE_MAX_N)


def matroid_suite(rng, max_n, trials):
    """GF(2) kernel, binary matroids, adjacency matroids, minors and the tripartition"""
    yield evaluate('worked examples', adjacency_theorems.worked_examples_hold)
    yield evaluate(
        'matroid and tripartition are independent', adjacency_theorems.matroid_and_tripartition_are_independent
    )
    yield evaluate('0x0 matrix is nonsingular', gf2_theorems.zero_by_zero_is_nonsingular)

    for n in range(min(max_n, SUBSPACE_MAX_N) + 1):
        labels = default_labels(n)
        for w in all_subspaces(n):
            describe = subspace_instance(w)
            yield evaluate('cycle space round trip', matroid_theorems.cycle_space_round_trip, (w, labels), describe)
            yield evaluate(
                'circuit axioms', matroid_theorems.circuit_axioms, (from_subspace(w, labels),), describe
            )
            yield evaluate(
                'orthogonal complement is an involution', gf2_theorems.complement_is_involution, (w,), describe
            )

    for n in range(1, max_n + 1):
        labels = default_labels(n)
        for _ in range(trials):
            a = random_matrix(rng, rng.randint(1, n), n)
            describe = matrix_instance(a)
            yield evaluate('rank plus nullity', gf2_theorems.rank_plus_nullity, (a,), describe)
            yield evaluate('nullspace is annihilated', gf2_theorems.nullspace_is_annihilated, (a,), describe)
            yield evaluate(
                'symmetrization keeps the nullspace', gf2_theorems.symmetrization_keeps_nullspace, (a,), describe
            )
            yield evaluate(
                'symmetrization keeps the matroid', matroid_theorems.symmetrization_keeps_matroid, (a, labels), describe
            )
            s = random_symmetric_matrix(rng, n)
            yield evaluate(
                'principal minors of symmetric matrices', gf2_theorems.strong_principal_minors, (s,),
                matrix_instance(s),
            )

    for g in graph_stream(rng, max_n, trials, _exhaustive(max_n)):
        describe = graph_instance(g)
        m = adjacency_matroid(g)
        yield evaluate('nullity oracle reconstruction', graph_theorems.reconstruction_inverts, (g,), describe)
        yield evaluate('tripartition covers every vertex', adjacency_theorems.fibers_partition_vertices, (g,), describe)
        yield evaluate('dual is an involution', matroid_theorems.dual_is_involution, (m,), describe)
        if g.n <= RANK_AXIOMS_MAX_N:
            yield evaluate('rank axioms', matroid_theorems.rank_axioms, (m,), describe)
        for v in g.labels:
            describe = graph_instance(g, v)
            yield evaluate('local complement entrywise', graph_theorems.local_complement_entrywise, (g, v), describe)
            yield evaluate(
                'local complement is an involution', graph_theorems.local_complement_is_involution, (g, v), describe
            )
            yield evaluate(
                'deletion and contraction are dual', matroid_theorems.deletion_contraction_duality, (m, v), describe
            )
            yield evaluate(
                'loops and coloops delete like they contract',
                matroid_theorems.loops_and_coloops_delete_like_contract, (m, v), describe,
            )
            for label, check in adjacency_theorems.VERTEX_PROPERTIES:
                yield evaluate(label, check, (g, v), describe)

    for n in range(1, max_n + 1):
        for _ in range(trials):
            mg = random_multigraph(rng, n, rng.randint(0, min(2 * n, POLYGON_MAX_EDGES)))
            describe = graph_instance(mg)
            yield evaluate('simplify keeps adjacency', graph_theorems.simplify_keeps_adjacency, (mg,), describe)
            yield evaluate('polygon circuits are cycles', matroid_theorems.polygon_circuits_are_cycles, (mg,), describe)


def delta_suite(rng, max_n, trials):
    """Set systems, the graph delta-matroid and the delta-matroid routes to the minor theorems"""
    yield evaluate('max does not commute with deletion in general', delta_theorems.max_deletion_fails_for_set_systems)

    for n in range(1, max_n + 1):
        for _ in range(trials):
            d = random_set_system(rng, n)
            x = [e for e in d.ground if rng.random() < 0.5]
            describe = set_system_instance(d)
            yield evaluate('min and max are dual', delta_theorems.min_and_max_are_dual, (d,), describe)
            yield evaluate(
                'parity rules match single steps', delta_theorems.parity_rules_match_single_steps, (d, x),
                set_system_instance(d, {'subset': x}),
            )
            yield evaluate(
                'dual pivot keeps max', delta_theorems.dual_pivot_keeps_max, (d, x),
                set_system_instance(d, {'subset': x}),
            )
            for v in d.ground:
                for label, check in delta_theorems.SYSTEM_PROPERTIES:
                    yield evaluate(label, check, (d, v), set_system_instance(d, {'element': v}))
            for v, w in combinations(d.ground, 2):
                yield evaluate(
                    'flips commute', delta_theorems.flips_commute, (d, v, w),
                    set_system_instance(d, {'elements': [v, w]}),
                )

    for g in graph_stream(rng, max_n, trials, _exhaustive(max_n), min_n=1):
        describe = graph_instance(g)
        for label, check in delta_theorems.GRAPH_PROPERTIES:
            yield evaluate(label, check, (g,), describe)
        subset = [v for v in g.labels if rng.random() < 0.5]
        yield evaluate(
            'restrictions read off the delta-matroid', delta_theorems.restriction_characterisations, (g, subset),
            lambda g=g, subset=subset: {**graph_instance(g)(), 'subset': subset},
        )
        ops = random_flip_sequence(rng, g.labels, rng.randint(0, 4))
        yield evaluate(
            'flipped system is graphic iff normal', delta_theorems.flipped_system_is_graphic_iff_normal, (g, ops),
            lambda g=g, ops=ops: {**graph_instance(g)(), 'flips': [[str(kind), v] for kind, v in ops]},
        )
        for v in g.labels:
            for label, check in delta_theorems.VERTEX_PROPERTIES:
                yield evaluate(label, check, (g, v), graph_instance(g, v))


def four_regular_suite(rng, max_n, trials):
    """Euler systems, circuit partitions, touch-graphs and their realization"""
    for f in four_regular_stream(rng, max_n, trials):
        describe = four_regular_instance(f)
        c = euler_system(f)
        if f.n <= CIRCUIT_NULLITY_MAX_N:
            yield evaluate(
                'circuit-nullity formula over all transition systems',
                four_regular_theorems.circuit_nullity_for_every_partition, (f,), describe,
            )
        yield evaluate(
            'Euler partition follows its own system', four_regular_theorems.euler_partition_follows_itself, (f,),
            describe,
        )
        for v in f.labels:
            for label, check in four_regular_theorems.VERTEX_PROPERTIES:
                yield evaluate(label, check, (f, v), four_regular_instance(f, v=v))

        if f.n <= ALL_PARTITIONS_MAX_N:
            systems = list(all_transition_systems(f))
        else:
            systems = [random_transition_system(rng, f) for _ in range(min(trials, RANDOM_PARTITIONS))]
        for t in systems:
            p = partition_from_transitions(f, t)
            describe = four_regular_instance(f, t)
            yield evaluate('circuit-nullity formula', four_regular_theorems.circuit_nullity_formula, (c, p), describe)
            for label, check in four_regular_theorems.PARTITION_PROPERTIES:
                yield evaluate(label, check, (f, p), describe)

    size = min(max_n, REALIZATION_MAX_N)
    for g in graph_stream(rng, size, trials, _exhaustive(size)):
        for label, check in four_regular_theorems.GRAPH_PROPERTIES:
            yield evaluate(label, check, (g,), graph_instance(g))


def polynomial_suite(rng, max_n, trials):
    """Interlace and Tutte polynomials, lambda and the identities tying them together"""
    for g in graph_stream(rng, max_n, trials, _exhaustive(max_n)):
        describe = graph_instance(g)
        for label, check in polynomial_theorems.GRAPH_PROPERTIES:
            yield evaluate(label, check, (g,), describe)
        for v in g.labels:
            for label, check in polynomial_theorems.VERTEX_PROPERTIES:
                yield evaluate(label, check, (g, v), graph_instance(g, v))
        yield from _matroid_polynomials(adjacency_matroid(g))

    for n in range(1, max_n + 1):
        for _ in range(trials):
            mg = random_multigraph(rng, n, rng.randint(0, POLYGON_MAX_EDGES))
            yield from _matroid_polynomials(polygon_matroid(mg))


def _matroid_polynomials(m):
    for label, check in polynomial_theorems.MATROID_PROPERTIES:
        yield evaluate(label, check, (m,), matroid_instance(m))
    for v in m.ground:
        for label, check in polynomial_theorems.ELEMENT_PROPERTIES:
            yield evaluate(label, check, (m, v), matroid_instance(m, v))


SUITES = {
    Suite.MATROID: matroid_suite,
    Suite.DELTA: delta_suite,
    Suite.FOURREG: four_regular_suite,
    Suite.POLY: polynomial_suite,
}
