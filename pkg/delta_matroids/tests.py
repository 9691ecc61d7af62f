import random
from itertools import combinations

from django.test import SimpleTestCase

from adjacency.minors import adjacency_matroid
from graphs.generators import (
    all_looped_simple_graphs, default_labels, looped_triangle, random_looped_simple_graph, triangle,
)
from graphs.graph import LoopedSimpleGraph, delete_vertex, local_complement, loop_complement as toggle_loop
from matroid_lab.exceptions import (
    DefinitionError, ImproperSetSystemError, NotAMatroidError, NotGraphicError, SizeGateExceeded,
)
from matroids.binary import bases, binary_uniform, dual

from . import theorems
from .generators import random_flip_sequence, random_set_system
from .routes import delta_adjacency_matroid, delta_contract, delta_delete
from .set_systems import (
    DeltaMatroid, FlipKind, SetSystem, contract_sys, delete_sys, distance, dual_pivot, from_graph,
    is_delta_matroid, loop_complement, loop_complement_element, max_as_matroid, max_sys, min_sys, pivot,
    tilde_contract, tilde_minus, to_graph, vertex_flip_sequence,
)

K3_SYSTEM = SetSystem.from_sets('abc', [[], ['a', 'b'], ['a', 'c'], ['b', 'c']])


def bases_system(m):
    return SetSystem(m.ground, bases(m))


class SetSystemTests(SimpleTestCase):

    def test_proper_and_normal(self):
        self.assertFalse(SetSystem('ab', frozenset()).is_proper)
        self.assertTrue(K3_SYSTEM.is_normal)
        self.assertFalse(SetSystem.from_sets('ab', [['a']]).is_normal)

    def test_delta_matroid_equals_plain_system(self):
        self.assertEqual(DeltaMatroid.from_system(K3_SYSTEM), K3_SYSTEM)

    def test_ground_gate(self):
        with self.assertRaises(SizeGateExceeded):
            SetSystem(default_labels(17), frozenset([0]))

    def test_reorder(self):
        d = SetSystem.from_sets('ab', [['a']])
        self.assertEqual(d.reorder('ba'), SetSystem.from_sets('ba', [['a']]))


class PivotTests(SimpleTestCase):

    def test_empty_pivot(self):
        self.assertEqual(pivot(K3_SYSTEM, []), K3_SYSTEM)

    def test_involution(self):
        self.assertEqual(pivot(pivot(K3_SYSTEM, ['a', 'c']), ['a', 'c']), K3_SYSTEM)

    def test_full_pivot_of_bases_is_dual(self):
        u32 = binary_uniform(3, 2, 'abc')
        self.assertEqual(pivot(bases_system(u32), ['a', 'b', 'c']), bases_system(dual(u32)))

    def test_looped_vertex_pivot_is_local_complement(self):
        g = looped_triangle()
        self.assertEqual(pivot(from_graph(g), 'a'), from_graph(local_complement(g, 'a')))


class LoopComplementTests(SimpleTestCase):

    def test_single_element(self):
        d = SetSystem.from_sets('v', [[]])
        self.assertEqual(loop_complement(d, 'v'), SetSystem.from_sets('v', [[], ['v']]))
        self.assertEqual(loop_complement_element(d, 'v'), SetSystem.from_sets('v', [[], ['v']]))

    def test_involution(self):
        self.assertEqual(loop_complement(loop_complement(K3_SYSTEM, ['a', 'b']), ['a', 'b']), K3_SYSTEM)

    def test_toggles_graph_loops(self):
        self.assertEqual(loop_complement(from_graph(triangle()), 'a'), from_graph(looped_triangle()))


class DualPivotTests(SimpleTestCase):

    def test_empty_dual_pivot(self):
        self.assertEqual(dual_pivot(K3_SYSTEM, []), K3_SYSTEM)

    def test_all_nonempty_subsets(self):
        everything = SetSystem('abc', frozenset(range(1, 8)))
        result = dual_pivot(everything, ['a', 'b', 'c'])
        self.assertEqual(result, SetSystem('abc', frozenset([0, 0b111])))
        self.assertTrue(is_delta_matroid(everything))
        self.assertFalse(is_delta_matroid(result))

    def test_unlooped_vertex_is_local_complement(self):
        g = triangle()
        self.assertEqual(dual_pivot(from_graph(g), 'a'), from_graph(local_complement(g, 'a')))

    def test_keeps_max(self):
        self.assertTrue(theorems.dual_pivot_keeps_max(K3_SYSTEM, ['a', 'b']))


class MinMaxTests(SimpleTestCase):

    def test_min_of_graph_system(self):
        self.assertEqual(min_sys(from_graph(triangle())), SetSystem('abc', frozenset([0])))

    def test_max_of_bases_is_itself(self):
        b = bases_system(binary_uniform(3, 2, 'abc'))
        self.assertEqual(max_sys(b), b)

    def test_distance_is_nullity(self):
        d = from_graph(triangle())
        self.assertEqual(distance(d), 0)
        self.assertEqual(distance(d, ['a', 'b', 'c']), 1)

    def test_improper(self):
        with self.assertRaises(ImproperSetSystemError):
            max_sys(SetSystem('a', frozenset()))
        with self.assertRaises(ImproperSetSystemError):
            distance(SetSystem('a', frozenset()))


class MinorTests(SimpleTestCase):

    def test_deletion_matches_subgraph(self):
        g = looped_triangle()
        self.assertEqual(delete_sys(from_graph(g), 'b'), from_graph(delete_vertex(g, 'b')))

    def test_deleting_a_coloop_is_improper(self):
        self.assertFalse(delete_sys(SetSystem.from_sets('v', [['v']]), 'v').is_proper)

    def test_contraction_of_looped_singleton_is_proper(self):
        d = SetSystem.from_sets('uv', [[], ['v']])
        self.assertTrue(contract_sys(d, 'v').is_proper)

    def test_tilde_operations_keep_ground(self):
        d = SetSystem.from_sets('v', [[], ['v']])
        self.assertEqual(tilde_minus(d, 'v'), SetSystem.from_sets('v', [[]]))
        self.assertEqual(tilde_contract(d, 'v'), SetSystem.from_sets('v', [['v']]))


class GraphSystemTests(SimpleTestCase):

    def test_single_vertices(self):
        looped = LoopedSimpleGraph.from_edges('v', loops=['v'])
        self.assertEqual(from_graph(looped), SetSystem.from_sets('v', [[], ['v']]))
        self.assertEqual(from_graph(LoopedSimpleGraph.empty('v')), SetSystem.from_sets('v', [[]]))

    def test_triangle(self):
        self.assertEqual(from_graph(triangle()), K3_SYSTEM)

    def test_decoding(self):
        self.assertEqual(to_graph(K3_SYSTEM), triangle())

    def test_not_graphic(self):
        with self.assertRaises(NotGraphicError):
            to_graph(SetSystem.from_sets('abc', [[], ['a', 'b', 'c']]))
        with self.assertRaises(NotGraphicError):
            to_graph(SetSystem.from_sets('a', [['a']]))

    def test_not_a_delta_matroid(self):
        with self.assertRaises(DefinitionError):
            DeltaMatroid.from_system(SetSystem('abc', frozenset([0, 0b111])))


class MaxAsMatroidTests(SimpleTestCase):

    def test_triangle(self):
        self.assertEqual(max_as_matroid(from_graph(triangle())).family, frozenset([0b011, 0b101, 0b110]))

    def test_looped_triangle(self):
        self.assertEqual(max_as_matroid(from_graph(looped_triangle())).family, frozenset([0b111]))

    def test_rank_zero(self):
        self.assertEqual(max_as_matroid(SetSystem.from_sets('v', [[]])).family, frozenset([0]))

    def test_not_equicardinal(self):
        with self.assertRaises(NotAMatroidError):
            max_as_matroid(SetSystem.from_sets('abc', [['a'], ['b', 'c']]))


class FlipSequenceTests(SimpleTestCase):

    def test_empty_sequence(self):
        self.assertEqual(vertex_flip_sequence(K3_SYSTEM, []), K3_SYSTEM)

    def test_pivot_twice(self):
        ops = [(FlipKind.PIVOT, 'a'), (FlipKind.PIVOT, 'a')]
        self.assertEqual(vertex_flip_sequence(K3_SYSTEM, ops), K3_SYSTEM)

    def test_pivot_on_looped_vertex(self):
        g = looped_triangle()
        result = vertex_flip_sequence(from_graph(g), [(FlipKind.PIVOT, 'a')])
        self.assertEqual(result, from_graph(local_complement(g, 'a')))

    def test_graphic_iff_normal(self):
        rng = random.Random(21)
        for _ in range(150):
            g = random_looped_simple_graph(rng, rng.randint(1, 4))
            ops = random_flip_sequence(rng, g.labels, rng.randint(0, 4))
            self.assertTrue(theorems.flipped_system_is_graphic_iff_normal(g, ops))


class SetSystemPropertyTests(SimpleTestCase):

    def test_random_systems(self):
        rng = random.Random(17)
        for _ in range(120):
            d = random_set_system(rng, rng.randint(1, 5))
            for v in d.ground:
                for label, check in theorems.SYSTEM_PROPERTIES:
                    self.assertTrue(check(d, v), f"{label} fails at {v} in {d}")
            for v, w in combinations(d.ground, 2):
                self.assertTrue(theorems.flips_commute(d, v, w))
            x = [e for e in d.ground if rng.random() < 0.5]
            self.assertTrue(theorems.parity_rules_match_single_steps(d, x))
            self.assertTrue(theorems.dual_pivot_keeps_max(d, x))
            self.assertTrue(theorems.min_and_max_are_dual(d))

    def test_max_deletion_needs_a_delta_matroid(self):
        self.assertTrue(theorems.max_deletion_fails_for_set_systems())


class GraphPropertyTests(SimpleTestCase):

    def check_graph(self, g):
        for label, check in theorems.GRAPH_PROPERTIES:
            self.assertTrue(check(g), f"{label} fails for {g}")
        for v in g.labels:
            for label, check in theorems.VERTEX_PROPERTIES:
                self.assertTrue(check(g, v), f"{label} fails at {v} in {g}")

    def test_every_graph_up_to_four_vertices(self):
        for n in range(1, 5):
            for g in all_looped_simple_graphs(n):
                self.check_graph(g)

    def test_random_graphs_up_to_six_vertices(self):
        rng = random.Random(8)
        for n in (5, 6):
            for _ in range(10):
                self.check_graph(random_looped_simple_graph(rng, n))

    def test_restrictions(self):
        for g in all_looped_simple_graphs(3):
            for k in range(4):
                for s in combinations(g.labels, k):
                    self.assertTrue(theorems.restriction_characterisations(g, s))

    def test_loop_toggle(self):
        g = triangle()
        self.assertEqual(from_graph(toggle_loop(g, 'b')), loop_complement(from_graph(g), 'b'))


class RouteTests(SimpleTestCase):

    def test_triangle(self):
        self.assertEqual(delta_adjacency_matroid(triangle()), adjacency_matroid(triangle()))
        self.assertEqual(delta_contract(triangle(), 'a'), binary_uniform(2, 1, 'bc'))
        self.assertEqual(delta_delete(triangle(), 'a'), binary_uniform(2, 2, 'bc'))

    def test_coloop_deletion(self):
        p2 = LoopedSimpleGraph.from_edges('vw', [('v', 'w')])
        self.assertEqual(delta_delete(p2, 'v'), binary_uniform(1, 1, 'w'))
