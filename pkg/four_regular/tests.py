import random

from django.test import SimpleTestCase, override_settings

from graphs.generators import all_looped_simple_graphs, random_looped_simple_graph
from graphs.graph import LoopedSimpleGraph, MultiGraph
from matroid_lab.exceptions import DefinitionError

from . import theorems
from .euler import (
    EulerSystem, HalfEdgeGraph, TransitionSystem, TransitionType, all_transition_systems, compatible_euler_system,
    euler_system, interlacement, kappa, parse_four_regular, partition_from_transitions, relative_interlacement,
    transition_type, transition_types,
)
from .generators import (
    figure_eight, five_clique, four_regular_stream, quadruple_edge, random_connected_four_regular,
    random_disconnected_four_regular, random_four_regular, random_transition_system, two_figure_eights,
)
from .touch import realize_touch_graph, touch_graph

SPLIT = TransitionSystem((0,))


class HalfEdgeGraphTests(SimpleTestCase):

    def test_not_four_regular(self):
        with self.assertRaises(DefinitionError):
            HalfEdgeGraph.from_multigraph(MultiGraph.from_labeled('ab', [('a', 'b')]))

    def test_loop_gives_two_half_edges(self):
        self.assertEqual(figure_eight().incident, ((0, 1, 2, 3),))

    def test_invalid_transition(self):
        with self.assertRaises(DefinitionError):
            TransitionSystem((3,))

    def test_missing_transition(self):
        with self.assertRaises(DefinitionError):
            TransitionSystem.from_mapping(quadruple_edge(), {'v': 0})

    def test_parse_with_transitions(self):
        graph = MultiGraph.from_labeled('v', [('v', 'v')] * 2)
        f, p = parse_four_regular(graph, {'v': 0})
        self.assertEqual(p.size, 2)
        _, c = parse_four_regular(graph)
        self.assertEqual(c.size, 1)


class EulerSystemTests(SimpleTestCase):

    def test_figure_eight(self):
        c = euler_system(figure_eight())
        self.assertEqual(c.size, 1)
        self.assertEqual(len(c.trails[0]), 2)

    def test_quadruple_edge(self):
        c = euler_system(quadruple_edge())
        self.assertEqual(len(c.trails[0]), 4)
        self.assertEqual(c.vertex_sequence(0), ['v', 'w', 'v', 'w'])

    def test_one_circuit_per_component(self):
        self.assertEqual(euler_system(two_figure_eights()).size, 2)

    def test_random_graphs(self):
        rng = random.Random(3)
        for _ in range(50):
            f = random_four_regular(rng, rng.randint(1, 7))
            c = euler_system(f)
            self.assertEqual(c.size, f.component_count)
            self.assertEqual(partition_from_transitions(f, c.transitions).size, c.size)

    def test_split_partition_is_not_euler(self):
        with self.assertRaises(DefinitionError):
            EulerSystem(figure_eight(), SPLIT, partition_from_transitions(figure_eight(), SPLIT).trails)


class InterlacementTests(SimpleTestCase):

    def test_figure_eight(self):
        self.assertEqual(interlacement(euler_system(figure_eight())), LoopedSimpleGraph.empty('v'))

    def test_quadruple_edge(self):
        expected = LoopedSimpleGraph.from_edges('vw', [('v', 'w')])
        self.assertEqual(interlacement(euler_system(quadruple_edge())), expected)

    def test_components_never_interlace(self):
        self.assertEqual(interlacement(euler_system(two_figure_eights())).edges(), [])

    def test_five_clique_has_no_isolated_vertex(self):
        g = interlacement(euler_system(five_clique()))
        self.assertTrue(all(not g.is_isolated(v) for v in g.labels))


class PartitionTests(SimpleTestCase):

    def test_figure_eight_partitions(self):
        f = figure_eight()
        sizes = [partition_from_transitions(f, t).size for t in all_transition_systems(f)]
        self.assertEqual(sizes, [2, 1, 1])

    def test_own_transitions(self):
        f = quadruple_edge()
        c = euler_system(f)
        self.assertEqual(partition_from_transitions(f, c.transitions).size, f.component_count)

    def test_edge_sets_partition_edges(self):
        f = five_clique()
        p = partition_from_transitions(f, TransitionSystem((0, 1, 2, 0, 1)))
        labels = sorted(e for trail in p.edge_sets() for e in trail)
        self.assertEqual(labels, sorted(f.graph.edge_labels))


class TransitionTypeTests(SimpleTestCase):

    def test_own_partition_is_phi(self):
        c = euler_system(five_clique())
        self.assertEqual(set(transition_types(c, c).values()), {TransitionType.PHI})
        self.assertEqual(relative_interlacement(c, c).n, 0)

    def test_figure_eight_types(self):
        f = figure_eight()
        c = euler_system(f)
        kinds = [transition_type(c, partition_from_transitions(f, t), 'v') for t in all_transition_systems(f)]
        self.assertEqual(kinds[0], TransitionType.CHI)
        self.assertEqual(sorted(kinds), sorted(TransitionType.values))

    def test_kappa_is_psi(self):
        c = euler_system(quadruple_edge())
        self.assertEqual(transition_type(c, kappa(c, 'w'), 'w'), TransitionType.PSI)

    @override_settings(FOUR_REGULAR_ORIENTATION_AUDIT=True)
    def test_orientation_audit(self):
        rng = random.Random(11)
        for _ in range(30):
            f = random_four_regular(rng, rng.randint(1, 6))
            c = euler_system(f)
            p = partition_from_transitions(f, random_transition_system(rng, f))
            transition_types(c, p)

    def test_relative_interlacement(self):
        f = quadruple_edge()
        c = euler_system(f)
        p = kappa(c, 'v')
        g = relative_interlacement(c, p)
        self.assertEqual(g.labels, ('v',))
        self.assertTrue(g.is_looped('v'))


class KappaTests(SimpleTestCase):

    def test_involution(self):
        c = euler_system(five_clique())
        self.assertEqual(kappa(kappa(c, 'c'), 'c').transitions, c.transitions)

    def test_figure_eight(self):
        c = euler_system(figure_eight())
        cv = kappa(c, 'v')
        self.assertEqual(cv.size, 1)
        self.assertNotEqual(cv.transitions, c.transitions)


class CompatibleEulerSystemTests(SimpleTestCase):

    def test_figure_eight_split(self):
        f = figure_eight()
        p = partition_from_transitions(f, SPLIT)
        c = compatible_euler_system(f, p)
        self.assertNotEqual(transition_type(c, p, 'v'), TransitionType.PHI)

    def test_random_pairs(self):
        rng = random.Random(13)
        for _ in range(100):
            f = random_four_regular(rng, rng.randint(1, 7))
            p = partition_from_transitions(f, random_transition_system(rng, f))
            self.assertTrue(theorems.compatible_system_avoids_partition(f, p))


class TouchGraphTests(SimpleTestCase):

    def test_euler_partition(self):
        f = two_figure_eights()
        tch = touch_graph(euler_system(f))
        self.assertEqual(tch.n, 2)
        self.assertTrue(all(a == b for a, b in tch.edges))

    def test_split_figure_eight(self):
        tch = touch_graph(partition_from_transitions(figure_eight(), SPLIT))
        self.assertEqual(tch.labels, ('c0', 'c1'))
        self.assertEqual(tch.edges, ((0, 1),))
        self.assertEqual(tch.edge_labels, ('v',))


class RealizationTests(SimpleTestCase):

    def test_single_looped_vertex(self):
        r = realize_touch_graph(LoopedSimpleGraph.from_edges('u', loops=['u']))
        self.assertEqual(r.four_regular.labels, ('u~u',))
        self.assertEqual(r.partition.size, 1)
        self.assertEqual(r.owners, ('u',))

    def test_single_edge(self):
        r = realize_touch_graph(LoopedSimpleGraph.from_edges('uv', [('u', 'v')]))
        self.assertEqual(r.four_regular.labels, ('u~v',))
        self.assertEqual(r.partition.size, 2)
        tch = touch_graph(r.partition)
        self.assertEqual(tch.edges, ((0, 1),))

    def test_isolated_unlooped_vertex(self):
        with self.assertRaises(DefinitionError):
            realize_touch_graph(LoopedSimpleGraph.empty('u'))

    def test_every_small_graph(self):
        for n in range(5):
            for g in all_looped_simple_graphs(n):
                self.assertTrue(theorems.realization_reproduces_graph(g), str(g))

    def test_random_graphs(self):
        rng = random.Random(29)
        for _ in range(50):
            self.assertTrue(theorems.realization_reproduces_graph(random_looped_simple_graph(rng, rng.randint(1, 6))))


class PropertyTests(SimpleTestCase):

    def check_graph(self, f, partitions):
        for label, check in theorems.FOUR_REGULAR_PROPERTIES:
            self.assertTrue(check(f), label)
        for v in f.labels:
            for label, check in theorems.VERTEX_PROPERTIES:
                self.assertTrue(check(f, v), f"{label} fails at {v}")
        for t in partitions:
            p = partition_from_transitions(f, t)
            for label, check in theorems.PARTITION_PROPERTIES:
                self.assertTrue(check(f, p), f"{label} fails for {t.choices}")

    def test_every_partition_up_to_three_vertices(self):
        rng = random.Random(1)
        for f in four_regular_stream(rng, max_n=3, trials=6):
            self.check_graph(f, all_transition_systems(f))

    def test_random_partitions_up_to_five_vertices(self):
        rng = random.Random(2)
        for n in (4, 5):
            for _ in range(6):
                f = random_connected_four_regular(rng, n)
                self.check_graph(f, [random_transition_system(rng, f) for _ in range(12)])

    def test_every_partition_of_disconnected_graphs(self):
        rng = random.Random(6)
        graphs = [two_figure_eights()] + [random_disconnected_four_regular(rng, n) for n in (2, 3, 3, 4)]
        for f in graphs:
            self.assertGreater(f.component_count, 1)
            self.check_graph(f, all_transition_systems(f))

    def test_stream_reaches_disconnected_graphs(self):
        counts = [f.component_count for f in four_regular_stream(random.Random(8), max_n=3, trials=2)]
        self.assertGreater(max(counts), 1)

    def test_circuit_nullity_up_to_eight_vertices(self):
        rng = random.Random(4)
        for _ in range(60):
            f = random_four_regular(rng, rng.randint(1, 8))
            c = euler_system(f)
            p = partition_from_transitions(f, random_transition_system(rng, f))
            self.assertTrue(theorems.circuit_nullity_formula(c, p))
