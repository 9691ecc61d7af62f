import random

from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from matroid_lab.exceptions import DefinitionError, InconsistentOracleError, UnknownElementError

from . import theorems
from .forms import GraphTextForm
from .generators import (
    all_looped_simple_graphs, looped_path, looped_triangle, random_multigraph, triangle,
)
from .graph import (
    LoopedSimpleGraph, MultiGraph, delete_vertex, induced, local_complement, loop_complement,
    nullity_oracle, pivot_ops, reconstruct_from_nullity_oracle, simplify, variant,
)
from .text import parse_graph, render_graph


class SimplifyTests(SimpleTestCase):

    def test_triangle(self):
        mg = MultiGraph.from_labeled('abc', [('a', 'b'), ('b', 'c'), ('a', 'c')])
        self.assertEqual(simplify(mg), triangle())

    def test_parallel_edges_collapse(self):
        mg = MultiGraph.from_labeled('abc', [('a', 'b'), ('a', 'b'), ('b', 'c'), ('a', 'c')])
        self.assertEqual(simplify(mg), triangle())

    def test_double_loop(self):
        mg = MultiGraph.from_labeled('a', [('a', 'a'), ('a', 'a')])
        self.assertEqual(simplify(mg), LoopedSimpleGraph.from_edges('a', loops=['a']))

    def test_random_multigraphs(self):
        rng = random.Random(5)
        for _ in range(100):
            self.assertTrue(theorems.simplify_keeps_adjacency(random_multigraph(rng, 4, rng.randint(0, 7))))


class LocalComplementTests(SimpleTestCase):

    def test_isolated_vertex_is_unchanged(self):
        g = LoopedSimpleGraph.from_edges('ab', loops=['b'])
        self.assertEqual(local_complement(g, 'a'), g)

    def test_triangle_gives_looped_path(self):
        g = local_complement(triangle(), 'a')
        self.assertEqual(set(g.loops()), {'b', 'c'})
        self.assertFalse(g.has_edge('b', 'c'))
        self.assertTrue(g.has_edge('a', 'b'))
        self.assertEqual(g, looped_path())

    def test_exhaustive_small_graphs(self):
        for n in range(4):
            for g in all_looped_simple_graphs(n):
                for v in g.labels:
                    self.assertTrue(theorems.local_complement_entrywise(g, v))
                    self.assertTrue(theorems.local_complement_is_involution(g, v))

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownElementError):
            local_complement(triangle(), 'z')


class LoopComplementTests(SimpleTestCase):

    def test_adds_loop(self):
        self.assertTrue(loop_complement(triangle(), 'a').is_looped('a'))

    def test_involution(self):
        self.assertEqual(loop_complement(loop_complement(triangle(), 'b'), 'b'), triangle())

    def test_triangle_to_looped_triangle(self):
        self.assertEqual(loop_complement(triangle(), 'a'), looped_triangle())


class InducedTests(SimpleTestCase):

    def test_all_vertices(self):
        self.assertEqual(induced(triangle(), 'abc'), triangle())

    def test_vertex_deletion(self):
        self.assertEqual(delete_vertex(triangle(), 'a'), induced(triangle(), 'bc'))

    def test_triangle_minus_vertex_is_an_edge(self):
        self.assertEqual(delete_vertex(triangle(), 'c'), LoopedSimpleGraph.from_edges('ab', [('a', 'b')]))


class VariantTests(SimpleTestCase):

    def test_plain_removes_loop(self):
        self.assertEqual(variant(looped_triangle(), 'a', 'plain'), triangle())

    def test_loop_adds_loop(self):
        self.assertEqual(variant(triangle(), 'a', 'loop'), looped_triangle())

    def test_loop_isolate(self):
        expected = LoopedSimpleGraph.from_edges('abc', [('b', 'c')], ['a'])
        self.assertEqual(variant(triangle(), 'a', 'loop_isolate'), expected)


class PivotTests(SimpleTestCase):

    def test_pivot_on_looped_vertex(self):
        g = looped_triangle()
        self.assertEqual(pivot_ops(g, 'a', 'pivot'), local_complement(g, 'a'))

    def test_dual_pivot_on_triangle(self):
        self.assertEqual(pivot_ops(triangle(), 'a', 'dual_pivot'), looped_path())

    def test_pivot_on_unlooped_vertex_fails(self):
        with self.assertRaises(DefinitionError):
            pivot_ops(triangle(), 'a', 'pivot')

    def test_dual_pivot_on_looped_vertex_fails(self):
        with self.assertRaises(DefinitionError):
            pivot_ops(looped_triangle(), 'a', 'dual_pivot')


class ReconstructionTests(SimpleTestCase):

    def test_loop_from_zero_nullity(self):
        g = reconstruct_from_nullity_oracle('a', lambda s: 0)
        self.assertTrue(g.is_looped('a'))

    def test_unlooped_pair(self):
        g = reconstruct_from_nullity_oracle('ab', lambda s: 1 if len(s) == 1 else 0)
        self.assertTrue(g.has_edge('a', 'b'))

    def test_looped_pair(self):
        g = reconstruct_from_nullity_oracle('ab', lambda s: 0)
        self.assertFalse(g.has_edge('a', 'b'))
        self.assertEqual(g.loops(), ('a', 'b'))

    def test_inconsistent_oracle(self):
        with self.assertRaises(InconsistentOracleError):
            reconstruct_from_nullity_oracle('ab', lambda s: 1)

    def test_inverts_every_graph_up_to_five_vertices(self):
        for n in range(6):
            for g in all_looped_simple_graphs(n):
                self.assertTrue(theorems.reconstruction_inverts(g), str(g))

    def test_oracle_reads_nullities(self):
        oracle = nullity_oracle(triangle())
        self.assertEqual(oracle(frozenset('abc')), 1)
        self.assertEqual(oracle(frozenset('a')), 1)


class GraphTextTests(SimpleTestCase):

    def test_triangle(self):
        graph, transitions = parse_graph("vertices a b c\nedge a b\nedge b c\nedge a c\n")
        self.assertEqual(graph, triangle())
        self.assertEqual(transitions, {})

    def test_loop_line(self):
        graph, _ = parse_graph("# K3 with a loop\nvertices a b c\nloop a\nedge a b\nedge b c\nedge a c\n")
        self.assertEqual(graph, looped_triangle())

    def test_undeclared_vertex_reports_line(self):
        form = GraphTextForm(data={'text': "vertices a b c\nedge a d\n"})
        self.assertFalse(form.is_valid())
        self.assertIn('line 2', form.errors['text'][0])

    def test_unknown_keyword(self):
        with self.assertRaises(ValidationError):
            parse_graph("vertices a\nnode b\n")

    def test_duplicate_lines_make_a_multigraph(self):
        graph, _ = parse_graph("vertices a\nloop a\nloop a\n")
        self.assertIsInstance(graph, MultiGraph)
        self.assertEqual(graph.degree('a'), 4)

    def test_multigraph_text_round_trip(self):
        mg = MultiGraph.from_labeled('ab', [('a', 'b'), ('a', 'b'), ('a', 'a')], ['x', 'y', 'z'])
        graph, transitions = parse_graph(render_graph(mg, {'a': 1}))
        self.assertEqual(graph, mg)
        self.assertEqual(transitions, {'a': 1})

    def test_simple_graph_text_round_trip(self):
        graph, _ = parse_graph(render_graph(looped_path()))
        self.assertEqual(graph, looped_path())
