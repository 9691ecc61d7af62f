import random

from django.test import SimpleTestCase

from graphs.generators import (
    all_looped_simple_graphs, looped_path, looped_triangle, random_looped_simple_graph, triangle,
    two_vertex_path,
)
from graphs.graph import LoopedSimpleGraph, VariantKind, delete_vertex, local_complement
from matroid_lab.exceptions import DefinitionError, InvariantViolation, UnknownElementError
from matroids.binary import binary_uniform, contract, delete, free_matroid, is_coloop

from . import theorems
from .minors import (
    ContractionRoute, adjacency_matroid, contract_via_lc, delete_via_subgraph, is_triple_coloop, trio,
)
from .tripartition import (
    CaseTag, TripartitionCase, case_counts, classify_vertex, fibers, report_under_local_complement,
    tripartition_report,
)


class AdjacencyMatroidTests(SimpleTestCase):

    def test_triangle(self):
        self.assertEqual(adjacency_matroid(triangle()), binary_uniform(3, 2, 'abc'))

    def test_looped_triangle_is_free(self):
        self.assertEqual(adjacency_matroid(looped_triangle()), free_matroid('abc'))

    def test_looped_path(self):
        self.assertEqual(adjacency_matroid(looped_path()), binary_uniform(3, 2, 'abc'))

    def test_empty_graph(self):
        self.assertEqual(adjacency_matroid(LoopedSimpleGraph.empty('')).size, 0)


class ContractionTests(SimpleTestCase):

    def test_triangle(self):
        derivation = contract_via_lc(triangle(), 'a')
        self.assertEqual(derivation.result, binary_uniform(2, 1, 'bc'))
        self.assertEqual(derivation.route, ContractionRoute.UNLOOPED_NEIGHBOR)
        self.assertEqual(derivation.lc_sequence, ('b', 'a'))

    def test_looped_triangle_unlooped_vertex(self):
        self.assertEqual(contract_via_lc(looped_triangle(), 'b').result, free_matroid('ac'))

    def test_looped_path_looped_vertex(self):
        derivation = contract_via_lc(looped_path(), 'b')
        self.assertEqual(derivation.result, binary_uniform(2, 1, 'ac'))
        self.assertEqual(derivation.route, ContractionRoute.LOOPED)
        self.assertEqual(derivation.witness_graph, local_complement(looped_path(), 'b'))

    def test_only_looped_neighbors(self):
        derivation = contract_via_lc(looped_path(), 'a')
        self.assertEqual(derivation.route, ContractionRoute.LOOPED_NEIGHBOR)
        self.assertEqual(derivation.lc_sequence, ('a', 'b', 'a'))
        self.assertEqual(derivation.result, contract(adjacency_matroid(looped_path()), 'a'))

    def test_isolated_vertex(self):
        g = LoopedSimpleGraph.from_edges('uvw', [('u', 'w')])
        derivation = contract_via_lc(g, 'v')
        self.assertEqual(derivation.route, ContractionRoute.ISOLATED)
        self.assertEqual(derivation.result, adjacency_matroid(delete_vertex(g, 'v')))

    def test_explicit_neighbor(self):
        derivation = contract_via_lc(triangle(), 'a', via='c')
        self.assertEqual(derivation.lc_sequence, ('c', 'a'))
        self.assertEqual(derivation.result, binary_uniform(2, 1, 'bc'))

    def test_non_neighbor_rejected(self):
        g = LoopedSimpleGraph.from_edges('abc', [('a', 'b')])
        with self.assertRaises(DefinitionError):
            contract_via_lc(g, 'a', via='c')

    def test_unknown_vertex(self):
        with self.assertRaises(UnknownElementError):
            contract_via_lc(triangle(), 'z')


class DeletionTests(SimpleTestCase):

    def test_triangle(self):
        self.assertEqual(delete_via_subgraph(triangle(), 'a'), free_matroid('bc'))

    def test_two_vertex_path_needs_contraction(self):
        p2 = two_vertex_path()
        self.assertTrue(is_triple_coloop(p2, 'v'))
        self.assertEqual(delete_via_subgraph(p2, 'v'), delete(adjacency_matroid(p2), 'v'))
        self.assertEqual(delete_via_subgraph(p2, 'v'), free_matroid('w'))
        self.assertNotEqual(adjacency_matroid(delete_vertex(p2, 'v')), free_matroid('w'))

    def test_isolated_unlooped_vertex(self):
        g = LoopedSimpleGraph.from_edges('uvw', [('u', 'w')])
        m = adjacency_matroid(g)
        self.assertEqual(delete_via_subgraph(g, 'v'), contract(m, 'v'))
        self.assertEqual(delete_via_subgraph(g, 'v'), adjacency_matroid(delete_vertex(g, 'v')))


class TripleColoopTests(SimpleTestCase):

    def test_unlooped_vertex_of_looped_triangle(self):
        self.assertTrue(is_triple_coloop(local_complement(looped_triangle(), 'b'), 'b'))

    def test_looped_vertex_of_looped_triangle(self):
        g = looped_triangle()
        self.assertTrue(is_coloop(adjacency_matroid(g), 'a'))
        self.assertFalse(is_triple_coloop(g, 'a'))
        self.assertFalse(is_triple_coloop(local_complement(g, 'a'), 'a'))

    def test_triangle_has_no_coloops(self):
        for v in 'abc':
            self.assertFalse(is_coloop(adjacency_matroid(triangle()), v))
            self.assertFalse(is_triple_coloop(triangle(), v))

    def test_local_complement_moves_the_coloop(self):
        g = LoopedSimpleGraph.from_edges('ab', [('a', 'b')], ['a'])
        self.assertTrue(is_coloop(adjacency_matroid(g), 'a'))
        self.assertFalse(is_coloop(adjacency_matroid(local_complement(g, 'a')), 'a'))
        self.assertTrue(is_triple_coloop(g, 'a'))
        self.assertTrue(theorems.local_complement_relations(g, 'a'))


class TrioTests(SimpleTestCase):

    def test_triangle(self):
        result = trio(triangle(), 'a')
        self.assertEqual(result.equal_pair, (VariantKind.LOOP, VariantKind.LOOP_ISOLATE))
        self.assertEqual(result.odd_one, VariantKind.PLAIN)
        self.assertEqual(result.shared, free_matroid('abc'))

    def test_looped_triangle_unlooped_vertex(self):
        result = trio(looped_triangle(), 'b')
        self.assertEqual(result.equal_pair, (VariantKind.PLAIN, VariantKind.LOOP_ISOLATE))

    def test_single_vertex(self):
        result = trio(LoopedSimpleGraph.empty('v'), 'v')
        self.assertEqual(result.equal_pair, (VariantKind.LOOP, VariantKind.LOOP_ISOLATE))
        self.assertEqual(result.odd_one, VariantKind.PLAIN)
        self.assertEqual(result.nullity, 0)
        self.assertEqual(result.odd_nullity, 1)


class TripartitionTests(SimpleTestCase):

    def test_triangle(self):
        report = tripartition_report(triangle())
        self.assertEqual({v: c.tag for v, c in report.items()}, dict.fromkeys('abc', CaseTag.CASE3))

    def test_looped_triangle(self):
        report = tripartition_report(looped_triangle())
        self.assertEqual(report['a'].tag, CaseTag.CASE3)
        self.assertEqual(report['b'].tag, CaseTag.CASE2)
        self.assertEqual(report['c'].tag, CaseTag.CASE2)
        self.assertEqual(report['b'].evidence, (True, False))

    def test_looped_path(self):
        report = tripartition_report(looped_path())
        self.assertEqual(fibers(report), {
            CaseTag.CASE1: (),
            CaseTag.CASE2: ('b', 'c'),
            CaseTag.CASE3: ('a',),
        })

    def test_case_one_under_local_complement(self):
        here, there = report_under_local_complement(looped_triangle())['b']
        self.assertEqual(here.tag, CaseTag.CASE2)
        self.assertEqual(there.tag, CaseTag.CASE1)
        self.assertEqual(classify_vertex(local_complement(looped_triangle(), 'b'), 'b'), there)

    def test_impossible_evidence(self):
        with self.assertRaises(InvariantViolation):
            TripartitionCase.from_evidence('v', (False, False))

    def test_tag_must_match_evidence(self):
        with self.assertRaises(InvariantViolation):
            TripartitionCase('v', CaseTag.CASE1, (True, False))

    def test_case_counts(self):
        self.assertEqual(case_counts(tripartition_report(looped_path()))[CaseTag.CASE2], 2)

    def test_matroid_and_tripartition_are_independent(self):
        self.assertTrue(theorems.matroid_and_tripartition_are_independent())

    def test_worked_examples(self):
        self.assertTrue(theorems.worked_examples_hold())


class PropertyTests(SimpleTestCase):

    def check_graph(self, g):
        for v in g.labels:
            for label, check in theorems.VERTEX_PROPERTIES:
                self.assertTrue(check(g, v), f"{label} fails at {v} in {g}")
        self.assertTrue(theorems.fibers_partition_vertices(g))

    def test_every_graph_up_to_four_vertices(self):
        for n in range(5):
            for g in all_looped_simple_graphs(n):
                self.check_graph(g)

    def test_random_graphs_on_five_and_six_vertices(self):
        rng = random.Random(5)
        for n in (5, 6):
            for _ in range(15):
                self.check_graph(random_looped_simple_graph(rng, n))

    def test_five_hundred_graphs_on_seven_vertices(self):
        rng = random.Random(7)
        for _ in range(500):
            self.check_graph(random_looped_simple_graph(rng, 7))
