import random

from django.test import SimpleTestCase, override_settings

from adjacency.minors import adjacency_matroid
from graphs.generators import (
    all_looped_simple_graphs, graph_stream, looped_triangle, random_looped_simple_graph, random_multigraph,
    triangle,
)
from graphs.graph import LoopedSimpleGraph
from matroid_lab.exceptions import DefinitionError, SizeGateExceeded
from matroids.binary import binary_uniform, free_matroid, polygon_matroid

from . import theorems
from .bivariate import ONE, X, Y, ZERO, BivariatePolynomial, shifted_monomial
from .interlace import interlace_recursive, interlace_subset, lambda_terms, q_from_lambda
from .tutte import lambda_leading, rank_counts, substituted_lambda, tutte_recursive, tutte_subset

SINGLE_LOOP = LoopedSimpleGraph.from_edges('v', loops=['v'])


class BivariatePolynomialTests(SimpleTestCase):

    def test_zero_coefficients_dropped(self):
        p = BivariatePolynomial.from_dict({(1, 0): 2, (0, 0): 0})
        self.assertEqual(p.coefficients, (((1, 0), 2),))
        self.assertEqual(X - X, ZERO)
        self.assertFalse(X - X)

    def test_ring_operations(self):
        self.assertEqual((X + 1) * (X - 1), X ** 2 - 1)
        self.assertEqual(2 * Y - Y, Y)
        self.assertEqual(1 - X, -(X - 1))
        self.assertEqual((X + Y) ** 0, ONE)

    def test_negative_exponent(self):
        with self.assertRaises(DefinitionError):
            BivariatePolynomial.from_dict({(-1, 0): 1})

    def test_shifted_monomial(self):
        self.assertEqual(shifted_monomial(0, 0), ONE)
        self.assertEqual(shifted_monomial(2, 1), (X - 1) ** 2 * (Y - 1))

    def test_text(self):
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(str(X ** 2 + X + Y), 'x^2 + x + y')
        self.assertEqual(str(shifted_monomial(1, 0)), 'x - 1')
        self.assertEqual(str(-2 * X ** 2 * Y + 3), '-2 x^2 y + 3')

    def test_triples(self):
        p = X ** 2 * Y - 4 * X
        self.assertEqual(p.to_triples(), [[2, 1, 1], [1, 0, -4]])
        self.assertEqual(BivariatePolynomial.from_triples(p.to_triples()), p)

    def test_evaluate_and_swap(self):
        p = X ** 2 + 3 * Y
        self.assertEqual(p.evaluate(2, 5), 19)
        self.assertEqual(p.swap_variables(), Y ** 2 + 3 * X)
        self.assertEqual(p.degree, 2)
        self.assertEqual(ZERO.degree, -1)


class InterlaceTests(SimpleTestCase):

    def test_isolated_unlooped_vertices(self):
        for n in range(5):
            g = LoopedSimpleGraph.empty('abcd'[:n])
            self.assertEqual(interlace_subset(g), Y ** n)
            self.assertEqual(interlace_recursive(g), Y ** n)

    def test_single_looped_vertex(self):
        self.assertEqual(interlace_subset(SINGLE_LOOP), X)
        self.assertEqual(interlace_recursive(SINGLE_LOOP), X)
        self.assertEqual(q_from_lambda(SINGLE_LOOP), X)

    def test_empty_graph(self):
        empty = LoopedSimpleGraph.empty('')
        self.assertEqual(interlace_subset(empty), ONE)
        self.assertEqual(interlace_recursive(empty), ONE)
        self.assertEqual(q_from_lambda(empty), ONE)

    def test_triangle(self):
        self.assertEqual(str(interlace_subset(triangle())), 'x^2 y + 2 x^2 - 2 x y - 4 x + 4 y')
        self.assertEqual(interlace_recursive(triangle()), interlace_subset(triangle()))

    def test_looped_triangle(self):
        self.assertEqual(interlace_recursive(looped_triangle()), interlace_subset(looped_triangle()))

    def test_lambda_terms_containing(self):
        self.assertEqual(lambda_terms(SINGLE_LOOP, containing='v'), X - 1)

    @override_settings(POLYNOMIAL_MAX_VERTICES=2)
    def test_size_gate(self):
        for evaluate in (interlace_subset, interlace_recursive, q_from_lambda):
            with self.assertRaises(SizeGateExceeded):
                evaluate(triangle())


class TutteTests(SimpleTestCase):

    def test_coloop_and_loop(self):
        self.assertEqual(tutte_subset(binary_uniform(1, 1)), X)
        self.assertEqual(tutte_subset(binary_uniform(1, 0)), Y)
        self.assertEqual(tutte_recursive(binary_uniform(1, 1)), X)
        self.assertEqual(tutte_recursive(binary_uniform(1, 0)), Y)

    def test_triangle(self):
        m = adjacency_matroid(triangle())
        self.assertEqual(m, binary_uniform(3, 2, 'abc'))
        self.assertEqual(str(tutte_subset(m)), 'x^2 + x + y')
        self.assertEqual(str(tutte_recursive(m)), 'x^2 + x + y')

    def test_rank_counts_of_triangle(self):
        counts = rank_counts(adjacency_matroid(triangle()))
        self.assertEqual(counts, {(2, 0): 1, (1, 0): 3, (0, 0): 3, (0, 1): 1})

    def test_free_and_all_loops(self):
        for n in range(5):
            self.assertEqual(tutte_recursive(free_matroid('abcd'[:n])), X ** n)
            self.assertEqual(tutte_recursive(binary_uniform(n, 0)), Y ** n)

    def test_empty_matroid(self):
        self.assertEqual(tutte_subset(free_matroid(())), ONE)
        self.assertEqual(tutte_recursive(free_matroid(())), ONE)

    @override_settings(POLYNOMIAL_MAX_VERTICES=2)
    def test_size_gate(self):
        with self.assertRaises(SizeGateExceeded):
            tutte_subset(binary_uniform(3, 2))
        with self.assertRaises(SizeGateExceeded):
            tutte_recursive(binary_uniform(3, 2))


class LambdaTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(lambda_leading(free_matroid('abc')), ONE)
        self.assertEqual(lambda_leading(binary_uniform(1, 0)), Y - 1)
        self.assertEqual(lambda_leading(adjacency_matroid(triangle())), Y - 1)
        self.assertEqual(lambda_leading(free_matroid(())), ONE)

    def test_substituted(self):
        self.assertEqual(substituted_lambda(adjacency_matroid(triangle()), 3), (X - 1) ** 2 * (Y - 1))


class PropertyTests(SimpleTestCase):

    def check_graph(self, g):
        for label, check in theorems.GRAPH_PROPERTIES:
            self.assertTrue(check(g), f"{label} fails on {g}")
        for v in g.labels:
            for label, check in theorems.VERTEX_PROPERTIES:
                self.assertTrue(check(g, v), f"{label} fails at {v} on {g}")
        self.check_matroid(adjacency_matroid(g))

    def check_matroid(self, m):
        for label, check in theorems.MATROID_PROPERTIES:
            self.assertTrue(check(m), label)
        for v in m.ground:
            for label, check in theorems.ELEMENT_PROPERTIES:
                self.assertTrue(check(m, v), f"{label} fails at {v}")

    def test_every_graph_up_to_four_vertices(self):
        for n in range(5):
            for g in all_looped_simple_graphs(n):
                self.check_graph(g)

    def test_random_graphs_up_to_eight_vertices(self):
        rng = random.Random(17)
        for g in graph_stream(rng, max_n=8, trials=40, exhaustive_max_n=4, min_n=5):
            self.assertTrue(theorems.interlace_evaluators_agree(g), str(g))

    def test_random_vertex_identities(self):
        rng = random.Random(19)
        for _ in range(30):
            g = random_looped_simple_graph(rng, rng.randint(5, 6))
            for v in g.labels:
                self.assertTrue(theorems.vertex_deletion_difference(g, v))
                self.assertTrue(theorems.lambda_under_local_complement(g, v))

    def test_polygon_matroids(self):
        rng = random.Random(23)
        for _ in range(60):
            m = polygon_matroid(random_multigraph(rng, rng.randint(1, 4), rng.randint(0, 6)))
            self.check_matroid(m)
