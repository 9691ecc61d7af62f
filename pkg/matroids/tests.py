import random

from django.test import SimpleTestCase

from gf2.generators import all_subspaces, random_matrix
from gf2.linalg import BitMatrix, Subspace
from graphs.generators import (
    looped_path, looped_triangle, random_multigraph, triangle, two_vertex_path,
)
from graphs.graph import LoopedSimpleGraph, MultiGraph
from matroid_lab.exceptions import DefinitionError, LabelCollisionError, SizeGateExceeded, UnknownElementError

from . import theorems
from .binary import (
    bases, binary_matroid_from_bases, binary_uniform, circuits, contract, delete, direct_sum, dual,
    free_matroid, from_matrix, from_subspace, independent_sets, is_coloop, is_loop, isomorphic,
    polygon_matroid, rank_of,
)


def matroid_of(g):
    return from_matrix(g.adj, g.labels)


U32 = binary_uniform(3, 2, 'abc')


class ConstructionTests(SimpleTestCase):

    def test_triangle_matrix(self):
        m = matroid_of(triangle())
        self.assertEqual(circuits(m), {0b111})
        self.assertEqual(m, U32)

    def test_identity_is_free(self):
        self.assertEqual(from_matrix(BitMatrix.identity(3), 'abc'), free_matroid('abc'))

    def test_zero_matrix_is_a_loop(self):
        m = from_matrix(BitMatrix.zeros(1, 1), 'v')
        self.assertTrue(is_loop(m, 'v'))

    def test_from_subspace(self):
        self.assertEqual(from_subspace(Subspace.zero(2), 'ab'), free_matroid('ab'))
        self.assertEqual(from_subspace(Subspace.span(3, [0b111]), 'abc'), U32)
        self.assertEqual(from_subspace(Subspace.full(1), 'v'), binary_uniform(1, 0, 'v'))

    def test_bijection_on_all_small_subspaces(self):
        for n in range(6):
            labels = 'abcde'[:n]
            for w in all_subspaces(n):
                self.assertTrue(theorems.cycle_space_round_trip(w, labels))
                self.assertTrue(theorems.circuit_axioms(from_subspace(w, labels)))

    def test_non_binary_uniform(self):
        with self.assertRaises(DefinitionError):
            binary_uniform(4, 2)


class CircuitTests(SimpleTestCase):

    def test_free_matroid_has_no_circuits(self):
        self.assertEqual(circuits(free_matroid('abc')), frozenset())

    def test_two_vertex_path(self):
        self.assertEqual(circuits(matroid_of(two_vertex_path())), frozenset())


class RankTests(SimpleTestCase):

    def test_values(self):
        self.assertEqual(rank_of(free_matroid('abc'), 'abc'), 3)
        self.assertEqual(rank_of(U32, 'abc'), 2)
        self.assertEqual(rank_of(U32, ''), 0)

    def test_unknown_element(self):
        with self.assertRaises(UnknownElementError):
            rank_of(U32, 'z')

    def test_axioms_on_random_matroids(self):
        rng = random.Random(2)
        for _ in range(40):
            n = rng.randint(0, 4)
            m = from_matrix(random_matrix(rng, rng.randint(0, 4), n), 'abcd'[:n])
            self.assertTrue(theorems.rank_axioms(m))
            self.assertTrue(theorems.dual_is_involution(m))
            for v in m.ground:
                self.assertTrue(theorems.deletion_contraction_duality(m, v))
                self.assertTrue(theorems.loops_and_coloops_delete_like_contract(m, v))


class DualTests(SimpleTestCase):

    def test_free_dual_is_all_loops(self):
        self.assertEqual(dual(free_matroid('abc')), binary_uniform(3, 0, 'abc'))

    def test_dual_of_u32(self):
        d = dual(U32)
        self.assertEqual(d.cycle_space, Subspace.span(3, [0b011, 0b110]))
        self.assertEqual(circuits(d), {0b011, 0b101, 0b110})

    def test_dual_of_coloop(self):
        self.assertEqual(dual(binary_uniform(1, 1, 'v')), binary_uniform(1, 0, 'v'))


class MinorTests(SimpleTestCase):

    def test_delete_from_u32(self):
        self.assertEqual(delete(U32, 'a'), free_matroid('bc'))

    def test_contract_u32(self):
        self.assertEqual(contract(U32, 'a'), binary_uniform(2, 1, 'bc'))

    def test_delete_loop(self):
        m = direct_sum(binary_uniform(1, 0, 'x'), free_matroid('ab'))
        self.assertEqual(delete(m, 'x'), free_matroid('ab'))


class DirectSumTests(SimpleTestCase):

    def test_adds_coloop(self):
        m = direct_sum(U32, binary_uniform(1, 1, 'd'))
        self.assertTrue(is_coloop(m, 'd'))
        self.assertEqual(delete(m, 'd'), U32)

    def test_adds_loop(self):
        self.assertTrue(is_loop(direct_sum(U32, binary_uniform(1, 0, 'd')), 'd'))

    def test_free_plus_free(self):
        self.assertEqual(direct_sum(free_matroid('a'), free_matroid('b')), free_matroid('ab'))

    def test_label_collision(self):
        with self.assertRaises(LabelCollisionError):
            direct_sum(U32, free_matroid('a'))


class LoopColoopTests(SimpleTestCase):

    def test_isolated_unlooped_vertex_is_a_loop(self):
        m = matroid_of(LoopedSimpleGraph.from_edges('ab', loops=['b']))
        self.assertTrue(is_loop(m, 'a'))

    def test_isolated_looped_vertex_is_a_coloop(self):
        m = matroid_of(LoopedSimpleGraph.from_edges('abc', [('b', 'c')], ['a']))
        self.assertTrue(is_coloop(m, 'a'))

    def test_free_matroid_elements_are_coloops(self):
        self.assertTrue(all(is_coloop(free_matroid('abc'), v) for v in 'abc'))


class PolygonTests(SimpleTestCase):

    def test_triangle(self):
        mg = MultiGraph.from_labeled('xyz', [('x', 'y'), ('y', 'z'), ('x', 'z')], 'abc')
        self.assertEqual(polygon_matroid(mg), U32)

    def test_tree(self):
        mg = MultiGraph.from_labeled('wxyz', [('w', 'x'), ('x', 'y'), ('x', 'z')])
        self.assertEqual(polygon_matroid(mg), free_matroid(mg.edge_labels))

    def test_loop_edge(self):
        mg = MultiGraph.from_labeled('x', [('x', 'x')], ['l'])
        self.assertEqual(polygon_matroid(mg), binary_uniform(1, 0, 'l'))

    def test_circuits_match_cycle_enumeration(self):
        rng = random.Random(4)
        for _ in range(150):
            mg = random_multigraph(rng, rng.randint(1, 4), rng.randint(0, 6))
            self.assertTrue(theorems.polygon_circuits_are_cycles(mg))


class IsomorphismTests(SimpleTestCase):

    def test_triangle_and_looped_path(self):
        self.assertIsNotNone(isomorphic(matroid_of(triangle()), matroid_of(looped_path())))

    def test_looped_triangle_and_looped_path(self):
        self.assertIsNone(isomorphic(matroid_of(looped_triangle()), matroid_of(looped_path())))

    def test_two_vertex_path_and_two_looped_vertices(self):
        looped = LoopedSimpleGraph.from_edges('vw', loops=['v', 'w'])
        self.assertIsNotNone(isomorphic(matroid_of(two_vertex_path()), matroid_of(looped)))

    def test_witness_maps_cycle_space(self):
        m1 = direct_sum(U32, binary_uniform(1, 0, 'd'))
        m2 = direct_sum(binary_uniform(1, 0, 'p'), binary_uniform(3, 2, 'qrs'))
        mapping = isomorphic(m1, m2)
        self.assertEqual(mapping['d'], 'p')

    def test_gate(self):
        with self.assertRaises(SizeGateExceeded):
            isomorphic(free_matroid('abcdefghi'), free_matroid('abcdefghi'))


class BasisTests(SimpleTestCase):

    def test_u32(self):
        self.assertEqual(bases(U32), {0b011, 0b101, 0b110})

    def test_free(self):
        self.assertEqual(bases(free_matroid('abc')), {0b111})

    def test_loop_independent_sets(self):
        self.assertEqual(independent_sets(binary_uniform(1, 0, 'v')), {0})

    def test_rebuild_from_bases(self):
        rng = random.Random(9)
        for _ in range(60):
            n = rng.randint(1, 6)
            m = from_matrix(random_matrix(rng, rng.randint(0, 6), n), 'abcdef'[:n])
            self.assertEqual(binary_matroid_from_bases(m.ground, bases(m)), m)


class SymmetrizationTests(SimpleTestCase):

    def test_every_binary_matroid_is_an_adjacency_matroid(self):
        rng = random.Random(13)
        for _ in range(1000):
            cols = rng.randint(1, 8)
            a = random_matrix(rng, rng.randint(1, 8), cols)
            self.assertTrue(theorems.symmetrization_keeps_matroid(a, 'abcdefgh'[:cols]))
