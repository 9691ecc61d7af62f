import random

from django.test import SimpleTestCase, override_settings

from matroid_lab.exceptions import DimensionMismatchError, SizeGateExceeded

from . import theorems
from .generators import all_subspaces, random_matrix, random_symmetric_matrix
from .linalg import (
    BitMatrix, BitVector, Subspace, echelon_basis, gray_code_ranks, gray_code_subsets, nullity, nullspace,
    orthogonal_complement, principal_nullities, principal_nullity, principal_submatrix, rank,
    symmetrize_nullspace,
)

K3 = BitMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
K3_LOOPED = BitMatrix.from_rows([[1, 1, 1], [1, 0, 1], [1, 1, 0]])


class RankTests(SimpleTestCase):

    def test_zero_matrix(self):
        self.assertEqual(rank(BitMatrix.zeros(3, 3)), 0)
        self.assertEqual(nullity(BitMatrix.zeros(3, 3)), 3)

    def test_identity(self):
        self.assertEqual(rank(BitMatrix.identity(3)), 3)

    def test_triangle(self):
        self.assertEqual(rank(K3), 2)
        self.assertEqual(nullity(K3), 1)

    def test_looped_triangle_is_nonsingular(self):
        self.assertEqual(nullity(K3_LOOPED), 0)

    def test_empty_matrix_is_nonsingular(self):
        self.assertTrue(theorems.zero_by_zero_is_nonsingular())


class NullspaceTests(SimpleTestCase):

    def test_identity_has_trivial_nullspace(self):
        self.assertEqual(nullspace(BitMatrix.identity(2)), Subspace.zero(2))

    def test_triangle(self):
        self.assertEqual(nullspace(K3), Subspace.span(3, [0b111]))

    def test_single_equation(self):
        self.assertEqual(nullspace(BitMatrix.from_rows([[1, 1]])), Subspace.span(2, [0b11]))

    def test_random_matrices_against_brute_force(self):
        rng = random.Random(7)
        for _ in range(200):
            m = random_matrix(rng, rng.randint(0, 6), rng.randint(0, 6))
            self.assertEqual(nullspace(m), theorems.brute_force_nullspace(m))
            self.assertTrue(theorems.rank_plus_nullity(m))
            self.assertTrue(theorems.nullspace_is_annihilated(m))


class SubspaceTests(SimpleTestCase):

    def test_span_is_canonical(self):
        a = Subspace.span(3, [0b011, 0b110])
        b = Subspace.span(3, [0b101, 0b011, 0b110])
        self.assertEqual(a, b)
        self.assertEqual(a.basis, (0b101, 0b110))

    def test_rejects_non_echelon_basis(self):
        with self.assertRaises(DimensionMismatchError):
            Subspace(3, (0b011, 0b010))

    def test_complement_of_zero_is_full(self):
        self.assertEqual(orthogonal_complement(Subspace.zero(3)), Subspace.full(3))

    def test_complement_of_all_ones(self):
        comp = orthogonal_complement(Subspace.span(3, [0b111]))
        self.assertEqual(comp, Subspace.span(3, [0b011, 0b110]))

    def test_complement_is_involution_on_all_small_subspaces(self):
        for n in range(5):
            for w in all_subspaces(n):
                self.assertTrue(theorems.complement_is_involution(w))

    def test_subspace_counts(self):
        self.assertEqual([sum(1 for _ in all_subspaces(n)) for n in range(6)], [1, 2, 5, 16, 67, 374])

    def test_avoiding_and_dropping(self):
        w = Subspace.span(3, [0b111, 0b011])
        self.assertEqual(w.avoiding(0b001), Subspace.span(3, [0b100]))
        self.assertEqual(w.drop_coordinates(0b001), Subspace.full(2))

    def test_intersection(self):
        a = Subspace.span(3, [0b011, 0b100])
        b = Subspace.span(3, [0b111])
        self.assertEqual(a.intersection(b), Subspace.span(3, [0b111]))
        self.assertTrue(Subspace.span(3, [0b111]) < a)

    def test_vector_enumeration_gate(self):
        with override_settings(GF2_EXHAUSTIVE_MAX_COLS=2):
            with self.assertRaises(SizeGateExceeded):
                list(Subspace.full(3).vectors())


class SymmetrizeTests(SimpleTestCase):

    def test_zero_matrix(self):
        self.assertEqual(symmetrize_nullspace(BitMatrix.zeros(2, 3)), BitMatrix.zeros(3, 3))

    def test_full_rank(self):
        self.assertEqual(symmetrize_nullspace(BitMatrix.identity(3)), BitMatrix.identity(3))

    def test_single_row(self):
        result = symmetrize_nullspace(BitMatrix.from_rows([[1, 1]]))
        self.assertEqual(result.to_lists(), [[1, 1], [1, 1]])

    def test_random_matrices(self):
        rng = random.Random(11)
        for _ in range(300):
            a = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 8))
            self.assertTrue(theorems.symmetrization_keeps_nullspace(a))


class PrincipalSubmatrixTests(SimpleTestCase):

    def test_full_set(self):
        self.assertEqual(principal_submatrix(K3, range(3)), K3)

    def test_empty_set(self):
        self.assertEqual(principal_submatrix(K3, []), BitMatrix(0, 0))

    def test_looped_vertex(self):
        self.assertEqual(principal_submatrix(K3_LOOPED, [0]).to_lists(), [[1]])

    def test_out_of_range(self):
        with self.assertRaises(DimensionMismatchError):
            principal_submatrix(K3, [3])

    def test_principal_nullity_matches_submatrix(self):
        for mask in range(8):
            s = [i for i in range(3) if mask >> i & 1]
            self.assertEqual(principal_nullity(K3, mask), nullity(principal_submatrix(K3, s)))

    def test_gray_code_nullities_match_elimination(self):
        rng = random.Random(7)
        for _ in range(40):
            m = random_symmetric_matrix(rng, rng.randint(0, 6))
            walked = list(principal_nullities(m))
            self.assertEqual([s for s, _ in walked], list(gray_code_subsets(m.rows)))
            for s, nu in walked:
                self.assertEqual(nu, principal_nullity(m, s))

    def test_strong_principal_minors(self):
        rng = random.Random(3)
        for _ in range(150):
            m = random_symmetric_matrix(rng, rng.randint(1, 7))
            self.assertTrue(theorems.strong_principal_minors(m))


class HelperTests(SimpleTestCase):

    def test_gray_code_visits_every_subset_once(self):
        order = list(gray_code_subsets(4))
        self.assertEqual(sorted(order), list(range(16)))
        for a, b in zip(order, order[1:]):
            self.assertEqual(bin(a ^ b).count('1'), 1)

    def test_gray_code_ranks_follow_the_chosen_vectors(self):
        choices = [(0, 0b011), (0b100, 0b110), (0, 0b101)]
        for mask, r in gray_code_ranks(choices):
            chosen = [choices[k][mask >> k & 1] for k in range(3)]
            self.assertEqual(r, len(echelon_basis(chosen)))

    def test_echelon_basis_pivots_ascend(self):
        basis = echelon_basis([0b110, 0b011, 0b101])
        self.assertEqual(basis, (0b101, 0b110))

    def test_vector_xor_length_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            BitVector(2, 1) ^ BitVector(3, 1)
