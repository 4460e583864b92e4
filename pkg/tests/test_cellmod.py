from itertools import product
from unittest import mock, skipUnless

from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy import QQ

from motzkin import scalars
from motzkin.algebra import identity_element
from motzkin.cellmod import (
    PathVector,
    ReductionError,
    act_on_path,
    bilinear,
    bracket_orthogonality_check,
    bracket_vector,
    cell_act,
    character,
    character_value,
    determinant,
    gram_block_check,
    gram_det_direct,
    gram_det_formula,
    gram_det_interpolated,
    gram_matrix,
    is_semisimple,
    path_idempotent_check,
    pivot_lemma_check,
    restriction_check,
    tl_closure_check,
    tl_gram_matrix,
)
from motzkin.combinatorics import MotzkinPath, OneFactor, enumerate_paths, factor_to_path, m_count
from motzkin.diagrams import diagram_from_paths, from_edges, generator, identity
from motzkin.scalars import X


class ActionTests(SimpleTestCase):
    def test_identity_fixes_paths(self):
        for p in enumerate_paths(4):
            self.assertEqual(act_on_path(identity(4), p), (0, p))

    def test_d_p_q_sends_p_to_q(self):
        for r in range(5):
            for p, q in product(enumerate_paths(4, r), repeat=2):
                self.assertEqual(act_on_path(diagram_from_paths(p, q), p), (p.edge_count, q))

    def test_twenty_strand_action(self):
        d = from_edges(
            20,
            [
                tuple(edge.split('-'))
                for edge in (
                    'T3-B1 T7-B8 T10-B9 T11-B13 T12-B14 T13-B16 T17-B17 T19-B18 T20-B19 '
                    'B2-B3 B4-B5 B6-B7 B10-B11 T1-T2 T4-T6 T8-T9 T14-T16'
                ).split()
            ],
        )
        p = MotzkinPath((1, 1, 1, -1, 1, -1, -1, 0, 1, -1, 1, 0, 1, 1, 0, 1, -1, -1, 0, 1))
        arcs = ((1, 2), (4, 6), (8, 9), (12, 19), (13, 17), (14, 16))
        q = factor_to_path(OneFactor(20, (3, 10, 11), arcs))

        self.assertEqual(act_on_path(d, p), (1, q))
        # rank 4 drops to 3, so d acts as zero on C_20^(4)
        self.assertEqual(cell_act(d, p, 4), PathVector(20, 4))

    def test_cell_act(self):
        t = generator('t', 2, 1)

        self.assertEqual(
            cell_act(t, MotzkinPath((0, 0)), 0), PathVector(2, 0, [(MotzkinPath((1, -1)), scalars.PolyRing.one)])
        )
        self.assertEqual(cell_act(t, MotzkinPath((1, -1)), 0), PathVector(2, 0, [(MotzkinPath((1, -1)), X)]))

    def test_vectors_of_different_cell_modules_differ(self):
        self.assertNotEqual(PathVector(2, 0), PathVector(2, 1))
        self.assertNotEqual(PathVector(2, 0), PathVector(3, 0))
        self.assertEqual(PathVector(2, 1), PathVector(2, 1))

    def test_rank_drop_is_zero(self):
        p1 = generator('p', 2, 1)

        self.assertEqual(cell_act(p1, MotzkinPath((1, 0)), 1), PathVector(2, 1))

    def test_rank_mismatch(self):
        with self.assertRaises(ValidationError) as ctx:
            cell_act(identity(2), MotzkinPath((1, 0)), 0)

        self.assertEqual(ctx.exception.code, 'rank_mismatch')

    def test_path_idempotents(self):
        for k, r in ((3, 1), (4, 0), (4, 2)):
            self.assertTrue(path_idempotent_check(k, r))

    def test_restriction(self):
        for k in (2, 3, 4):
            for r in range(k + 1):
                with self.subTest(k=k, r=r):
                    self.assertTrue(restriction_check(k, r))

    def test_tl_closure(self):
        self.assertTrue(tl_closure_check(4, 0))
        self.assertTrue(tl_closure_check(3, 1))


class CharacterTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(character(4, 0, 2), 2)
        self.assertEqual(character(4, 1, 4), 12)

    def test_vanishes_above_ell(self):
        self.assertEqual(character(4, 3, 2), 0)

    def test_full_identity_is_dimension(self):
        for r in range(4):
            self.assertEqual(character(3, r, 3), m_count(3, r))
            self.assertEqual(character_value(identity_element(3), r), m_count(3, r))


class GramTests(SimpleTestCase):
    def test_bilinear_k2(self):
        zero, edge = MotzkinPath((0, 0)), MotzkinPath((1, -1))

        self.assertEqual(bilinear(zero, zero, 0), 1)
        self.assertEqual(bilinear(zero, edge, 0), 1)
        self.assertEqual(bilinear(edge, edge, 0), X)

    def test_bilinear_rank_mismatch(self):
        with self.assertRaises(ValidationError):
            bilinear(MotzkinPath((1, 0)), MotzkinPath((0, 0)), 0)

    def test_gram_k2(self):
        gram = gram_matrix(2, 0)

        self.assertEqual(gram.paths, [MotzkinPath((0, 0)), MotzkinPath((1, -1))])
        self.assertEqual(gram.entries, [[1, 1], [1, X]])
        self.assertEqual(gram.to_json()['entries'], [['1', '1'], ['1', 'x']])

    def test_top_ranks(self):
        gram = gram_matrix(3, 2)
        for i, row in enumerate(gram.entries):
            self.assertEqual(row, [1 if i == j else 0 for j in range(gram.size)])
        self.assertEqual(gram_matrix(3, 3).entries, [[1]])

    def test_threads_give_same_matrix(self):
        self.assertEqual(gram_matrix(4, 0, threads=4).entries, gram_matrix(4, 0).entries)

    def test_out_of_range(self):
        with self.assertRaises(ValidationError):
            gram_matrix(3, 4)

    def test_tl_determinant(self):
        self.assertEqual(determinant(tl_gram_matrix(3, 1)), X**2 - 1)


class DeterminantTests(SimpleTestCase):
    def test_formula_small(self):
        self.assertEqual(gram_det_formula(2, 0), X - 1)
        self.assertEqual(gram_det_formula(3, 3), 1)
        self.assertEqual(gram_det_formula(3, 2), 1)

    def test_formula_matches_direct(self):
        for k in range(1, 6):
            for r in range(k + 1):
                with self.subTest(k=k, r=r):
                    self.assertEqual(gram_det_formula(k, r), gram_det_direct(k, r))

    def test_interpolation_matches_direct(self):
        for k, r in ((3, 1), (4, 0), (4, 2)):
            self.assertEqual(gram_det_interpolated(k, r), gram_det_direct(k, r))

    def test_non_polynomial_product(self):
        with mock.patch('motzkin.scalars.shifted_chebyshev_ratio', return_value=scalars.ratfn(1, X)):
            with self.assertRaises(ReductionError):
                gram_det_formula(2, 0)

    @skipUnless(settings.MOTZKIN['SLOW_TESTS'], 'slow tests disabled')
    def test_formula_matches_direct_k6(self):
        for r in range(7):
            self.assertEqual(gram_det_formula(6, r), gram_det_direct(6, r))

    @skipUnless(settings.MOTZKIN['SLOW_TESTS'], 'slow tests disabled')
    def test_interpolation_matches_direct_k6(self):
        for r in range(7):
            with self.subTest(r=r):
                self.assertEqual(gram_det_interpolated(6, r), gram_det_direct(6, r))


class BracketTests(SimpleTestCase):
    def test_single_edge(self):
        one = scalars.RatFnField.one
        expected = PathVector(2, 0, [(MotzkinPath((1, -1)), one), (MotzkinPath((0, 0)), -one)])

        self.assertEqual(bracket_vector(MotzkinPath((1, -1)), 0), expected)

    def test_two_step_chain(self):
        one = scalars.RatFnField.one
        a = scalars.shifted_chebyshev_ratio(1, 2)
        b = scalars.shifted_chebyshev_ratio(0, 2)
        expected = PathVector(
            5,
            2,
            [
                (MotzkinPath((1, 1, 1, 0, -1)), one),
                (MotzkinPath((1, 1, 0, 0, 0)), -one),
                (MotzkinPath((1, 1, -1, 0, 1)), -a),
                (MotzkinPath((1, 0, 0, 0, 1)), a),
                (MotzkinPath((1, -1, 1, 0, 1)), b),
                (MotzkinPath((0, 0, 1, 0, 1)), -b),
            ],
        )

        self.assertEqual(bracket_vector(MotzkinPath((1, 1, 1, 0, -1)), 2), expected)
        self.assertEqual(b, scalars.ratfn(1, X**2 - 2 * X))

    def test_needs_final_down_step(self):
        with self.assertRaises(ValidationError) as ctx:
            bracket_vector(MotzkinPath((1, 0)), 1)

        self.assertEqual(ctx.exception.code, 'not_pivoted')

    def test_pivot_lemma(self):
        for k in range(1, 6):
            for r in range(k + 1):
                with self.subTest(k=k, r=r):
                    self.assertTrue(pivot_lemma_check(k, r))

    def test_pivot_lemma_k3_with_moved_pivot(self):
        # (1,1,-1) recurses into (1,-1,1), whose pivot leaves a white on its right
        self.assertTrue(pivot_lemma_check(3, 1))

    def test_orthogonality(self):
        for k in range(1, 6):
            for r in range(k + 1):
                with self.subTest(k=k, r=r):
                    self.assertTrue(bracket_orthogonality_check(k, r))

    def test_gram_blocks(self):
        for k in range(1, 6):
            for r in range(k + 1):
                with self.subTest(k=k, r=r):
                    self.assertTrue(gram_block_check(k, r))


class SemisimplicityTests(SimpleTestCase):
    def test_roots_of_u2(self):
        report = is_semisimple(3, 2)

        self.assertFalse(report.semisimple)
        self.assertEqual(report.failing_j, [2])
        self.assertEqual(report.to_json(), {'k': 3, 'x': '2', 'semisimple': False, 'failing_j': [2]})

    def test_x_equal_one(self):
        self.assertEqual(is_semisimple(2, 1).failing_j, [1])

    def test_generic(self):
        for k in range(1, 13):
            self.assertTrue(is_semisimple(k, 5).semisimple)
        self.assertTrue(is_semisimple(4, QQ(1, 3)).semisimple)

    def test_k1_always(self):
        self.assertTrue(is_semisimple(1, 1).semisimple)

    def test_nearest_roots(self):
        roots = is_semisimple(3, 2).nearest_roots()

        self.assertEqual([row['j'] for row in roots], [1, 2])
        self.assertAlmostEqual(roots[1]['distance'], 0)

    def test_bad_k(self):
        with self.assertRaises(ValidationError):
            is_semisimple(0, 2)
