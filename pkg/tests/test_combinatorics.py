from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from motzkin.combinatorics import (
    MotzkinPath,
    OneFactor,
    catalan,
    enumerate_paths,
    enumerate_tl_paths,
    factor_to_path,
    m_count,
    m_via_temperley_lieb,
    motzkin_number,
    multiplicity_table,
    path_to_factor,
)
from motzkin.factories import MotzkinPathFactory

# Whites 1, 11, 13, 20; blacks 8, 12, 15, 19.
TWENTY_STEPS = (1, 1, 1, -1, 1, -1, -1, 0, 1, -1, 1, 0, 1, 1, 0, 1, -1, -1, 0, 1)


class CountingTests(SimpleTestCase):
    def test_motzkin_numbers(self):
        self.assertEqual(
            [motzkin_number(n) for n in range(9)], [1, 1, 2, 4, 9, 21, 51, 127, 323]
        )

    def test_catalan_numbers(self):
        self.assertEqual(catalan(0), 1)
        self.assertEqual(catalan(3), 5)
        self.assertEqual(catalan(10), 16796)

    def test_negative_input(self):
        with self.assertRaises(ValidationError) as ctx:
            motzkin_number(-1)

        self.assertEqual(ctx.exception.code, 'negative')

    def test_m_count(self):
        self.assertEqual(m_count(4, 1), 12)
        self.assertEqual(m_count(4, 0), 9)
        self.assertEqual(m_count(4, 5), 0)
        for k in range(8):
            with self.subTest(k=k):
                self.assertEqual(m_count(k, k), 1)

    def test_temperley_lieb_decomposition(self):
        self.assertEqual(m_via_temperley_lieb(4, 2), 9)
        self.assertEqual(m_via_temperley_lieb(4, 3), 4)
        self.assertEqual(m_via_temperley_lieb(6, 0), 51)
        for k in range(11):
            for r in range(k + 1):
                self.assertEqual(m_via_temperley_lieb(k, r), m_count(k, r))

    def test_dimension_identities(self):
        for k in range(11):
            with self.subTest(k=k):
                self.assertEqual(sum(m_count(k, r) ** 2 for r in range(k + 1)), motzkin_number(2 * k))
        for k in range(13):
            with self.subTest(k=k):
                self.assertEqual(sum((r + 1) * m_count(k, r) for r in range(k + 1)), 3**k)

    def test_bratteli_levels(self):
        table = multiplicity_table(4)

        self.assertEqual(table[1], [1, 1])
        self.assertEqual(table[-1], [9, 12, 9, 4, 1])


class MotzkinPathTests(SimpleTestCase):
    def test_rejects_negative_height(self):
        with self.assertRaises(ValidationError) as ctx:
            MotzkinPath((1, -1, -1))

        self.assertEqual(ctx.exception.code, 'invalid_path')

    def test_rejects_bad_step(self):
        with self.assertRaises(ValidationError):
            MotzkinPath((2,))

    def test_rank_and_edges(self):
        p = MotzkinPath(TWENTY_STEPS)

        self.assertEqual(p.rank, 4)
        self.assertEqual(p.edge_count, 6)
        self.assertEqual(p.truncate(), MotzkinPath(TWENTY_STEPS[:-1]))

    def test_enumerate_small(self):
        self.assertEqual(enumerate_paths(2, 0), [MotzkinPath((0, 0)), MotzkinPath((1, -1))])
        self.assertEqual(len(enumerate_paths(4)), 35)

    def test_enumerate_sizes(self):
        for k in range(7):
            for r in range(k + 1):
                self.assertEqual(len(enumerate_paths(k, r)), m_count(k, r))

    def test_enumeration_is_sorted(self):
        paths = enumerate_paths(5)

        self.assertEqual(paths, sorted(paths))

    def test_tl_paths(self):
        self.assertEqual(
            enumerate_tl_paths(3, 1), [MotzkinPath((1, -1, 1)), MotzkinPath((1, 1, -1))]
        )

    def test_factory(self):
        p = MotzkinPathFactory(k=6)

        self.assertEqual(p.k, 6)
        self.assertEqual(MotzkinPathFactory(k=5, r=3).rank, 3)


class OneFactorTests(SimpleTestCase):
    def test_twenty_step_example(self):
        factor = path_to_factor(MotzkinPath(TWENTY_STEPS))

        self.assertEqual(factor.whites, (1, 11, 13, 20))
        self.assertEqual(
            set(factor.edges), {(2, 7), (3, 4), (5, 6), (9, 10), (14, 18), (16, 17)}
        )
        self.assertEqual(factor.blacks, (8, 12, 15, 19))

    def test_trivial_factors(self):
        self.assertEqual(path_to_factor(MotzkinPath((0,) * 5)), OneFactor(5))
        self.assertEqual(path_to_factor(MotzkinPath((1,) * 5)), OneFactor(5, whites=(1, 2, 3, 4, 5)))
        self.assertEqual(factor_to_path(OneFactor(2, edges=((1, 2),))), MotzkinPath((1, -1)))

    def test_round_trip(self):
        for k in range(9):
            for p in enumerate_paths(k):
                self.assertEqual(factor_to_path(path_to_factor(p)), p)

    def test_white_under_edge(self):
        with self.assertRaises(ValidationError) as ctx:
            OneFactor(3, whites=(2,), edges=((1, 3),))

        self.assertEqual(ctx.exception.code, 'invalid_factor')

    def test_crossing_edges(self):
        with self.assertRaises(ValidationError):
            OneFactor(4, edges=((1, 3), (2, 4)))
