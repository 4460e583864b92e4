from unittest import skipUnless

from django.conf import settings
from django.core.exceptions import ValidationError
from django.test import SimpleTestCase
from sympy import QQ

from motzkin.verification import SuiteContext, run_suite, suite_names


class RunSuiteTests(SimpleTestCase):
    def assertPassed(self, report):
        failed = [name for name, held in report['details'].items() if not held]
        self.assertEqual(failed, [])
        self.assertTrue(report['pass'])

    def test_counting(self):
        report = run_suite('counting', 4)

        self.assertEqual(report['check'], 'counting')
        self.assertEqual(report['k'], 4)
        self.assertPassed(report)

    def test_diagram_algebra(self):
        self.assertPassed(run_suite('diagram-algebra', 3))
        self.assertPassed(run_suite('diagram-algebra', 4))

    def test_basic_construction(self):
        self.assertPassed(run_suite('basic-construction', 3))

    def test_basic_construction_m2_to_m4(self):
        self.assertPassed(run_suite('basic-construction', 4))

    def test_cell_modules(self):
        self.assertPassed(run_suite('cell-modules', 3))

    def test_cellularity(self):
        self.assertPassed(run_suite('cellularity', 2))

    def test_gram(self):
        self.assertPassed(run_suite('gram', 4, threads=2))

    def test_semisimplicity(self):
        self.assertPassed(run_suite('semisimplicity', 4))

    def test_schur_weyl(self):
        self.assertPassed(run_suite('schur-weyl', 2, generic_s=['5/7']))

    def test_highest_weight(self):
        self.assertPassed(run_suite('highest-weight', 3))

    def test_all(self):
        report = run_suite('all', 2)

        self.assertEqual(set(report['suites']), set(suite_names()) - {'all'})
        self.assertPassed(report)

    def test_all_k3(self):
        self.assertPassed(run_suite('all', 3))

    @skipUnless(settings.MOTZKIN['SLOW_TESTS'], 'slow tests disabled')
    def test_gram_k6(self):
        report = run_suite('gram', 6, threads=2)

        self.assertTrue(report['details']['interpolation'])
        self.assertPassed(report)

    def test_reproducible(self):
        self.assertEqual(run_suite('cell-modules', 2, seed=7), run_suite('cell-modules', 2, seed=7))

    def test_unknown_suite(self):
        with self.assertRaises(ValidationError) as ctx:
            run_suite('nope', 3)

        self.assertEqual(ctx.exception.code, 'unknown_suite')

    def test_bad_generic_s(self):
        with self.assertRaises(ValidationError) as ctx:
            run_suite('schur-weyl', 2, generic_s=['five'])

        self.assertEqual(ctx.exception.code, 'bad_rational')


class SuiteContextTests(SimpleTestCase):
    def test_k_must_be_positive(self):
        with self.assertRaises(ValidationError):
            SuiteContext(0)

    def test_specializations(self):
        ctx = SuiteContext(2, generic_s=[QQ(5, 7)])

        self.assertEqual([spec.label for spec in ctx.specializations], ['5/7'])

    def test_rng_is_seeded(self):
        self.assertEqual(SuiteContext(2, seed=3).rng.random(), SuiteContext(2, seed=3).rng.random())
