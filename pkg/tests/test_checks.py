import sys
from types import SimpleNamespace
from unittest import mock

from django.test import SimpleTestCase, override_settings

from MKX.checks import check_generic_s, check_slow_tests, check_threads


def mock_dev_mode(value):
    return mock.patch.object(
        sys,
        'flags',
        SimpleNamespace(dev_mode=value),
    )


def motzkin_settings(**overrides):
    values = {'THREADS': 1, 'SEED': 1729, 'GENERIC_S': ['5/7', '2/3', '3'], 'SLOW_TESTS': False}
    values.update(overrides)
    return override_settings(MOTZKIN=values)


class CheckSlowTestsTests(SimpleTestCase):
    def test_success_slow_without_dev_mode(self):
        with motzkin_settings(SLOW_TESTS=True), mock_dev_mode(False):
            result = check_slow_tests()

        self.assertEqual(result, [])

    def test_success_dev_mode_without_slow(self):
        with motzkin_settings(SLOW_TESTS=False), mock_dev_mode(True):
            result = check_slow_tests()

        self.assertEqual(result, [])

    def test_warn_slow_in_dev_mode(self):
        with motzkin_settings(SLOW_TESTS=True), mock_dev_mode(True):
            result = check_slow_tests()

        self.assertEqual(len(result), 1)
        self.assertEqual(result[0].id, 'MKX.W001')


class CheckThreadsTests(SimpleTestCase):
    def test_success(self):
        with motzkin_settings(THREADS=2), mock.patch('os.cpu_count', return_value=4):
            result = check_threads()

        self.assertEqual(result, [])

    def test_fail_zero(self):
        with motzkin_settings(THREADS=0):
            result = check_threads()

        self.assertEqual([error.id for error in result], ['MKX.E001'])

    def test_warn_oversubscribed(self):
        with motzkin_settings(THREADS=16), mock.patch('os.cpu_count', return_value=4):
            result = check_threads()

        self.assertEqual([error.id for error in result], ['MKX.W002'])


class CheckGenericSTests(SimpleTestCase):
    def test_success(self):
        with motzkin_settings():
            result = check_generic_s()

        self.assertEqual(result, [])

    def test_fail(self):
        with motzkin_settings(GENERIC_S=['5/7', '1', 'abc', '0']):
            result = check_generic_s()

        self.assertEqual([error.id for error in result], ['MKX.E002'] * 3)
