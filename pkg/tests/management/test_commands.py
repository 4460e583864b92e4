import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock, skipUnless

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from motzkin import cli
from motzkin.diagrams import generator
from motzkin.management.commands import semisimple

T = '[["T1", "T2"], ["B1", "B2"]]'


class CommandTestCase(SimpleTestCase):
    def call_command(self, *args, **kwargs):
        out = StringIO()
        err = StringIO()
        call_command(
            *args,
            stdout=out,
            stderr=err,
            **kwargs,
        )
        return out.getvalue(), err.getvalue()

    def call_json(self, *args):
        out, err = self.call_command(*args, '--format', 'json')
        self.assertEqual(err, '')
        return json.loads(out)


class CountTests(CommandTestCase):
    def test_text(self):
        out, err = self.call_command('count', '--k', '4')

        self.assertTrue(out.startswith('dim M_4 = M_8 = 323\n'))
        self.assertTrue(out.endswith('k=4: 9 12 9 4 1\n'))
        self.assertEqual(err, '')

    def test_json(self):
        payload = self.call_json('count', '--k', '3')

        self.assertEqual(payload['dimension'], 51)
        self.assertEqual(payload['catalan'], [1, 1, 2, 5])
        self.assertEqual(payload['m'][3], [4, 5, 3, 1])


class EnumerateTests(CommandTestCase):
    def test_paths(self):
        out, _ = self.call_command('enumerate', 'paths', '--k', '2', '--r', '0')

        self.assertEqual(out, '(0,0)\n(1,-1)\n')

    def test_diagrams_by_rank(self):
        payload = self.call_json('enumerate', 'diagrams', '--k', '2', '--r', '0')

        self.assertEqual(payload['count'], 4)

    def test_bad_rank(self):
        with self.assertRaises(CommandError) as ctx:
            self.call_command('enumerate', 'paths', '--k', '2', '--r', '3')

        self.assertEqual(ctx.exception.returncode, 2)


class MultiplyTests(CommandTestCase):
    def test_loop(self):
        payload = self.call_json('multiply', T, T, '--k', '2')

        self.assertEqual(payload['loops'], 1)
        self.assertEqual(payload['coefficient'], 'x')
        self.assertEqual(payload['diagram'], generator('t', 2, 1).to_json())

    def test_evaluated(self):
        out, _ = self.call_command('multiply', T, T, '--k', '2', '--x', '3')

        self.assertTrue(out.startswith('loops: 1\ncoefficient: 3\n'))

    def test_diagram_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 't.json'
            path.write_text(json.dumps(generator('t', 2, 1).to_json()), encoding='utf-8')
            payload = self.call_json('multiply', str(path), str(path))

        self.assertEqual(payload['loops'], 1)

    def test_invalid_diagram(self):
        with self.assertRaises(CommandError) as ctx:
            self.call_command('multiply', '[["T1", "T1"]]', T, '--k', '2')

        self.assertEqual(ctx.exception.returncode, 2)

    def test_edge_list_needs_k(self):
        with self.assertRaisesMessage(CommandError, 'An inline edge list needs --k.'):
            self.call_command('multiply', T, T)


class FactorTests(CommandTestCase):
    def test_json(self):
        payload = self.call_json('factor', T, '--k', '2')

        self.assertEqual(set(payload), {'r', 't', 'l'})
        self.assertEqual(payload['t'], generator('t', 2, 1).to_json())


class GramTests(CommandTestCase):
    def test_gram(self):
        payload = self.call_json('gram', '--k', '2', '--r', '0')

        self.assertEqual(payload['entries'], [['1', '1'], ['1', 'x']])

    def test_gramdet(self):
        payload = self.call_json('gramdet', '--k', '2', '--r', '0')

        self.assertEqual(payload, {'k': 2, 'r': 0, 'direct': 'x - 1', 'formula': 'x - 1', 'equal': True})

    def test_gramdet_interpolation(self):
        out, _ = self.call_command('gramdet', '--k', '4', '--r', '0', '--method', 'interpolation')

        self.assertTrue(out.endswith('equal:   true\n'))

    @skipUnless(settings.MOTZKIN['SLOW_TESTS'], 'slow tests disabled')
    def test_gramdet_interpolation_k6(self):
        payload = self.call_json('gramdet', '--k', '6', '--r', '0', '--method', 'interpolation')

        self.assertTrue(payload['equal'])

    def test_bad_threads(self):
        with self.assertRaises(CommandError) as ctx:
            self.call_command('gram', '--k', '2', '--r', '0', '--threads', '0')

        self.assertEqual(ctx.exception.returncode, 2)


class SemisimpleTests(CommandTestCase):
    def test_not_semisimple(self):
        payload = self.call_json('semisimple', '--k', '3', '--x', '2')

        self.assertFalse(payload['semisimple'])
        self.assertEqual(payload['failing_j'], [2])
        self.assertEqual(len(payload['nearest_roots']), 2)

    def test_text(self):
        out, _ = self.call_command('semisimple', '--k', '3', '--x', '5')

        self.assertTrue(out.startswith('M_3(5) is semisimple\nfailing j: none\n'))

    def test_bad_x(self):
        with self.assertRaises(CommandError) as ctx:
            self.call_command('semisimple', '--k', '3', '--x', 'abc')

        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_x_json(self):
        err = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command('semisimple', '--k', '3', '--x', 'abc', '--format', 'json', stdout=StringIO(), stderr=err)

        self.assertEqual(ctx.exception.code, 2)
        self.assertEqual(json.loads(err.getvalue())['code'], 'bad_rational')

    def test_usage_error_json(self):
        err = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command(semisimple.Command(stderr=err), '--k', 'abc', '--format', 'json', stdout=StringIO())

        payload = json.loads(err.getvalue())
        self.assertEqual(ctx.exception.code, 2)
        self.assertEqual(payload['code'], 'bad_arguments')
        self.assertIn('--k', payload['error'])

    def test_usage_error_text(self):
        with self.assertRaises(CommandError):
            self.call_command('semisimple', '--k', 'abc', '--x', '2')


class CharactersTests(CommandTestCase):
    def test_table(self):
        payload = self.call_json('characters', '--k', '4')

        self.assertEqual(payload['characters'][0][2], 2)
        self.assertEqual(payload['characters'][1][4], 12)
        self.assertEqual(payload['characters'][3][2], 0)


class VerifyTests(CommandTestCase):
    def test_pass(self):
        out, err = self.call_command('verify', 'counting', '--k', '3')

        self.assertTrue(out.startswith('counting (k=3): PASS\n'))
        self.assertEqual(err, '')

    def test_all_k3(self):
        payload = self.call_json('verify', 'all', '--k', '3')

        self.assertTrue(payload['pass'])
        self.assertTrue(all(payload['details'].values()))

    def test_failure(self):
        report = {'k': 3, 'check': 'counting', 'pass': False, 'details': {'square_sum': False}}
        with mock.patch('motzkin.management.commands.verify.run_suite', return_value=report):
            with self.assertRaises(CommandError) as ctx:
                self.call_command('verify', 'counting', '--k', '3')

        self.assertEqual(ctx.exception.returncode, 1)


class ConsoleScriptTests(SimpleTestCase):
    def test_exit_codes(self):
        with mock.patch('sys.stdout', new_callable=StringIO), mock.patch('sys.stderr', new_callable=StringIO):
            self.assertEqual(cli.run(['count', '--k', '2']), 0)
            self.assertEqual(cli.run(['semisimple', '--k', '3', '--x', 'abc']), 2)
