import json
import os
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from graphs.graph import MultiGraph, simplify
from graphs.text import parse_graph
from reports.models import Suite, VerificationRun
from reports.suites import SUITES, evaluate

from .serializers import GraphSerializer

TRIANGLE = 'vertices a b c\nedge a b\nedge b c\nedge a c\n'
TWO_ISOLATED = 'vertices a b\n'


def run(*args, stdin=''):
    out = StringIO()
    call_command(*args, stdin=StringIO(stdin), stdout=out)
    return out.getvalue()


def run_json(*args, stdin=''):
    return json.loads(run(*args, '--format', 'json', stdin=stdin))


def failing_suite(rng, max_n, trials):
    yield evaluate('never holds', lambda: False, describe=lambda: {'n': 0})


class GraphCommandTests(SimpleTestCase):

    def test_info(self):
        output = run('info', stdin=TRIANGLE)
        self.assertIn('kind: looped simple graph', output)
        self.assertIn('rank: 2\nnullity: 1', output)
        data = run_json('info', stdin=TRIANGLE)
        self.assertEqual(data['matroid']['circuits'], [['a', 'b', 'c']])

    def test_info_on_a_multigraph(self):
        data = run_json('info', stdin='vertices a b\nedge a b\nedge a b\nloop a\n')
        self.assertEqual((data['kind'], data['edge_count'], data['loop_count']), ('multigraph', 2, 1))
        self.assertNotIn('matroid', data)

    def test_circuits(self):
        self.assertEqual(run('circuits', stdin=TRIANGLE), 'a b c\n')
        self.assertEqual(run('circuits', '--matroid', 'polygon', stdin=TRIANGLE), 'e0 e1 e2\n')

    def test_tripartition(self):
        self.assertEqual(run('tripartition', stdin=TRIANGLE), 'a: case3\nb: case3\nc: case3\n')
        [first, *_] = run_json('tripartition', stdin=TRIANGLE)
        self.assertEqual(first['vertex'], 'a')
        self.assertEqual(first['evidence'], [False, True])
        self.assertIn(first['case_after_local_complement'], ['case1', 'case2', 'case3'])

    def test_contract(self):
        output = run('minor', '--contract', 'a', stdin=TRIANGLE)
        self.assertIn('contract a by route unlooped_neighbor', output)
        self.assertIn('local complements: b a', output)
        self.assertTrue(output.endswith('circuits:\n  b c\n'))
        data = run_json('minor', '--contract', 'a', '--via', 'c', stdin=TRIANGLE)
        self.assertEqual(data['local_complements'], ['c', 'a'])
        self.assertEqual(data['matroid']['ground'], ['b', 'c'])

    def test_delete(self):
        self.assertEqual(run('minor', '--delete', 'a', stdin=TRIANGLE), 'delete a\ncircuits: none\n')

    def test_trio(self):
        output = run('trio', '--vertex', 'a', stdin=TRIANGLE)
        self.assertIn('equal: loop loop_isolate\nodd: plain\nnullity: 0\nodd nullity: 1', output)

    def test_interlace(self):
        self.assertEqual(run('interlace', stdin=TWO_ISOLATED), 'y^2\n')
        for method in ('subset', 'recursive', 'lambda'):
            self.assertEqual(
                run('interlace', '--method', method, stdin=TRIANGLE), 'x^2 y + 2 x^2 - 2 x y - 4 x + 4 y\n'
            )
        data = run_json('interlace', stdin=TWO_ISOLATED)
        self.assertEqual(data, {'kind': 'interlace', 'text': 'y^2', 'terms': [[0, 2, 1]]})

    def test_multigraph_input_is_simplified(self):
        with self.assertLogs('cli.base', 'WARNING'):
            self.assertEqual(run('interlace', stdin='vertices a b\nedge a b\nedge a b\n'), 'x^2 - 2 x + 2 y\n')

    def test_tutte(self):
        self.assertEqual(run('tutte', stdin=TRIANGLE), 'x^2 + x + y\n')
        self.assertEqual(run('tutte', '--method', 'subset', stdin=TRIANGLE), 'x^2 + x + y\n')
        self.assertEqual(run('tutte', '--matroid', 'polygon', stdin=TRIANGLE), 'x^2 + x + y\n')

    def test_lambda(self):
        self.assertEqual(run('lambda', stdin=TRIANGLE), 'y - 1\n')
        self.assertEqual(run('lambda', '--terms', stdin=TRIANGLE), run('interlace', stdin=TRIANGLE))
        self.assertEqual(run('lambda', '--vertex', 'a', stdin='vertices a\nloop a\n'), 'x - 1\n')

    def test_delta(self):
        self.assertEqual(run('delta', stdin=TRIANGLE), '(a b c; {}, {a,b}, {a,c}, {b,c})\n')
        self.assertEqual(run('delta', '--min', stdin=TRIANGLE), '(a b c; {})\n')
        data = run_json('delta', '--max', stdin=TRIANGLE)
        self.assertEqual(data['family'], [['a', 'b'], ['a', 'c'], ['b', 'c']])
        self.assertFalse(data['normal'])

    def test_delta_flips(self):
        flipped = run_json('delta', '--flip', 'pivot:a', '--flip', 'pivot:a', stdin=TRIANGLE)
        self.assertEqual(flipped, run_json('delta', stdin=TRIANGLE))
        with self.assertRaisesMessage(CommandError, 'KIND:VERTEX'):
            run('delta', '--flip', 'twist:a', stdin=TRIANGLE)

    def test_symmetrize(self):
        data = run_json('symmetrize', stdin='1 1 0\n0 1 1\n')
        rows = data['rows']
        self.assertEqual(data['nullity'], 1)
        self.assertEqual(rows, [list(r) for r in zip(*rows)])
        self.assertTrue(all(sum(r) % 2 == 0 for r in rows))


class FourRegularCommandTests(SimpleTestCase):

    def test_realize_then_touchgraph(self):
        realized = run('realize', stdin=TRIANGLE)
        self.assertIn('transition a~b', realized)
        touch, _ = parse_graph(run('touchgraph', stdin=realized))
        self.assertIsInstance(touch, MultiGraph)
        self.assertEqual(touch.n, 3)
        self.assertEqual(sorted(touch.edge_labels), ['a~b', 'a~c', 'b~c'])
        self.assertEqual(len(simplify(touch).edges()), 3)

    def test_json_round_trip(self):
        text_graph = parse_graph(run('realize', stdin=TRIANGLE))
        serializer = GraphSerializer(data=run_json('realize', stdin=TRIANGLE))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.build(), text_graph)

    def test_json_input(self):
        realized = run('realize', '--format', 'json', stdin=TRIANGLE)
        from_text = run('touchgraph', stdin=run('realize', stdin=TRIANGLE))
        self.assertEqual(run('touchgraph', stdin=realized), from_text)

    def test_circuits_of_partition(self):
        output = run('touchgraph', '--circuits', stdin=run('realize', stdin=TRIANGLE))
        self.assertEqual(len(output.splitlines()), 3)
        self.assertTrue(output.startswith('c0: '))

    def test_not_realizable(self):
        with self.assertRaisesMessage(CommandError, 'not_realizable'):
            run('realize', stdin=TWO_ISOLATED)


class InputErrorTests(SimpleTestCase):

    def test_unknown_vertex(self):
        with self.assertRaises(CommandError) as cm:
            run('info', stdin='vertices a b c\nedge a d\n')
        self.assertIn('line 2', str(cm.exception))
        self.assertEqual(cm.exception.returncode, 1)

    def test_invalid_json(self):
        with self.assertRaisesMessage(CommandError, 'vertex names are not distinct'):
            run('info', stdin='{"vertices": ["a", "a"]}')
        with self.assertRaises(CommandError):
            run('info', stdin='{"vertices": ')

    def test_unknown_vertex_option(self):
        with self.assertRaisesMessage(CommandError, 'unknown_element'):
            run('trio', '--vertex', 'z', stdin=TRIANGLE)

    def test_usage_error(self):
        with self.assertRaises(CommandError) as cm:
            run('minor', stdin=TRIANGLE)
        self.assertEqual(cm.exception.returncode, 1)

    def test_input_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'triangle.txt')
            with open(path, 'w', encoding='utf-8') as handle:
                handle.write(TRIANGLE)
            self.assertEqual(run('tutte', '--input', path), 'x^2 + x + y\n')
            with self.assertRaisesMessage(CommandError, 'cannot read'):
                run('tutte', '--input', os.path.join(directory, 'missing.txt'))


class VerifyCommandTests(TestCase):

    def test_passing_suite(self):
        output = run('verify', '--suite', 'delta', '--max-n', '2', '--trials', '2')
        lines = output.splitlines()
        self.assertEqual(lines[0], 'suite delta max_n 2 trials 2 seed 0')
        self.assertTrue(lines[-1].endswith('passed, 0 failed'))
        self.assertEqual(output, run('verify', '--suite', 'delta', '--max-n', '2', '--trials', '2'))

    def test_json_report(self):
        data = run_json('verify', '--suite', 'fourreg', '--max-n', '2', '--trials', '1', '--seed', '3')
        self.assertTrue(data['passed'])
        self.assertEqual(data['seed'], 3)
        self.assertTrue(all(check['suite'] == 'fourreg' for check in data['checks']))

    @mock.patch.dict(SUITES, {Suite.POLY: failing_suite})
    def test_failure_exits_with_two(self):
        out = StringIO()
        with self.assertRaises(CommandError) as cm:
            call_command('verify', '--suite', 'poly', '--max-n', '1', '--trials', '1', '--save', stdout=out)
        self.assertEqual(cm.exception.returncode, 2)
        self.assertIn('counterexample: {"n":0}', out.getvalue())
        self.assertEqual(VerificationRun.objects.count(), 1)

        history = run('verify', '--history', '5')
        self.assertTrue(history.endswith('suite poly max_n 1 trials 1 seed 0 failed\n'))
        [stored] = run_json('verify', '--history', '1')
        self.assertEqual(stored['checks'][0]['counterexample'], {'n': 0})
