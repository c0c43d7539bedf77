import json
from io import StringIO

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase


def run_command(*args: str) -> str:
    out = StringIO()
    call_command('gosper', *args, stdout=out)
    return out.getvalue()


class TestGosperCommand(SimpleTestCase):
    def test_geometric(self):
        lines = run_command('1/2', '1').splitlines()
        self.assertEqual(len(lines), 6)
        self.assertTrue(lines[0].startswith('ratio: '))
        self.assertTrue(lines[1].startswith('normal form: a(n) = '))
        self.assertEqual(lines[4], 'sum over [0, 9]: 1023/512')
        self.assertEqual(lines[5], 'direct sum: 1023/512')

    def test_range_and_initial(self):
        lines = run_command('1/2', '1', '2', '1', '2').splitlines()
        self.assertEqual(lines[4], 'sum over [1, 2]: 3/2')

    def test_algorithm_term(self):
        lines = run_command('--alpha', '1', '--k', '2').splitlines()
        self.assertEqual(lines[4], 'sum over [0, 1]: 4/3')
        self.assertEqual(lines[5], 'direct sum: 4/3')

    def test_negative_alpha(self):
        lines = run_command('--alpha', '-1/2', '--k', '2').splitlines()
        self.assertEqual(lines[4], 'sum over [0, 1]: 2/3')

    def test_not_summable(self):
        self.assertEqual(run_command('1,1', '2,1'), 'not Gosper-summable\n')

    def test_json(self):
        record = json.loads(run_command('--alpha', '1', '--k', '2', '--json'))
        self.assertTrue(record['summable'])
        self.assertEqual(record['sum'], '4/3')
        self.assertEqual((record['n0'], record['n1']), (0, 1))
        self.assertFalse(json.loads(run_command('1,1', '2,1', '--json'))['summable'])

    def test_usage(self):
        for args in ((), ('1/2',), ('1', '0'), ('--alpha', '1'), ('1/2', '1', '--alpha', '1', '--k', '2'),
                     ('1/2', '1', '1', '5', '2'), ('--alpha', '-2', '--k', '2')):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as cm:
                    run_command(*args)
                self.assertEqual(cm.exception.returncode, 2 if args != ('--alpha', '-2', '--k', '2') else 1)
