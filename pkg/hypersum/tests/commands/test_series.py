import json
from io import StringIO

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase

from hypersum.power_series import TruncatedSeries


def run_command(*args: str) -> str:
    out = StringIO()
    call_command('series', *args, stdout=out)
    return out.getvalue()


class TestSeriesCommand(SimpleTestCase):
    def test_2f1(self):
        self.assertEqual(run_command('1', '1', '1', '--order', '3'), '1, 1, 1, 1\n')

    def test_extended_terminating(self):
        self.assertEqual(run_command('-1', '-2', '-3', '--order', '4'), '1, -2/3, 0, 0, 0\n')

    def test_1f0(self):
        self.assertEqual(run_command('-2', '--order', '3'), '1, -2, 1, 0\n')

    def test_default_order(self):
        series = TruncatedSeries.from_text(run_command('1/2', '1', '1'))
        self.assertEqual(series.order, 24)

    def test_json(self):
        self.assertEqual(json.loads(run_command('-2', '--order', '2', '--json')),
                         {'order': 2, 'coefficients': '1, -2, 1'})

    def test_blocked(self):
        with self.assertRaises(CommandError) as cm:
            run_command('1', '1', '-2', '--order', '4')
        self.assertEqual(cm.exception.returncode, 1)

    def test_usage(self):
        for args in (('1', '2'), ('1', '1', '1', '--order', '-1')):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as cm:
                    run_command(*args)
                self.assertEqual(cm.exception.returncode, 2)
