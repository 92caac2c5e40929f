from contextlib import redirect_stderr, redirect_stdout
from io import StringIO

from django.test import TestCase

from salmonrun import cli


class CliTestCase(TestCase):

    def test_verbosity(self):
        self.assertEqual(cli._verbosity(['list']), 1)
        self.assertEqual(cli._verbosity(['list', '-v', '3']), 3)
        self.assertEqual(cli._verbosity(['list', '--verbosity=0']), 0)
        self.assertEqual(cli._verbosity(['list', '-v2']), 2)

    def test_unknown_command(self):
        err = StringIO()
        with redirect_stderr(err):
            self.assertEqual(cli.main(['bogus']), 2)
        self.assertIn('bogus', err.getvalue())

    def test_list(self):
        out = StringIO()
        with redirect_stdout(out):
            self.assertEqual(cli.main(['list']), 0)
        self.assertIn('tgsr', out.getvalue())
        self.assertIn('rosenbrock', out.getvalue())

    def test_run(self):
        out = StringIO()
        with redirect_stdout(out):
            cli.main(['run', '--algo', 'random', '--fn', 'sphere', '--dim', '3', '--set', 'budget=20'])
        self.assertIn('evaluations: 20', out.getvalue())
