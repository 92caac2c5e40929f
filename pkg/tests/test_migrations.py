from io import StringIO

from django.core.management import call_command
from django.test import TestCase


class MigrationTestCase(TestCase):

    def test_models_match_migrations(self):
        output = StringIO()
        try:
            call_command('makemigrations', 'salmonrun', interactive=False, dry_run=True,
                         check_changes=True, stdout=output)
        except SystemExit:
            self.fail(f'There are missing migrations:\n {output.getvalue()}')
        self.assertIn('No changes detected', output.getvalue())
