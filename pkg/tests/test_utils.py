from django.core.exceptions import ImproperlyConfigured
from django.test import TestCase

from salmonrun import settings as salmonrun_settings
from salmonrun.core import InvalidParameters
from salmonrun.optimizers import (
    GreatSalmonRun, TgsrParams, algorithm_names, get_optimizer,
    get_optimizer_class,
)
from salmonrun.utils.loader import load_object
from salmonrun.utils.options import (
    OptionsDict, coerce_option, parse_assignment,
)
from tests.helpers import SettingsOverride


# Some target classes for the classloading tests
class TestTargetSuperClass:
    pass


class TestTargetClass(TestTargetSuperClass):
    pass


# Testing the classloader
class ClassLoaderTestCase(TestCase):
    ''' Tests salmonrun.utils.loader.load_object() '''

    def test_loader_loads_strings_properly(self):
        target = 'tests.test_utils.TestTargetClass'
        result = load_object(target)
        self.assertEqual(result, TestTargetClass)

    def test_loader_loads_class(self):
        result = load_object(TestTargetClass())
        self.assertEqual(result.__class__, TestTargetClass)

    def test_loader_loads_subclass(self):
        result = load_object(TestTargetClass)
        self.assertEqual(result, TestTargetClass)

    def test_loader_needs_a_dot(self):
        with self.assertRaises(TypeError):
            load_object('TestTargetClass')


class OptionsDictTestCase(TestCase):

    def test_merge_is_recursive(self):
        options = OptionsDict({'tgsr': {'ENGINE': 'a.B', 'OPTIONS': {'mu': 0.75, 'population': 40}}})
        options.merge({'tgsr': {'OPTIONS': {'mu': 0.5}}, 'mine': {'ENGINE': 'c.D'}})
        self.assertEqual(options['tgsr'], {'ENGINE': 'a.B', 'OPTIONS': {'mu': 0.5, 'population': 40}})
        self.assertEqual(options['mine'], {'ENGINE': 'c.D'})

    def test_replaced_keys(self):
        options = OptionsDict({'tgsr': {'OPTIONS': {'mu': 0.75}}}, replaced_keys=('OPTIONS',))
        options.merge({'tgsr': {'OPTIONS': {'population': 20}}})
        self.assertEqual(options['tgsr']['OPTIONS'], {'population': 20})


class CoerceOptionTestCase(TestCase):

    def test_types(self):
        self.assertEqual(coerce_option(TgsrParams, 'population', '40'), 40)
        self.assertEqual(coerce_option(TgsrParams, 'population', 40.0), 40)
        self.assertEqual(coerce_option(TgsrParams, 'mu', '0.5'), 0.5)
        self.assertIs(coerce_option(TgsrParams, 'random_decay', 'yes'), True)
        self.assertIs(coerce_option(TgsrParams, 'protect_best', '0'), False)
        self.assertEqual(coerce_option(TgsrParams, 'bear_leader', 'global'), 'global')

    def test_errors(self):
        for key, value in (('population', '4.5'), ('population', 'many'), ('mu', 'half'),
                           ('protect_best', 'maybe'), ('speed', '1')):
            with self.assertRaises(InvalidParameters, msg=(key, value)):
                coerce_option(TgsrParams, key, value)

    def test_parse_assignment(self):
        self.assertEqual(parse_assignment(' mu = 0.5 '), ('mu', '0.5'))
        self.assertEqual(parse_assignment('scout_branch=symmetric'), ('scout_branch', 'symmetric'))
        with self.assertRaises(InvalidParameters):
            parse_assignment('mu')
        with self.assertRaises(InvalidParameters):
            parse_assignment('=3')


class AlgorithmRegistryTestCase(TestCase):

    def test_defaults(self):
        self.assertEqual(algorithm_names(), ('tgsr', 'pso', 'dea', 'random'))
        self.assertIs(get_optimizer_class('tgsr'), GreatSalmonRun)
        self.assertEqual(get_optimizer('tgsr').params, TgsrParams())

    def test_overrides(self):
        self.assertEqual(get_optimizer('tgsr', mu='0.6').params.mu, 0.6)

    def test_custom_engine(self):
        algorithms = dict(salmonrun_settings.SALMONRUN_ALGORITHMS)
        algorithms['salmon'] = {'ENGINE': GreatSalmonRun, 'OPTIONS': {'population': 12}}
        with SettingsOverride(salmonrun_settings, SALMONRUN_ALGORITHMS=algorithms):
            self.assertIn('salmon', algorithm_names())
            self.assertEqual(get_optimizer('salmon').params.population, 12)

    def test_bad_engine(self):
        algorithms = {'broken': {'ENGINE': 'tests.test_utils.TestTargetClass', 'OPTIONS': {}},
                      'empty': {'OPTIONS': {}}}
        with SettingsOverride(salmonrun_settings, SALMONRUN_ALGORITHMS=algorithms):
            with self.assertRaises(ImproperlyConfigured):
                get_optimizer_class('broken')
            with self.assertRaises(ImproperlyConfigured):
                get_optimizer_class('empty')
