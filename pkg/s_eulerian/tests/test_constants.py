# Built-in imports
from unittest import TestCase, mock
import os
import warnings

# Local imports
from s_eulerian.constants import DEFAULT_ENUM_BUDGET, enumeration_budget, \
    worker_count


class TestEnumerationBudget(TestCase):
    @mock.patch.dict(os.environ, {}, clear=True)
    def test_default_without_environment(self):
        self.assertEqual(DEFAULT_ENUM_BUDGET, enumeration_budget())

    @mock.patch.dict(os.environ, {'EULERIAN_ENUM_BUDGET': '5000'})
    def test_environment_overrides_default(self):
        self.assertEqual(5000, enumeration_budget())

    @mock.patch.dict(os.environ, {'EULERIAN_ENUM_BUDGET': '-3'})
    def test_nonpositive_value_warns_and_falls_back(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            self.assertEqual(DEFAULT_ENUM_BUDGET, enumeration_budget())
        self.assertEqual(1, len(caught))
        self.assertIn('not positive', str(caught[0].message))


class TestWorkerCount(TestCase):
    @mock.patch.dict(os.environ, {'EULERIAN_WORKERS': '3'})
    def test_environment_sets_workers(self):
        self.assertEqual(3, worker_count())

    @mock.patch.dict(os.environ, {'EULERIAN_WORKERS': 'many'})
    def test_unreadable_value_warns_and_falls_back(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            self.assertEqual(os.cpu_count() or 1, worker_count())
        self.assertIn('not an integer', str(caught[0].message))
