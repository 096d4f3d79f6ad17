import argparse

from boolskel.config import ReductionConfig, RunConfig, log_level_from_env, parse_k, parse_k_sweep
from boolskel.exceptions import ConfigError
from boolskel.tests.test_case_circuits import BaseTestCase
from boolskel.types import UNLIMITED, InputFormat, OutputFormat, SimilarityMetric


class ConfigTestCase(BaseTestCase):
    def setUp(self):
        super(ConfigTestCase, self).setUp()

    def test_parse_k(self):
        self.assertEqual(parse_k('4'), 4)
        self.assertEqual(parse_k(1), 1)
        for text in ('inf', 'Unlimited', '∞'):
            self.assertIs(parse_k(text), UNLIMITED)
        for bad in ('0', '-3', 'four', 0, True):
            with self.assertRaises(ConfigError):
                parse_k(bad)

    def test_parse_k_sweep(self):
        self.assertEqual(parse_k_sweep('1..10'), list(range(1, 11)))
        self.assertEqual(parse_k_sweep('1,2,inf'), [1, 2, UNLIMITED])
        self.assertEqual(parse_k_sweep('2..3, 8'), [2, 3, 8])
        for bad in ('', '5..2', '1..inf'):
            with self.assertRaises(ConfigError):
                parse_k_sweep(bad)

    def test_reduction_config(self):
        self.assertIs(ReductionConfig().k, UNLIMITED)
        self.assertFalse(ReductionConfig().preserves(100))
        self.assertTrue(ReductionConfig(k='3').preserves(3))
        self.assertFalse(ReductionConfig(k=3).preserves(2))
        with self.assertRaises(ConfigError):
            ReductionConfig(k=0)

    def test_run_config_validation(self):
        with self.assertRaises(ConfigError):
            RunConfig(jobs=0)
        with self.assertRaises(ConfigError):
            RunConfig(seed=-1)
        self.assertEqual(RunConfig().seed, 2024)
        self.assertIs(RunConfig().reduction.k, UNLIMITED)

    def test_from_namespace(self):
        ns = argparse.Namespace(input='x.aag', format='aiger', k='inf', k_sweep='1..3', output='o.dot',
                                out_format='dot', verify=True, seed=None, jobs=None, metric='overlap')
        cfg = RunConfig.from_namespace(ns)
        self.assertEqual(cfg.input_format, InputFormat.AIGER)
        self.assertIs(cfg.k, UNLIMITED)
        self.assertEqual(cfg.k_sweep, [1, 2, 3])
        self.assertEqual(cfg.out_format, OutputFormat.DOT)
        self.assertEqual(cfg.metric, SimilarityMetric.OVERLAP)
        self.assertEqual((cfg.seed, cfg.jobs), (2024, 1))

    def test_from_namespace_zero_jobs(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_namespace(argparse.Namespace(input='x.aag', jobs=0))
        self.assertEqual(RunConfig.from_namespace(argparse.Namespace(input='x.aag', jobs=3)).jobs, 3)

    def test_from_namespace_bad_format(self):
        with self.assertRaises(ConfigError):
            RunConfig.from_namespace(argparse.Namespace(format='blif'))

    def test_log_level_from_env(self):
        self.assertEqual(log_level_from_env({}), 'warn')
        self.assertEqual(log_level_from_env({'BOOLSKEL_LOG': ' DEBUG '}), 'debug')
