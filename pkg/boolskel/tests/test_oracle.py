import numpy as np

from boolskel.config import ReductionConfig
from boolskel.depgraph import recover
from boolskel.exceptions import CycleError, OracleMismatchError
from boolskel.formats import parse_aiger
from boolskel.oracle import (bfs_closure, exhaustive_equiv, functionally_equivalent, longest_path, sampled_equiv,
                             simulate, verify_skeleton)
from boolskel.tests.test_case_circuits import BaseTestCase, ripple_carry_adder_aag
from boolskel.types import UNLIMITED


class ClosureTestCase(BaseTestCase):
    def setUp(self):
        super(ClosureTestCase, self).setUp()

    def test_chain(self):
        closure = bfs_closure([(0, 1), (1, 2)])
        self.assertEqual(int(closure.sum()), 3)
        self.assertTrue(closure[0, 2])
        self.assertFalse(closure[2, 0])

    def test_empty_edges(self):
        self.assertFalse(bfs_closure([], 3).any())
        self.assertEqual(bfs_closure([]).shape, (0, 0))

    def test_cycle(self):
        with self.assertRaises(CycleError):
            bfs_closure([(0, 1), (1, 2), (2, 0)])

    def test_longest_path(self):
        self.assertEqual(longest_path([], 1), (0, [0]))
        self.assertEqual(longest_path([(i, i + 1) for i in range(5)]), (5, [0, 1, 2, 3, 4, 5]))
        self.assertEqual(longest_path([]), (0, []))
        with self.assertRaises(CycleError):
            longest_path([(0, 1), (1, 0)])

    def test_longest_path_full_adder(self):
        g = recover(self.full_adder)
        length, witness = longest_path(g.edges(), len(g))
        self.assertEqual(length, self.full_adder_depth)
        self.assertEqual(len(witness), length + 1)


class EquivalenceTestCase(BaseTestCase):
    def setUp(self):
        super(EquivalenceTestCase, self).setUp()

    def test_tree_shapes_are_equivalent(self):
        self.assertTrue(exhaustive_equiv(self.balanced_and, self.chained_and))

    def test_and_is_not_or(self):
        self.assertFalse(exhaustive_equiv(self.balanced_and, self.balanced_or))

    def test_identity(self):
        self.assertTrue(exhaustive_equiv(self.full_adder, self.full_adder))

    def test_interface_mismatch(self):
        with self.assertRaises(OracleMismatchError):
            exhaustive_equiv(self.full_adder, self.single_and)

    def test_simulate_full_adder(self):
        patterns = np.array([[1, 0, 1], [1, 1, 0], [1, 1, 1]], dtype=bool)
        np.testing.assert_array_equal(simulate(self.full_adder, patterns),
                                      np.array([[1, 0, 0], [1, 1, 1]], dtype=bool))

    def test_recovered_graph_is_equivalent(self):
        for net in (self.full_adder, self.cra4, self.diamond):
            self.assertTrue(functionally_equivalent(net, recover(net).to_network()))

    def test_sampled_beyond_exhaustive_limit(self):
        cra9 = parse_aiger(ripple_carry_adder_aag(9).encode())
        self.assertEqual(len(cra9.pi_order), 18)
        with self.assertRaises(OracleMismatchError):
            exhaustive_equiv(cra9, cra9)
        self.assertTrue(sampled_equiv(cra9, recover(cra9).to_network(), samples=2000, seed=11))
        self.assertTrue(functionally_equivalent(cra9, recover(cra9).to_network(), samples=2000))

    def test_sampled_detects_difference(self):
        self.assertFalse(sampled_equiv(self.balanced_and, self.balanced_or, samples=256, seed=3))


class VerifyTestCase(BaseTestCase):
    def setUp(self):
        super(VerifyTestCase, self).setUp()

    def test_full_adder_all_limits(self):
        for k in (1, 2, 3, 4, 5, UNLIMITED):
            result = verify_skeleton(self.full_adder, ReductionConfig(k=k))
            self.assertTrue(result.ok, f'K={k}: {result.violations}')
            self.assertEqual(result.report.final_node_count, len(result.skeleton))

    def test_small_designs(self):
        for net in (self.single_and, self.chain, self.diamond, self.two_outputs, self.chained_and):
            result = verify_skeleton(net)
            self.assertEqual(result.violations, [])

    def test_ripple_carry_adder_limits(self):
        for k in (2, 3, 4, 5, UNLIMITED):
            result = verify_skeleton(self.cra4, ReductionConfig(k=k))
            checks = [v for v in result.violations if not v.startswith('PO ')]
            self.assertEqual(checks, [], f'K={k}')
            if k is not UNLIMITED:
                self.assertTrue(result.ok, f'K={k}: {result.violations}')

    def test_fanin_limit_depth_order_is_exempt(self):
        with self.assertLogs('boolskel.oracle', level='WARNING'):
            result = verify_skeleton(self.po_depth_swap, ReductionConfig(k=2))
        self.assertTrue(result.ok, result.violations)
        self.assertEqual(result.exempt, ['PO 5 became deeper than PO 7', 'PO 6 became deeper than PO 7'])

        result = verify_skeleton(self.po_depth_swap, ReductionConfig(k=UNLIMITED))
        self.assertEqual((result.violations, result.exempt), ([], []))

    def test_dangling_logic(self):
        result = verify_skeleton(self.dangling_chain)
        self.assertEqual(result.violations, [])
        self.assertEqual(result.report.dangling_pruned, 3)
