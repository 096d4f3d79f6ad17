from boolskel.config import ReductionConfig
from boolskel.exceptions import ContractError, DanglingNodeError
from boolskel.reduction import (Pattern, ReductionReport, classify_pattern, fanin_cone, is_weakly_decreasing,
                                k_sweep, pattern_reduce, prepare, reduce_fixpoint_stats, reduce_graph, skeletonize,
                                try_reduce)
from boolskel.network import BooleanNetwork, Fanin
from boolskel.tests.test_case_circuits import BaseTestCase
from boolskel.types import UNLIMITED, GateKind, NodeStatus, PatternClass


def shared_fanin() -> BooleanNetwork:
    """x -> v -> w, g = v & w; v's path to g through w makes a bridge to g redundant"""
    kinds = [GateKind.PI, GateKind.BUF, GateKind.BUF, GateKind.AND2, GateKind.PO]
    fanins = [[], [Fanin(0)], [Fanin(1)], [Fanin(1), Fanin(2)], [Fanin(3)]]
    return BooleanNetwork(kinds, fanins)


class PatternTestCase(BaseTestCase):
    def setUp(self):
        super(PatternTestCase, self).setUp()

    def test_classify_homogeneous(self):
        g = prepare(self.single_and)
        self.assertIs(classify_pattern(g, 2), PatternClass.HOMOGENEOUS)
        self.assertEqual(Pattern.at(g, 2), Pattern(2, frozenset({0, 1}), frozenset({3})))

    def test_classify_heterogeneous(self):
        g = prepare(self.two_outputs)
        # g1 drives the PO p (keep) and g2 (active)
        self.assertIs(classify_pattern(g, 3), PatternClass.HETEROGENEOUS)

    def test_classify_without_fanouts(self):
        g = prepare(self.single_and)
        with self.assertRaises(DanglingNodeError):
            classify_pattern(g, 3)

    def test_pattern_reduce_bridges_fanins(self):
        g = prepare(self.single_and)
        pattern_reduce(g, 2)
        self.assertIs(g.status(2), NodeStatus.DEAD)
        self.assertEqual(g.fanins(3), (0, 1))
        self.assertTrue(g.reaches(0, 3))
        self.assertFalse(g.reaches(0, 2))

    def test_pattern_reduce_skips_redundant_bridge(self):
        g = prepare(shared_fanin())
        pattern_reduce(g, 1)
        self.assertTrue(g.has_edge(0, 2))
        self.assertFalse(g.has_edge(0, 3))
        self.assertEqual(g.fanins(3), (2,))
        self.assertTrue(g.reaches(0, 3))

    def test_pattern_reduce_contract(self):
        g = prepare(self.two_outputs)
        with self.assertRaises(ContractError):
            pattern_reduce(g, 0)
        with self.assertRaises(ContractError):
            pattern_reduce(g, 3)

    def test_try_reduce(self):
        g = prepare(self.two_outputs)
        self.assertEqual(try_reduce(g, 0), 0)
        self.assertEqual(try_reduce(g, 3), 0)
        self.assertIs(g.status(3), NodeStatus.PRESERVED)
        self.assertEqual(try_reduce(g, 4), 1)
        self.assertIs(g.status(4), NodeStatus.DEAD)

    def test_fanin_cone_post_order(self):
        g = prepare(self.chain)
        visited = set()
        self.assertEqual(fanin_cone(g, 4, visited), [0, 1, 2, 3, 4])
        self.assertEqual(fanin_cone(g, 4, visited), [])
        self.assertEqual(fanin_cone(prepare(self.diamond), 5), [0, 2, 1, 3, 4, 5])


class SkeletonizeTestCase(BaseTestCase):
    def setUp(self):
        super(SkeletonizeTestCase, self).setUp()

    def test_single_and_unlimited(self):
        skeleton, report = skeletonize(self.single_and)
        self.assertEqual(len(skeleton), 3)
        self.assertEqual(report.to_dict(), {
            'iterations': 2,
            'reduced_per_iteration': [1, 0],
            'preserved_by_fanin_limit': 0,
            'final_node_count': 3,
            'final_edge_count': 2,
        })

    def test_single_and_fanin_limit(self):
        skeleton, report = skeletonize(self.single_and, ReductionConfig(k=2))
        self.assertEqual(len(skeleton), 4)
        self.assertEqual(report.preserved_by_fanin_limit, 1)
        self.assertEqual(report.reduced_per_iteration, [0])
        self.assertIs(skeleton.statuses[2], NodeStatus.PRESERVED)

    def test_full_adder_counts(self):
        for k, (nodes, edges) in self.full_adder_skeletons.items():
            skeleton, report = skeletonize(self.full_adder, ReductionConfig(k=k))
            self.assertEqual((len(skeleton), skeleton.edge_count), (nodes, edges), f'K={k}')
            self.assertEqual(report.final_node_count, nodes)
            self.assertEqual(report.reduced_per_iteration[-1], 0)

    def test_full_adder_fanin_limit_two(self):
        skeleton, report = skeletonize(self.full_adder, ReductionConfig(k=2))
        self.assertEqual(report.reduced_per_iteration, [10, 0])
        self.assertEqual(report.preserved_by_fanin_limit, 6)
        self.assertEqual(skeleton.provenance, [0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11])

    def test_full_adder_unlimited(self):
        skeleton, report = skeletonize(self.full_adder, ReductionConfig(k=UNLIMITED))
        self.assertEqual(report.iterations, 2)
        self.assertEqual(report.reduced_per_iteration, [16, 0])
        self.assertEqual(report.initial_active, 16)
        self.assertEqual(sorted(skeleton.edges), [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])
        self.assertEqual([skeleton.level[po] for po in skeleton.pos], [1, 1])
        self.assertEqual([skeleton.names[po] for po in skeleton.pos], ['sum', 'cout'])

    def test_identity_at_one(self):
        for net in (self.full_adder, self.cra4, self.chain, self.diamond):
            skeleton, report = skeletonize(net, ReductionConfig(k=1))
            self.assertEqual(skeleton.provenance, prepare(net).live_nodes())
            self.assertEqual(report.reduced, 0)

    def test_chain_collapses(self):
        skeleton, report = skeletonize(self.chain)
        self.assertEqual(skeleton.edges, [(0, 1)])
        self.assertEqual(report.reduced_per_iteration, [3, 0])

    def test_unlimited_coarser_than_fanin_two(self):
        unlimited, _ = skeletonize(self.cra4)
        limited, _ = skeletonize(self.cra4, ReductionConfig(k=2))
        self.assertLess(len(unlimited), len(limited))

    def test_k_sweep_monotone_on_full_adder(self):
        results = k_sweep(self.full_adder, list(range(1, 11)) + [UNLIMITED])
        counts = [len(skeleton) for _, skeleton, _ in results]
        self.assertTrue(is_weakly_decreasing(counts))
        self.assertEqual(counts[:4], [21, 11, 7, 5])
        self.assertEqual(results[-1][0], UNLIMITED)

    def test_k_sweep_monotone_on_suite(self):
        limits = list(range(1, 11))
        for net in (self.cra4, self.chain, self.diamond, self.two_outputs):
            counts = [len(skeleton) for _, skeleton, _ in k_sweep(net, limits)]
            self.assertTrue(is_weakly_decreasing(counts), counts)
        counts = [len(skeleton) for _, skeleton, _ in k_sweep(self.cra4, limits)]
        self.assertEqual(counts, [68, 39, 26, 23, 21, 21, 19, 19, 19, 19])

    def test_dangling_logic_counts_as_pruned(self):
        g = prepare(self.dangling_chain)
        report = reduce_graph(g)
        self.assertEqual(report.dangling_pruned, 3)
        self.assertEqual(report.reduced, 0)
        self.assertEqual(report.reduced + report.dangling_pruned, g.status_counts()[NodeStatus.DEAD])
        skeleton, _ = skeletonize(self.dangling_chain)
        self.assertEqual(skeleton.provenance, [0, 1, 5])

    def test_is_weakly_decreasing(self):
        self.assertTrue(is_weakly_decreasing([5, 5, 3]))
        self.assertFalse(is_weakly_decreasing([3, 4]))
        self.assertTrue(is_weakly_decreasing([]))

    def test_fixpoint_summary(self):
        reports = [skeletonize(net)[1] for net in (self.full_adder, self.single_and)]
        summary = reduce_fixpoint_stats(reports)
        self.assertEqual(summary.designs, 2)
        self.assertEqual(summary.total_reduced, 17)
        self.assertEqual(summary.max_iterations, 2)
        self.assertEqual(summary.total_final_nodes, 8)
        self.assertEqual(len(summary.rows), 2)

    def test_report_hides_bookkeeping(self):
        report = ReductionReport(iterations=1, reduced_per_iteration=[0], initial_active=4, dangling_pruned=1)
        self.assertNotIn('initial_active', report.to_dict())
        self.assertNotIn('dangling_pruned', report.to_dict())
