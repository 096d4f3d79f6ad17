"""
boolskel.reduction
~~~~~~~~~~~~~~~~~~

Fanin-limited homogeneous pattern reduction.

Every pass walks the transitive fanin cone of each PO (lowest level first)
in topological order. A node whose fanin size reaches K is preserved;
otherwise it is reduced when its fanouts are homogeneous and preserved when
they are not. Passes repeat until one of them reduces nothing.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from boolskel.config import FaninLimit, ReductionConfig
from boolskel.depgraph import (DepGraph, SkeletonGraph, collect_skeleton, init_status, prune_dangling,
                               recover)
from boolskel.exceptions import ContractError, DanglingNodeError, NetworkValidationError
from boolskel.network import BooleanNetwork, validate
from boolskel.types import NodeStatus, PatternClass

logger = logging.getLogger(__name__)

REPORT_KEYS = ('iterations', 'reduced_per_iteration', 'preserved_by_fanin_limit', 'final_node_count',
               'final_edge_count')


@dataclass(frozen=True)
class Pattern:
    center: int
    fanins: FrozenSet[int]
    fanouts: FrozenSet[int]

    @classmethod
    def at(cls, g: DepGraph, v: int) -> 'Pattern':
        return cls(v, frozenset(g.fanins(v)), frozenset(g.fanouts(v)))


@dataclass
class ReductionReport:
    iterations: int = 0
    reduced_per_iteration: List[int] = field(default_factory=list)
    preserved_by_fanin_limit: int = 0
    final_node_count: int = 0
    final_edge_count: int = 0
    # not part of the serialized report
    initial_active: int = 0
    dangling_pruned: int = 0

    @property
    def reduced(self) -> int:
        return sum(self.reduced_per_iteration)

    def to_dict(self) -> dict:
        data = asdict(self)
        return {key: data[key] for key in REPORT_KEYS}


@dataclass
class FixpointSummary:
    rows: List[dict] = field(default_factory=list)
    designs: int = 0
    total_iterations: int = 0
    max_iterations: int = 0
    total_reduced: int = 0
    total_preserved_by_fanin_limit: int = 0
    total_final_nodes: int = 0
    total_final_edges: int = 0


def classify_pattern(g: DepGraph, v: int) -> PatternClass:
    """Homogeneous iff every fanout is retained (keep/preserved) or every fanout is active"""
    if g.status(v) is NodeStatus.DEAD:
        raise ContractError(f'node {v} is dead')
    pattern = Pattern.at(g, v)
    if not pattern.fanouts:
        raise DanglingNodeError(v)
    classes = {g.status(w).is_retained for w in pattern.fanouts}
    return PatternClass.HOMOGENEOUS if len(classes) == 1 else PatternClass.HETEROGENEOUS


def pattern_reduce(g: DepGraph, v: int):
    if g.status(v) is not NodeStatus.ACTIVE:
        raise ContractError(f'node {v} is {g.status(v).value}, only active nodes reduce')
    if classify_pattern(g, v) is not PatternClass.HOMOGENEOUS:
        raise ContractError(f'node {v} is the center of a heterogeneous pattern')

    pattern = Pattern.at(g, v)
    fanins = sorted(pattern.fanins)
    reach = g.R[v]
    bridges: List[Tuple[int, int]] = []
    for vo in sorted(pattern.fanouts):
        # an other fanin of vo reachable from v already carries the path
        if any(reach[x] for x in g.fanins(vo) if x != v):
            continue
        bridges.extend((vi, vo) for vi in fanins if not g.has_edge(vi, vo))

    g.set_status(v, NodeStatus.DEAD)
    g.isolate(v)
    for vi, vo in bridges:
        g.add_edge(vi, vo)


def try_reduce(g: DepGraph, v: int) -> int:
    if g.status(v) is not NodeStatus.ACTIVE:
        return 0
    if classify_pattern(g, v) is PatternClass.HOMOGENEOUS:
        pattern_reduce(g, v)
        return 1
    g.set_status(v, NodeStatus.PRESERVED)
    return 0


def fanin_cone(g: DepGraph, root: int, visited: Optional[Set[int]] = None, ordered: bool = True) -> List[int]:
    """DFS post-order of the fanin cone of ``root``.

    Fanins are explored in ascending id when ``ordered``, in edge insertion
    order otherwise. Nodes already in ``visited`` are skipped; the walk adds
    what it reaches.
    """
    expand = (lambda v: iter(sorted(g.fanins(v)))) if ordered else (lambda v: iter(g.fanins(v)))
    visited = set() if visited is None else visited
    if root in visited:
        return []
    visited.add(root)
    order = []
    stack = [(root, expand(root))]
    while stack:
        node, pending = stack[-1]
        for u in pending:
            if u not in visited:
                visited.add(u)
                stack.append((u, expand(u)))
                break
        else:
            stack.pop()
            order.append(node)
    return order


def prepare(net: BooleanNetwork) -> DepGraph:
    """Recovery, levelization and status assignment ahead of the reduction"""
    diagnostics = validate(net)
    if diagnostics:
        raise NetworkValidationError(f'invalid network: {diagnostics[0]}', diagnostics)
    g = recover(net)
    init_status(g)
    prune_dangling(g)
    return g


def reduce_graph(g: DepGraph, cfg: Optional[ReductionConfig] = None) -> ReductionReport:
    """Runs reduction passes on a prepared graph until a pass kills nothing"""
    cfg = cfg or ReductionConfig()
    report = ReductionReport(initial_active=g.status_counts()[NodeStatus.ACTIVE],
                             dangling_pruned=g.status_counts()[NodeStatus.DEAD])
    outputs = sorted(g.pos, key=lambda po: (g.level[po], po))

    while True:
        count = 0
        visited: Set[int] = set()
        for po in outputs:
            for v in fanin_cone(g, po, visited, ordered=cfg.deterministic_order):
                if g.status(v) is NodeStatus.ACTIVE and cfg.preserves(len(g.fanins(v))):
                    g.set_status(v, NodeStatus.PRESERVED)
                    report.preserved_by_fanin_limit += 1
                    continue
                count += try_reduce(g, v)
        report.reduced_per_iteration.append(count)
        logger.info('pass %d reduced %d nodes (K=%s)', len(report.reduced_per_iteration), count, cfg.k)
        if count == 0:
            break
    report.iterations = len(report.reduced_per_iteration)
    return report


def skeletonize(net: BooleanNetwork, cfg: Optional[ReductionConfig] = None) -> Tuple[SkeletonGraph, ReductionReport]:
    g = prepare(net)
    report = reduce_graph(g, cfg)
    skeleton = collect_skeleton(g)
    report.final_node_count = len(skeleton)
    report.final_edge_count = skeleton.edge_count
    return skeleton, report


def k_sweep(net: BooleanNetwork, limits: Sequence[FaninLimit]) -> List[Tuple[FaninLimit, SkeletonGraph, ReductionReport]]:
    results = [(k,) + skeletonize(net, ReductionConfig(k=k)) for k in limits]
    counts = [len(skeleton) for _, skeleton, _ in results]
    if not is_weakly_decreasing(counts):
        logger.warning('skeleton size is not monotone over K=%s: %s', [str(k) for k in limits], counts)
    return results


def is_weakly_decreasing(values: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(values, values[1:]))


def reduce_fixpoint_stats(reports: Sequence[ReductionReport]) -> FixpointSummary:
    summary = FixpointSummary()
    for report in reports:
        summary.rows.append(report.to_dict())
        summary.designs += 1
        summary.total_iterations += report.iterations
        summary.max_iterations = max(summary.max_iterations, report.iterations)
        summary.total_reduced += report.reduced
        summary.total_preserved_by_fanin_limit += report.preserved_by_fanin_limit
        summary.total_final_nodes += report.final_node_count
        summary.total_final_edges += report.final_edge_count
    return summary
