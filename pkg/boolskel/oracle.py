"""
boolskel.oracle
~~~~~~~~~~~~~~~

Brute-force reference implementations. They share no code with the
modules they check: closure is a per-source BFS, levels come from a plain
DP over an own topological sort and simulation is bit-parallel over numpy
arrays.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from boolskel.analysis import disjoint_support_outputs, po_rank_violations
from boolskel.config import ReductionConfig
from boolskel.depgraph import SkeletonGraph, collect_skeleton, recover
from boolskel.exceptions import CycleError, OracleMismatchError
from boolskel.network import BooleanNetwork
from boolskel.reduction import ReductionReport, prepare, reduce_graph
from boolskel.types import UNLIMITED, GateKind, NodeStatus

logger = logging.getLogger(__name__)

EXHAUSTIVE_PI_LIMIT = 16
DEFAULT_SAMPLES = 10_000
DEFAULT_SEED = 2024

Edge = Tuple[int, int]


def _adjacency(edges: Iterable[Edge], n: Optional[int]) -> Tuple[int, List[List[int]]]:
    edges = list(edges)
    if n is None:
        n = max((max(u, v) for u, v in edges), default=-1) + 1
    successors: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        successors[u].append(v)
    return n, successors


def bfs_closure(edges: Iterable[Edge], n: Optional[int] = None) -> np.ndarray:
    """``closure[u, v]`` is True iff ``v`` is reachable from ``u`` by a non-empty path"""
    n, successors = _adjacency(edges, n)
    closure = np.zeros((n, n), dtype=bool)
    for source in range(n):
        row = closure[source]
        queue = deque(successors[source])
        while queue:
            v = queue.popleft()
            if v == source:
                raise CycleError(f'node {source} lies on a cycle')
            if row[v]:
                continue
            row[v] = True
            queue.extend(successors[v])
    return closure


def _kahn(n: int, successors: List[List[int]]) -> List[int]:
    indegree = [0] * n
    for targets in successors:
        for v in targets:
            indegree[v] += 1
    queue = deque(v for v in range(n) if indegree[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    if len(order) != n:
        raise CycleError(f'{n - len(order)} nodes lie on cycles')
    return order


def longest_path(edges: Iterable[Edge], n: Optional[int] = None) -> Tuple[int, List[int]]:
    """Edge count of the longest path and one path achieving it"""
    n, successors = _adjacency(edges, n)
    if n == 0:
        return 0, []
    distance = [0] * n
    parent: List[Optional[int]] = [None] * n
    for u in _kahn(n, successors):
        for v in successors[u]:
            if distance[u] + 1 > distance[v] or (distance[u] + 1 == distance[v] and u < parent[v]):
                distance[v] = distance[u] + 1
                parent[v] = u
    end = max(range(n), key=lambda v: (distance[v], -v))
    witness = [end]
    while parent[witness[-1]] is not None:
        witness.append(parent[witness[-1]])
    return distance[end], witness[::-1]


_NUMPY_GATES = {
    GateKind.AND2: np.logical_and,
    GateKind.OR2: np.logical_or,
    GateKind.XOR2: np.logical_xor,
}


def simulate(net: BooleanNetwork, patterns: np.ndarray) -> np.ndarray:
    """PO values (one row per PO) for PI patterns given one row per PI"""
    n = len(net)
    successors: List[List[int]] = [[] for _ in range(n)]
    for v in range(n):
        for fanin in net.fanins(v):
            successors[fanin.node].append(v)
    width = patterns.shape[1]
    pi_row = {pi: i for i, pi in enumerate(net.pi_order)}
    values: Dict[int, np.ndarray] = {}
    for v in _kahn(n, successors):
        kind = net.kind(v)
        if kind is GateKind.PI:
            values[v] = patterns[pi_row[v]]
            continue
        if kind is GateKind.CONST0:
            values[v] = np.zeros(width, dtype=bool)
            continue
        operands = [np.logical_not(values[f.node]) if f.complemented else values[f.node] for f in net.fanins(v)]
        if kind is GateKind.INV:
            values[v] = np.logical_not(operands[0])
        elif kind in (GateKind.BUF, GateKind.PO):
            values[v] = operands[0]
        else:
            values[v] = _NUMPY_GATES[kind](*operands)
    return np.array([values[po] for po in net.po_order], dtype=bool).reshape(len(net.po_order), width)


def _check_interfaces(net1: BooleanNetwork, net2: BooleanNetwork):
    if len(net1.pi_order) != len(net2.pi_order):
        raise OracleMismatchError(f'PI counts differ: {len(net1.pi_order)} vs {len(net2.pi_order)}')
    if len(net1.po_order) != len(net2.po_order):
        raise OracleMismatchError(f'PO counts differ: {len(net1.po_order)} vs {len(net2.po_order)}')


def exhaustive_equiv(net1: BooleanNetwork, net2: BooleanNetwork) -> bool:
    _check_interfaces(net1, net2)
    inputs = len(net1.pi_order)
    if inputs > EXHAUSTIVE_PI_LIMIT:
        raise OracleMismatchError(f'{inputs} PIs exceed the exhaustive limit of {EXHAUSTIVE_PI_LIMIT}')
    assignments = np.arange(1 << inputs, dtype=np.int64)
    patterns = ((assignments[np.newaxis, :] >> np.arange(inputs)[:, np.newaxis]) & 1).astype(bool)
    return bool(np.array_equal(simulate(net1, patterns), simulate(net2, patterns)))


def sampled_equiv(net1: BooleanNetwork, net2: BooleanNetwork, samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED) -> bool:
    _check_interfaces(net1, net2)
    rng = np.random.default_rng(seed)
    patterns = rng.integers(0, 2, size=(len(net1.pi_order), samples), dtype=np.uint8).astype(bool)
    return bool(np.array_equal(simulate(net1, patterns), simulate(net2, patterns)))


def functionally_equivalent(net1: BooleanNetwork, net2: BooleanNetwork, samples: int = DEFAULT_SAMPLES,
                            seed: int = DEFAULT_SEED) -> bool:
    """Exhaustive up to 16 PIs, seeded random patterns beyond"""
    if len(net1.pi_order) <= EXHAUSTIVE_PI_LIMIT:
        return exhaustive_equiv(net1, net2)
    return sampled_equiv(net1, net2, samples, seed)


@dataclass
class VerificationResult:
    violations: List[str] = field(default_factory=list)
    exempt: List[str] = field(default_factory=list)
    report: Optional[ReductionReport] = None
    skeleton: Optional[SkeletonGraph] = None

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_skeleton(net: BooleanNetwork, cfg: Optional[ReductionConfig] = None, samples: int = DEFAULT_SAMPLES,
                    seed: int = DEFAULT_SEED) -> VerificationResult:
    """Skeletonizes ``net`` and checks the result against the oracles"""
    result = VerificationResult()
    violations = result.violations
    baseline = recover(net)

    if not functionally_equivalent(net, baseline.to_network(), samples, seed):
        violations.append('recovered dependency graph is not functionally equivalent to the network')

    g = prepare(net)
    report = reduce_graph(g, cfg)
    result.report = report
    active = g.status_counts()[NodeStatus.ACTIVE]
    if active:
        violations.append(f'{active} nodes are still active after the reduction')
    if report.reduced_per_iteration[-1] != 0:
        violations.append('last reduction pass still reduced nodes')
    if report.iterations > report.initial_active + 1:
        violations.append(f'{report.iterations} passes for {report.initial_active} active nodes')
    dead = g.status_counts()[NodeStatus.DEAD]
    if report.reduced + report.dangling_pruned != dead:
        violations.append(f'{report.reduced} reduced and {report.dangling_pruned} pruned nodes, but {dead} are dead')
    if active:
        _log_violations(violations)
        return result

    skeleton = collect_skeleton(g)
    report.final_node_count = len(skeleton)
    report.final_edge_count = skeleton.edge_count
    result.skeleton = skeleton
    survivors = np.array(skeleton.provenance, dtype=np.int64)

    try:
        skeleton_closure = bfs_closure(skeleton.edges, len(skeleton))
        depth, _ = longest_path(skeleton.edges, len(skeleton))
    except CycleError as e:
        violations.append(f'skeleton is cyclic: {e}')
    else:
        tracked = g.reachability_matrix()[np.ix_(survivors, survivors)]
        original = bfs_closure(baseline.edges(), len(baseline))[np.ix_(survivors, survivors)]
        if not np.array_equal(tracked, skeleton_closure):
            violations.append('tracked reachability differs from the skeleton closure')
        if not np.array_equal(original, skeleton_closure):
            violations.append('skeleton closure differs from the original closure restricted to survivors')
        if depth != skeleton.depth:
            violations.append(f'skeleton depth {skeleton.depth} differs from its longest path {depth}')

    for v, kind in enumerate(skeleton.kinds):
        if kind is GateKind.PI and skeleton.fanins(v):
            violations.append(f'skeleton PI {skeleton.provenance[v]} has fanins')
        if kind is GateKind.PO and skeleton.fanouts(v):
            violations.append(f'skeleton PO {skeleton.provenance[v]} has fanouts')
    kept = sum(1 for kind in baseline.kinds if kind.is_boundary)
    retained = sum(1 for status in skeleton.statuses if status is NodeStatus.KEEP)
    if kept != retained:
        violations.append(f'{kept} boundary nodes before the reduction, {retained} after')

    rank_violations = po_rank_violations(baseline, skeleton)
    if rank_violations:
        messages = [f'PO {p} became deeper than PO {q}' for p, q in rank_violations]
        k = (cfg or ReductionConfig()).k
        disjoint = disjoint_support_outputs(net)
        if disjoint:
            logger.warning('PO depth order changed on a design with disjoint-support outputs %s: %s',
                           disjoint, '; '.join(messages))
            result.exempt.extend(messages)
        elif k is not UNLIMITED:
            # the fanin limit alone can reorder PO depths
            logger.warning('PO depth order changed under fanin limit K=%s: %s', k, '; '.join(messages))
            result.exempt.extend(messages)
        else:
            violations.extend(messages)

    _log_violations(violations)
    return result


def _log_violations(violations: List[str]):
    for violation in violations:
        logger.error('verification failed: %s', violation)
