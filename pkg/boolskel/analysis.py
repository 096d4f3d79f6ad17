"""
boolskel.analysis
~~~~~~~~~~~~~~~~~

Compression statistics, unit-delay critical paths and the critical-region
similarity between a graph and externally supplied timing paths.
"""

import logging
from collections import deque
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from boolskel.depgraph import DepGraph, SkeletonGraph
from boolskel.exceptions import EmptyGraphError, PathFileError
from boolskel.network import BooleanNetwork, pi_support
from boolskel.types import GateKind, SimilarityMetric

logger = logging.getLogger(__name__)

Graph = Union[DepGraph, SkeletonGraph]


@dataclass(frozen=True)
class CompressionStats:
    original_nodes: int
    final_nodes: int
    original_edges: int
    final_edges: int
    original_depth: int
    final_depth: int
    size_ratio: float
    depth_ratio: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TimingPath:
    """Node ids ordered from the path source to its sink"""

    nodes: Tuple[int, ...]

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    @property
    def length(self) -> int:
        """Number of edges, i.e. the unit delay of the path"""
        return max(len(self.nodes) - 1, 0)


@dataclass(frozen=True)
class CriticalRegion:
    members: FrozenSet[int] = frozenset()

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in self.members


def _ratio(final: int, original: int) -> float:
    return final / original if original else 1.0


def compression_stats(g_before: DepGraph, s: SkeletonGraph) -> CompressionStats:
    """Ratios of ``s`` against the unreduced dependency graph it came from"""
    original_nodes = len(g_before.live_nodes())
    return CompressionStats(original_nodes=original_nodes,
                            final_nodes=len(s),
                            original_edges=g_before.edge_count,
                            final_edges=s.edge_count,
                            original_depth=g_before.depth,
                            final_depth=s.depth,
                            size_ratio=_ratio(len(s), original_nodes),
                            depth_ratio=_ratio(s.depth, g_before.depth))


def critical_path(g: Graph) -> TimingPath:
    """Maximum-level PI to PO path.

    The path ends at the deepest PO (smallest id on ties); graphs without POs
    fall back to the deepest live node. Walking backwards, each step takes
    the fanin one level below with the smallest id, a PI winning over a
    constant.
    """
    live = list(g.live_nodes())
    if not live:
        raise EmptyGraphError('cannot compute the critical path of an empty graph')
    outputs = [v for v in live if g.kinds[v] is GateKind.PO]
    end = min(outputs or live, key=lambda v: (-g.level[v], v))

    nodes = [end]
    v = end
    while g.fanins(v):
        v = min((u for u in g.fanins(v) if g.level[u] == g.level[v] - 1),
                key=lambda u: (g.kinds[u] is GateKind.CONST0, u))
        nodes.append(v)
    return TimingPath(tuple(reversed(nodes)))


def to_network_path(path: Iterable[int], graph: Graph) -> List[int]:
    """Maps a dependency-graph or skeleton path onto network node ids.

    Materialized inverters map to the node they invert, so consecutive
    duplicates are collapsed.
    """
    mapped: List[int] = []
    for v in path:
        net_id = graph.net_id(v)
        if not mapped or mapped[-1] != net_id:
            mapped.append(net_id)
    return mapped


def extract_critical_region(net: BooleanNetwork, paths: Sequence[Iterable[int]]) -> CriticalRegion:
    """Nodes on a PI/PO corridor through any of ``paths``.

    Label a spreads forward from the path nodes to the POs; label b spreads
    backward from the a-labeled POs over a-labeled nodes only. Nodes holding
    both labels form the region.
    """
    seeds = set()
    for path in paths:
        for v in path:
            if not 0 <= v < len(net):
                raise PathFileError(f'path node {v} is not in the network')
            seeds.add(v)

    label_a = set(seeds)
    queue = deque(sorted(seeds))
    while queue:
        v = queue.popleft()
        for w in net.fanouts(v):
            if w not in label_a:
                label_a.add(w)
                queue.append(w)

    label_b = {po for po in net.po_order if po in label_a}
    queue = deque(sorted(label_b))
    while queue:
        v = queue.popleft()
        for fanin in net.fanins(v):
            u = fanin.node
            if u in label_a and u not in label_b:
                label_b.add(u)
                queue.append(u)
    return CriticalRegion(frozenset(label_a & label_b))


def _members(region) -> FrozenSet[int]:
    return region.members if isinstance(region, CriticalRegion) else frozenset(region)


def similarity(r1, r2, metric: SimilarityMetric = SimilarityMetric.JACCARD) -> float:
    a, b = _members(r1), _members(r2)
    if not a and not b:
        return 1.0
    common = len(a & b)
    if metric is SimilarityMetric.OVERLAP:
        return common / min(len(a), len(b)) if a and b else 0.0
    return common / len(a | b)


def critical_region_similarity(net: BooleanNetwork, graph: Graph, topk_paths: Sequence[Iterable[int]],
                               metric: SimilarityMetric = SimilarityMetric.JACCARD) -> float:
    """Similarity between the region of ``graph``'s critical path and that of ``topk_paths``"""
    graph_path = to_network_path(critical_path(graph), graph)
    region_1 = extract_critical_region(net, [graph_path])
    region_2 = extract_critical_region(net, topk_paths)
    alpha = similarity(region_1, region_2, metric)
    logger.debug('critical regions of %d and %d nodes, %s=%.4f', len(region_1), len(region_2), metric.value, alpha)
    return alpha


def degree_histogram(g) -> List[int]:
    """Total degree of every live node, sorted descending"""
    return sorted((len(g.fanins(v)) + len(g.fanouts(v)) for v in g.live_nodes()), reverse=True)


def po_rank_violations(g_before: DepGraph, s: SkeletonGraph) -> List[Tuple[int, int]]:
    """PO pairs (p, q) with p shallower than q before reduction but deeper after.

    Pairs are reported with dependency-graph ids, which equal network ids
    for POs.
    """
    skeleton_level = {s.provenance[v]: s.level[v] for v in s.pos}
    violations = []
    for p, q in combinations(sorted(skeleton_level), 2):
        before_p, before_q = g_before.level[p], g_before.level[q]
        after_p, after_q = skeleton_level[p], skeleton_level[q]
        if before_p < before_q and after_p > after_q:
            violations.append((p, q))
        elif before_q < before_p and after_q > after_p:
            violations.append((q, p))
    return violations


def disjoint_support_outputs(net: BooleanNetwork) -> List[int]:
    """POs sharing no PI with at least one other PO"""
    support = pi_support(net)
    disjoint = set()
    for p, q in combinations(net.po_order, 2):
        if not support[p] & support[q]:
            disjoint.update((p, q))
    return sorted(disjoint)
