"""
boolskel.depgraph
~~~~~~~~~~~~~~~~~

Boolean dependency graph: the network with every complemented edge turned
into an explicit INV node, plus per-node status, unit-delay level, the
adjacency bit matrix ``A`` and the reachability bit matrix ``R``.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
import numpy as np

from boolskel.exceptions import ContractError
from boolskel.network import BooleanNetwork, Diagnostic, Fanin
from boolskel.types import LEGAL_TRANSITIONS, DiagnosticRule, GateKind, NodeStatus
from boolskel.utils import bits_to_numpy, zero_bits

logger = logging.getLogger(__name__)


class DepGraph:
    """Mutable dependency graph; one writer at a time.

    Ids ``0..len(net)-1`` are the network's own nodes, materialized inverters
    are appended after them. ``A[u][v]`` is the edge ``u -> v`` and ``R[u][v]``
    holds iff ``v`` is reachable from ``u``; the column of an isolated node is
    masked instead of cleared bit by bit. Fanin/fanout lists mirror ``A``.
    """

    def __init__(self, kinds: List[GateKind], names: List[Optional[str]], net_ids: List[int],
                 edges: List[Tuple[int, int]]):
        n = len(kinds)
        self.kinds = list(kinds)
        self.names = list(names)
        self._net_ids = list(net_ids)
        self._status = [NodeStatus.ACTIVE] * n
        self.level = [0] * n
        self.A = [zero_bits(n) for _ in range(n)]
        self.R = [zero_bits(n) for _ in range(n)]
        # isolated nodes whose R column is treated as cleared
        self._isolated = zero_bits(n)
        self._fanins: List[List[int]] = [[] for _ in range(n)]
        self._fanouts: List[List[int]] = [[] for _ in range(n)]
        for u, v in edges:
            self._link(u, v)

    def __len__(self):
        return len(self.kinds)

    def __str__(self):
        counts = self.status_counts()
        summary = ', '.join(f'{status.value}={counts[status]}' for status in NodeStatus if counts[status])
        return f'DepGraph(nodes={len(self)}, {summary})'

    __repr__ = __str__

    @property
    def pis(self) -> List[int]:
        return [v for v, kind in enumerate(self.kinds) if kind is GateKind.PI]

    @property
    def pos(self) -> List[int]:
        return [v for v, kind in enumerate(self.kinds) if kind is GateKind.PO]

    def status(self, v: int) -> NodeStatus:
        return self._status[v]

    def set_status(self, v: int, status: NodeStatus):
        current = self._status[v]
        if status is current:
            return
        if status not in LEGAL_TRANSITIONS[current]:
            raise ContractError(f'illegal status transition {current.value} -> {status.value} at node {v}')
        self._status[v] = status

    def status_counts(self) -> Counter:
        return Counter(self._status)

    def live_nodes(self) -> List[int]:
        return [v for v, status in enumerate(self._status) if status is not NodeStatus.DEAD]

    def fanins(self, v: int) -> Tuple[int, ...]:
        return tuple(self._fanins[v])

    def fanouts(self, v: int) -> Tuple[int, ...]:
        return tuple(self._fanouts[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.A[u][v])

    def reaches(self, u: int, v: int) -> bool:
        return bool(self.R[u][v]) and not self._isolated[v]

    def net_id(self, v: int) -> int:
        """Network node a dependency node stands for; an INV maps to its driver"""
        return self._net_ids[v]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u in range(len(self)):
            for v in self._fanouts[u]:
                yield u, v

    @property
    def edge_count(self) -> int:
        return sum(len(f) for f in self._fanouts)

    @property
    def depth(self) -> int:
        return max((self.level[v] for v in self.live_nodes()), default=0)

    def _link(self, u: int, v: int):
        if u == v:
            raise ContractError(f'self edge at node {u}')
        if self.A[u][v]:
            return
        self.A[u][v] = 1
        self._fanins[v].append(u)
        self._fanouts[u].append(v)

    def add_edge(self, u: int, v: int):
        """Adds ``u -> v`` and marks ``v`` reachable from ``u``.

        Ancestors of ``u`` and descendants of ``v`` are not touched; callers
        only add edges whose endpoints are already connected by a path.
        """
        self._link(u, v)
        self.R[u][v] = 1

    def isolate(self, v: int):
        """Removes every edge at ``v`` and clears its row and column of ``R``"""
        for u in self._fanins[v]:
            self.A[u][v] = 0
            self._fanouts[u].remove(v)
        for w in self._fanouts[v]:
            self.A[v][w] = 0
            self._fanins[w].remove(v)
        self._fanins[v] = []
        self._fanouts[v] = []

        self.R[v].setall(False)
        self._isolated[v] = 1

    def topological_order(self) -> List[int]:
        """Kahn order over live nodes, ascending id among ready nodes"""
        live = self.live_nodes()
        pending = {v: len(self._fanins[v]) for v in live}
        ready = deque(v for v in live if pending[v] == 0)
        order = []
        while ready:
            v = ready.popleft()
            order.append(v)
            for w in sorted(self._fanouts[v]):
                pending[w] -= 1
                if pending[w] == 0:
                    ready.append(w)
        if len(order) != len(live):
            raise ContractError('dependency graph is cyclic')
        return order

    def adjacency_matrix(self) -> np.ndarray:
        return bits_to_numpy(self.A, len(self))

    def reachability_matrix(self) -> np.ndarray:
        matrix = bits_to_numpy(self.R, len(self))
        matrix[:, np.array(self._isolated.tolist(), dtype=bool)] = False
        return matrix

    def to_network(self) -> BooleanNetwork:
        """The inverter-materialized graph as a network without complement flags"""
        if any(status is NodeStatus.DEAD for status in self._status):
            raise ContractError('a reduced dependency graph no longer computes the network function')
        fanins = []
        for v, kind in enumerate(self.kinds):
            node_fanins = [Fanin(u) for u in self._fanins[v]]
            # x & x collapses to a single edge in A
            if kind.arity == 2 and len(node_fanins) == 1:
                node_fanins = node_fanins * 2
            fanins.append(node_fanins)
        return BooleanNetwork(self.kinds, fanins, self.names)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for v in self.live_nodes():
            attrs = {'kind': self.kinds[v].value, 'status': self._status[v].value, 'level': self.level[v]}
            if self.names[v] is not None:
                attrs['name'] = self.names[v]
            graph.add_node(v, **attrs)
        graph.add_edges_from(self.edges())
        return graph


@dataclass
class SkeletonGraph:
    """Retained (keep + preserved) nodes of a reduced dependency graph"""

    kinds: List[GateKind]
    statuses: List[NodeStatus]
    level: List[int]
    names: List[Optional[str]]
    provenance: List[int]
    net_ids: List[int]
    edges: List[Tuple[int, int]]
    _fanins: List[List[int]] = field(init=False, repr=False)
    _fanouts: List[List[int]] = field(init=False, repr=False)

    def __post_init__(self):
        self._fanins = [[] for _ in self.kinds]
        self._fanouts = [[] for _ in self.kinds]
        for u, v in self.edges:
            self._fanouts[u].append(v)
            self._fanins[v].append(u)

    def __len__(self):
        return len(self.kinds)

    def live_nodes(self) -> range:
        return range(len(self))

    def fanins(self, v: int) -> Tuple[int, ...]:
        return tuple(self._fanins[v])

    def fanouts(self, v: int) -> Tuple[int, ...]:
        return tuple(self._fanouts[v])

    def net_id(self, v: int) -> int:
        return self.net_ids[v]

    @property
    def pis(self) -> List[int]:
        return [v for v, kind in enumerate(self.kinds) if kind is GateKind.PI]

    @property
    def pos(self) -> List[int]:
        return [v for v, kind in enumerate(self.kinds) if kind is GateKind.PO]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def depth(self) -> int:
        return max(self.level, default=0)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for v, kind in enumerate(self.kinds):
            attrs = {'kind': kind.value, 'status': self.statuses[v].value, 'level': self.level[v],
                     'orig_id': self.provenance[v]}
            if self.names[v] is not None:
                attrs['name'] = self.names[v]
            graph.add_node(v, **attrs)
        graph.add_edges_from(self.edges)
        return graph


def recover(net: BooleanNetwork) -> DepGraph:
    """Materializes complemented edges as INV nodes, one per complemented driver"""
    kinds = list(net.kinds)
    names = list(net.names)
    net_ids = list(range(len(net)))
    inverters: Dict[int, int] = {}
    edges: List[Tuple[int, int]] = []
    for v in range(len(net)):
        for fanin in net.fanins(v):
            source = fanin.node
            if fanin.complemented:
                inverter = inverters.get(source)
                if inverter is None:
                    inverter = len(kinds)
                    inverters[source] = inverter
                    kinds.append(GateKind.INV)
                    names.append(None)
                    net_ids.append(source)
                    edges.append((source, inverter))
                source = inverter
            edges.append((source, v))

    graph = DepGraph(kinds, names, net_ids, edges)
    levelize(graph)
    compute_reachability(graph)
    logger.debug('recovered dependency graph: %d nodes, %d inverters', len(graph), len(inverters))
    return graph


def init_status(g: DepGraph):
    for v, kind in enumerate(g.kinds):
        if g.status(v) is NodeStatus.DEAD:
            continue
        g._status[v] = NodeStatus.KEEP if kind.is_boundary else NodeStatus.ACTIVE


def levelize(g: DepGraph):
    for v in g.topological_order():
        if g.kinds[v] is GateKind.PI:
            g.level[v] = 0
        else:
            g.level[v] = max((g.level[u] for u in g.fanins(v)), default=-1) + 1


def compute_reachability(g: DepGraph):
    order = g.topological_order()
    for v in g.live_nodes():
        g.R[v].setall(False)
    for v in reversed(order):
        row = g.R[v]
        for w in g.fanouts(v):
            row |= g.R[w]
            row[w] = 1


def prune_dangling(g: DepGraph) -> List[Diagnostic]:
    """Kills internal nodes that reach no PO"""
    diagnostics = []
    for v in reversed(g.topological_order()):
        if g.status(v) is not NodeStatus.ACTIVE or g.fanouts(v):
            continue
        g.set_status(v, NodeStatus.DEAD)
        g.isolate(v)
        diagnostic = Diagnostic(v, DiagnosticRule.DANGLING, f'{g.kinds[v].value} node drives no output')
        logger.warning('pruned dangling node: %s', diagnostic)
        diagnostics.append(diagnostic)
    return diagnostics


def collect_skeleton(g: DepGraph) -> SkeletonGraph:
    active = [v for v in range(len(g)) if g.status(v) is NodeStatus.ACTIVE]
    if active:
        raise ContractError(f'{len(active)} nodes are still active, e.g. {active[0]}')
    levelize(g)

    retained = [v for v in range(len(g)) if g.status(v).is_retained]
    skeleton_id = {v: s for s, v in enumerate(retained)}
    edges = [(skeleton_id[u], skeleton_id[w]) for u in retained for w in sorted(g.fanouts(u))]
    return SkeletonGraph(kinds=[g.kinds[v] for v in retained],
                         statuses=[g.status(v) for v in retained],
                         level=[g.level[v] for v in retained],
                         names=[g.names[v] for v in retained],
                         provenance=retained,
                         net_ids=[g.net_id(v) for v in retained],
                         edges=edges)
