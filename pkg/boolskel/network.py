"""
boolskel.network
~~~~~~~~~~~~~~~~

Typed gate-level Boolean networks: construction, validation, evaluation
and unit-delay levelization.
"""

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Sequence

import networkx as nx

from boolskel.exceptions import EvaluationError, NetworkValidationError
from boolskel.types import DiagnosticRule, GateKind

InputAssignment = Mapping[int, bool]


class Fanin(NamedTuple):
    node: int
    complemented: bool = False


@dataclass(frozen=True)
class Diagnostic:
    node: Optional[int]
    rule: DiagnosticRule
    message: str

    def __str__(self):
        where = '' if self.node is None else f' @ {self.node}'
        return f'{self.rule.value}{where}: {self.message}'


class BooleanNetwork:
    """Immutable gate-level DAG.

    Node ids are dense ``0..n-1``. Every node carries a :class:`GateKind` and
    an ordered fanin list; a fanin may be complemented, which is how AIGER
    literals are kept until the dependency graph materializes inverters.
    """

    def __init__(self, kinds: Sequence[GateKind], fanins: Sequence[Iterable], names=None,
                 pi_order: Optional[Sequence[int]] = None, po_order: Optional[Sequence[int]] = None):
        self._kinds = tuple(kinds)
        self._fanins = tuple(tuple(Fanin(*f) if not isinstance(f, Fanin) else f for f in node_fanins)
                             for node_fanins in fanins)
        if len(self._fanins) != len(self._kinds):
            raise ValueError('kinds and fanins must have the same length')
        self._names = tuple(names) if names is not None else (None,) * len(self._kinds)
        if pi_order is None:
            pi_order = [v for v, kind in enumerate(self._kinds) if kind is GateKind.PI]
        if po_order is None:
            po_order = [v for v, kind in enumerate(self._kinds) if kind is GateKind.PO]
        self.pi_order = tuple(pi_order)
        self.po_order = tuple(po_order)

    def __len__(self):
        return len(self._kinds)

    def __str__(self):
        return f'BooleanNetwork(pis={len(self.pi_order)}, pos={len(self.po_order)}, nodes={len(self)})'

    __repr__ = __str__

    @property
    def kinds(self):
        return self._kinds

    @property
    def names(self):
        return self._names

    def kind(self, v: int) -> GateKind:
        return self._kinds[v]

    def fanins(self, v: int):
        return self._fanins[v]

    def fanouts(self, v: int) -> List[int]:
        return self._fanout_lists[v]

    def live_nodes(self) -> range:
        return range(len(self))

    @cached_property
    def _fanout_lists(self) -> List[List[int]]:
        fanouts: List[List[int]] = [[] for _ in self._kinds]
        for v, node_fanins in enumerate(self._fanins):
            for fanin in node_fanins:
                if 0 <= fanin.node < len(fanouts):
                    fanouts[fanin.node].append(v)
        return fanouts

    @cached_property
    def _name_index(self) -> Dict[str, int]:
        return {name: v for v, name in enumerate(self._names) if name is not None}

    def node_by_name(self, name: str) -> Optional[int]:
        return self._name_index.get(name)

    def count(self, kind: GateKind) -> int:
        return sum(1 for k in self._kinds if k is kind)

    @property
    def edge_count(self) -> int:
        return sum(len(f) for f in self._fanins)

    @property
    def complemented_edge_count(self) -> int:
        return sum(1 for node_fanins in self._fanins for f in node_fanins if f.complemented)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for v, kind in enumerate(self._kinds):
            attrs = {'kind': kind.value}
            if self._names[v] is not None:
                attrs['name'] = self._names[v]
            graph.add_node(v, **attrs)
        for v, node_fanins in enumerate(self._fanins):
            for port, fanin in enumerate(node_fanins):
                graph.add_edge(fanin.node, v, port=port, complement=fanin.complemented)
        return graph


def validate(net: BooleanNetwork) -> List[Diagnostic]:
    diagnostics: List[Diagnostic] = []
    n = len(net)
    broken_refs = False
    for v in range(n):
        kind = net.kind(v)
        node_fanins = net.fanins(v)
        if len(node_fanins) != kind.arity:
            diagnostics.append(Diagnostic(v, DiagnosticRule.ARITY,
                                          f'{kind.value} expects {kind.arity} fanins, has {len(node_fanins)}'))
        for fanin in node_fanins:
            if not 0 <= fanin.node < n:
                broken_refs = True
                diagnostics.append(Diagnostic(v, DiagnosticRule.BAD_REFERENCE, f'fanin {fanin.node} out of range'))
        if kind is GateKind.PO and net.fanouts(v):
            diagnostics.append(Diagnostic(v, DiagnosticRule.PO_FANOUT, f'PO drives {len(net.fanouts(v))} nodes'))

    for label, order, kind in (('pi_order', net.pi_order, GateKind.PI), ('po_order', net.po_order, GateKind.PO)):
        for v in order:
            if not 0 <= v < n or net.kind(v) is not kind:
                diagnostics.append(Diagnostic(v, DiagnosticRule.BAD_REFERENCE, f'{label} entry is not a {kind.value}'))
        expected = net.count(kind)
        if len(set(order)) != len(order) or len(order) != expected:
            diagnostics.append(Diagnostic(None, DiagnosticRule.BAD_REFERENCE,
                                          f'{label} lists {len(order)} nodes, network has {expected}'))

    if not broken_refs:
        cycle = _find_cycle(net)
        if cycle:
            path = ' -> '.join(str(v) for v in cycle)
            diagnostics.append(Diagnostic(cycle[0], DiagnosticRule.CYCLE, f'cycle detected: {path}'))
    return diagnostics


def _find_cycle(net: BooleanNetwork) -> List[int]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(net)))
    graph.add_edges_from((f.node, v) for v in range(len(net)) for f in net.fanins(v))
    try:
        return [u for u, _ in nx.find_cycle(graph)]
    except nx.NetworkXNoCycle:
        return []


def check(net: BooleanNetwork) -> BooleanNetwork:
    diagnostics = validate(net)
    if diagnostics:
        raise NetworkValidationError(f'invalid network: {diagnostics[0]}', diagnostics)
    return net


def topological_order(net: BooleanNetwork) -> List[int]:
    """Kahn order, smallest ready id first"""
    pending = [len(f) for f in (net.fanins(v) for v in range(len(net)))]
    ready = [v for v, count in enumerate(pending) if count == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in net.fanouts(v):
            pending[w] -= 1
            if pending[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != len(net):
        raise NetworkValidationError('network is cyclic', validate(net))
    return order


_GATE_FUNCTIONS = {
    GateKind.AND2: lambda a, b: a and b,
    GateKind.OR2: lambda a, b: a or b,
    GateKind.XOR2: lambda a, b: a != b,
    GateKind.INV: lambda a: not a,
    GateKind.BUF: lambda a: a,
    GateKind.PO: lambda a: a,
}


def evaluate(net: BooleanNetwork, assignment: InputAssignment) -> Dict[int, bool]:
    missing = [v for v in net.pi_order if v not in assignment]
    if missing:
        raise EvaluationError(f'assignment misses PIs {missing}')

    values: Dict[int, bool] = {}
    for v in topological_order(net):
        kind = net.kind(v)
        if kind is GateKind.PI:
            values[v] = bool(assignment[v])
        elif kind is GateKind.CONST0:
            values[v] = False
        else:
            operands = [values[f.node] != f.complemented for f in net.fanins(v)]
            values[v] = _GATE_FUNCTIONS[kind](*operands)
    return {po: values[po] for po in net.po_order}


def assignment_from_int(net: BooleanNetwork, bits: int) -> Dict[int, bool]:
    """Bit ``i`` of ``bits`` drives the ``i``-th PI of ``pi_order``"""
    return {pi: bool((bits >> i) & 1) for i, pi in enumerate(net.pi_order)}


def outputs_to_int(net: BooleanNetwork, outputs: Mapping[int, bool]) -> int:
    return sum(1 << i for i, po in enumerate(net.po_order) if outputs[po])


def depth_map(net: BooleanNetwork) -> Dict[int, int]:
    levels: Dict[int, int] = {}
    for v in topological_order(net):
        if net.kind(v) is GateKind.PI:
            levels[v] = 0
        else:
            levels[v] = max((levels[f.node] for f in net.fanins(v)), default=-1) + 1
    return levels


def pi_support(net: BooleanNetwork) -> Dict[int, FrozenSet[int]]:
    """PI support of every PO"""
    support: Dict[int, FrozenSet[int]] = {}
    for v in topological_order(net):
        if net.kind(v) is GateKind.PI:
            support[v] = frozenset((v,))
        else:
            support[v] = frozenset().union(*(support[f.node] for f in net.fanins(v)))
    return {po: support[po] for po in net.po_order}
