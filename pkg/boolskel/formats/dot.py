"""
boolskel.formats.dot
~~~~~~~~~~~~~~~~~~~~

Graphviz DOT writer for dependency and skeleton graphs.
"""

import networkx as nx

from boolskel.types import GateKind, NodeStatus

_SHAPES = {
    GateKind.PI: 'invtriangle',
    GateKind.PO: 'triangle',
    GateKind.CONST0: 'square',
    GateKind.INV: 'circle',
}


def _quoted(text: str) -> str:
    # pydot refuses bare colons in ids and attribute values
    escaped = text.replace('\\', '\\\\').replace('"', '\\"')
    return f'"{escaped}"'


def to_dot_graph(graph) -> nx.DiGraph:
    source = graph.to_networkx()
    dot = nx.DiGraph(graph={'rankdir': 'LR'})
    for v, attrs in source.nodes(data=True):
        kind = GateKind(attrs['kind'])
        label = attrs.get('name') or f'{kind.value} {v}'
        node = {'label': _quoted(label), 'shape': _SHAPES.get(kind, 'box')}
        if attrs.get('status') == NodeStatus.PRESERVED.value:
            node['style'] = 'bold'
        dot.add_node(v, **node)
    dot.add_edges_from(source.edges())
    return dot


def dump_dot(graph) -> str:
    """DOT text of anything exposing ``to_networkx()``"""
    return nx.nx_pydot.to_pydot(to_dot_graph(graph)).to_string()
