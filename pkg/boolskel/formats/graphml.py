"""
boolskel.formats.graphml
~~~~~~~~~~~~~~~~~~~~~~~~

GraphML reader for typed Boolean networks and writer for dependency and
skeleton graphs.
"""

import io
import logging
from typing import Dict, List
from xml.etree.ElementTree import ParseError

import networkx as nx

from boolskel.exceptions import NetworkFormatError
from boolskel.network import BooleanNetwork, Fanin, check
from boolskel.types import GateKind

logger = logging.getLogger(__name__)

_TRUE_STRINGS = ('1', 'true', 'yes')


def _as_bool(value) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in _TRUE_STRINGS
    return bool(value)


def parse_graphml_network(data: bytes) -> BooleanNetwork:
    """Reads a network whose nodes carry a ``kind`` attribute.

    Edges run fanin -> node. An integer ``port`` edge attribute fixes the
    fanin order; a boolean ``complement`` edge attribute marks an inverted
    fanin.
    """
    try:
        graph = nx.read_graphml(io.BytesIO(data), force_multigraph=True)
    except (ParseError, nx.NetworkXError, ValueError, KeyError) as e:
        raise NetworkFormatError(f'unreadable GraphML: {e}')
    if not graph.is_directed():
        raise NetworkFormatError('GraphML graph must be directed')

    index: Dict[str, int] = {}
    kinds: List[GateKind] = []
    names = []
    for key, attrs in graph.nodes(data=True):
        raw_kind = attrs.get('kind')
        if raw_kind is None:
            raise NetworkFormatError(f'node {key!r} has no "kind" attribute')
        try:
            kind = GateKind(str(raw_kind).strip().upper())
        except ValueError:
            raise NetworkFormatError(f'unknown kind {raw_kind!r} on node {key!r}')
        index[key] = len(kinds)
        kinds.append(kind)
        names.append(attrs.get('name', str(key)))

    fanins: List[List[tuple]] = [[] for _ in kinds]
    for position, (source, target, attrs) in enumerate(graph.edges(data=True)):
        port = attrs.get('port')
        order = (0, int(port), position) if port is not None else (1, position, position)
        fanins[index[target]].append((order, Fanin(index[source], _as_bool(attrs.get('complement', False)))))

    net = BooleanNetwork(kinds, [[f for _, f in sorted(node_fanins)] for node_fanins in fanins], names)
    logger.debug('parsed GraphML network with %d nodes', len(net))
    return check(net)


def dump_graphml(graph) -> str:
    """GraphML text of anything exposing ``to_networkx()``"""
    return '\n'.join(nx.generate_graphml(graph.to_networkx())) + '\n'
