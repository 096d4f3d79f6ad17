"""
boolskel.formats.paths
~~~~~~~~~~~~~~~~~~~~~~

Timing-path files: one path per line, whitespace-separated node names or
ids, ``#`` starts a comment.
"""

from typing import List

from boolskel.exceptions import PathFileError
from boolskel.network import BooleanNetwork


def _resolve(token: str, net: BooleanNetwork, line: int) -> int:
    node = net.node_by_name(token)
    if node is not None:
        return node
    if token.isdigit() and int(token) < len(net):
        return int(token)
    raise PathFileError(f'unknown node {token!r}', line=line)


def parse_path_file(text: str, net: BooleanNetwork) -> List[List[int]]:
    """Network ids of every path; names win over ids when a name is numeric"""
    paths = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if tokens:
            paths.append([_resolve(token, net, number) for token in tokens])
    return paths


def format_path(nodes, net: BooleanNetwork) -> str:
    """Inverse of one line of :func:`parse_path_file`"""
    return ' '.join(net.names[v] or str(v) for v in nodes)
