"""
boolskel.formats.report
~~~~~~~~~~~~~~~~~~~~~~~

JSON and TSV encoders for reduction reports, compression statistics and
skeletons.
"""

import json
from typing import Iterable, List, Mapping

import networkx as nx

from boolskel.utils import format_tsv_row

STATS_COLUMNS = ('design', 'k', 'original_nodes', 'final_nodes', 'original_edges', 'final_edges',
                 'original_depth', 'final_depth', 'size_ratio', 'depth_ratio')


def _dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def dump_report(report) -> str:
    return _dumps(report.to_dict())


def stats_row(design: str, k, stats) -> dict:
    return dict(design=design, k=str(k), **stats.to_dict())


def dump_stats_tsv(rows: Iterable[Mapping], header: bool = True) -> str:
    lines: List[str] = ['\t'.join(STATS_COLUMNS)] if header else []
    lines.extend(format_tsv_row(row[column] for column in STATS_COLUMNS) for row in rows)
    return '\n'.join(lines) + '\n'


def dump_stats_json(rows: Iterable[Mapping]) -> str:
    return _dumps(list(rows))


def dump_skeleton_json(graph) -> str:
    """Node-link JSON of anything exposing ``to_networkx()``"""
    return _dumps(nx.node_link_data(graph.to_networkx()))
