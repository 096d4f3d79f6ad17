from .aiger import parse_aiger, serialize_aiger
from .dot import dump_dot
from .graphml import dump_graphml, parse_graphml_network
from .paths import format_path, parse_path_file
from .report import dump_report, dump_skeleton_json, dump_stats_json, dump_stats_tsv, stats_row

__all__ = ['parse_aiger', 'serialize_aiger', 'dump_dot', 'dump_graphml', 'parse_graphml_network', 'format_path',
           'parse_path_file', 'dump_report', 'dump_skeleton_json', 'dump_stats_json', 'dump_stats_tsv', 'stats_row']
