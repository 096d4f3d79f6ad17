"""
boolskel.cli
~~~~~~~~~~~~

``boolskel`` command line: reduce, stats, critpath, similarity, verify.

Exit codes: 0 success, 1 usage or configuration error, 2 unreadable or
invalid input, 3 verification failure, 4 I/O error.
"""

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from boolskel.__version__ import __version__
from boolskel.client import BoolSkel
from boolskel.config import RunConfig, log_level_from_env
from boolskel.exceptions import (ConfigError, EmptyGraphError, NetworkFormatError, NetworkValidationError,
                                 PathFileError, VerificationError)
from boolskel.formats import dump_report, dump_stats_json, dump_stats_tsv, format_path
from boolskel.types import UNLIMITED, OutputFormat, SimilarityMetric
from boolskel.utils import format_ratio

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_IO = 4

_LOG_LEVELS = {
    'error': logging.ERROR,
    'warn': logging.WARNING,
    'warning': logging.WARNING,
    'info': logging.INFO,
    'debug': logging.DEBUG,
}

_DESIGN_SUFFIXES = ('.aag', '.aig', '.graphml', '.xml')

_OUTPUT_SUFFIXES = {
    '.graphml': OutputFormat.GRAPHML,
    '.dot': OutputFormat.DOT,
    '.json': OutputFormat.JSON,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def configure_logging(environ=None):
    root = logging.getLogger('boolskel')
    if root.handlers:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root.addHandler(handler)
    value = log_level_from_env(environ)
    root.setLevel(_LOG_LEVELS.get(value, logging.WARNING))
    if value not in _LOG_LEVELS:
        root.warning('unknown BOOLSKEL_LOG level %r, using warn', value)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--input', required=True, help='AIGER or GraphML design (a directory for stats)')
    common.add_argument('--format', choices=['auto', 'aiger', 'graphml'], default='auto')
    common.add_argument('--k', help='fanin limit, an integer >= 1 or "inf"')
    common.add_argument('--k-sweep', help='list of fanin limits such as "1..10" or "2,4,inf"')
    common.add_argument('--output', help='output file, standard output when omitted')
    common.add_argument('--out-format', choices=[f.value for f in OutputFormat])
    common.add_argument('--verify', action='store_true', help='check the skeleton against the oracles')
    common.add_argument('--seed', type=int, help='seed of the sampled equivalence check')
    common.add_argument('--jobs', type=int, help='parallel workers for directory batches')

    parser = _Parser(prog='boolskel', description='Boolean network skeletonization toolkit')
    parser.add_argument('--version', action='version', version=f'boolskel {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('reduce', parents=[common], help='skeletonize a design')
    commands.add_parser('stats', parents=[common], help='compression statistics')
    commands.add_parser('critpath', parents=[common], help='unit-delay critical path')
    similarity = commands.add_parser('similarity', parents=[common], help='critical-region similarity')
    similarity.add_argument('path_a', help='timing-path file')
    similarity.add_argument('path_b', nargs='?', help='second timing-path file; the critical path when omitted')
    similarity.add_argument('--metric', choices=[m.value for m in SimilarityMetric], default='jaccard')
    commands.add_parser('verify', parents=[common], help='run every post-reduction check')
    return parser


def _write(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _out_format(cfg: RunConfig) -> OutputFormat:
    if cfg.out_format is not None:
        return cfg.out_format
    if cfg.output is not None:
        return _OUTPUT_SUFFIXES.get(Path(cfg.output).suffix.lower(), OutputFormat.GRAPHML)
    return OutputFormat.GRAPHML


def _raise_on_failures(results):
    failures = [(k, result) for k, result in results if not result.ok]
    if failures:
        violations = [f'K={k}: {v}' for k, result in failures for v in result.violations]
        raise VerificationError(f'{len(violations)} verification checks failed', violations)


def cmd_reduce(cfg: RunConfig) -> int:
    if cfg.k_sweep:
        raise ConfigError('--k-sweep applies to stats and verify, use --k with reduce')
    client = BoolSkel(cfg)
    net = client.load(cfg.input)
    skeleton, report = client.skeletonize(net)
    _write(client.export(skeleton, _out_format(cfg)), cfg.output)
    if cfg.output is None:
        sys.stderr.write(dump_report(report))
    else:
        Path(cfg.output).with_suffix('.report.json').write_text(dump_report(report))
    if cfg.verify:
        _raise_on_failures([(cfg.reduction.k, client.verify(net))])
    return EXIT_OK


def _stats_for_file(args) -> List[dict]:
    cfg, path = args
    return BoolSkel(cfg).stats_rows(path)


def _design_files(path: Path) -> List[Path]:
    return sorted(p for p in path.iterdir() if p.is_file() and p.suffix.lower() in _DESIGN_SUFFIXES)


def cmd_stats(cfg: RunConfig) -> int:
    source = Path(cfg.input)
    files = _design_files(source) if source.is_dir() else [source]
    if cfg.jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            batches = list(pool.map(_stats_for_file, [(cfg, f) for f in files]))
    else:
        batches = [_stats_for_file((cfg, f)) for f in files]
    rows = [row for batch in batches for row in batch]
    if cfg.verify:
        for f in files:
            client = BoolSkel(cfg)
            _raise_on_failures(client.verify_many(client.load(f), cfg.k_sweep or [cfg.reduction.k]))
    text = dump_stats_json(rows) if cfg.out_format is OutputFormat.JSON else dump_stats_tsv(rows)
    _write(text, cfg.output)
    return EXIT_OK


def cmd_critpath(cfg: RunConfig) -> int:
    client = BoolSkel(cfg)
    net = client.load(cfg.input)
    _write(format_path(client.critical_path(net), net) + '\n', cfg.output)
    return EXIT_OK


def cmd_similarity(cfg: RunConfig, path_file_a: str, path_file_b: Optional[str] = None) -> int:
    client = BoolSkel(cfg)
    net = client.load(cfg.input)
    text_b = Path(path_file_b).read_text() if path_file_b else None
    alpha = client.similarity(net, Path(path_file_a).read_text(), text_b)
    _write(format_ratio(alpha) + '\n', cfg.output)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    client = BoolSkel(cfg)
    net = client.load(cfg.input)
    limits = cfg.k_sweep or [cfg.k if cfg.k is not None else UNLIMITED]
    results = client.verify_many(net, limits)
    lines = []
    for k, result in results:
        lines.append(f'K={k}\t{"ok" if result.ok else "FAILED"}\t{len(result.violations)} violations')
    _write('\n'.join(lines) + '\n', cfg.output)
    _raise_on_failures(results)
    return EXIT_OK


def run(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_namespace(args)
    if args.command == 'reduce':
        return cmd_reduce(cfg)
    if args.command == 'stats':
        return cmd_stats(cfg)
    if args.command == 'critpath':
        return cmd_critpath(cfg)
    if args.command == 'similarity':
        return cmd_similarity(cfg, args.path_a, args.path_b)
    return cmd_verify(cfg)


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    try:
        return run(build_parser().parse_args(argv))
    except ConfigError as e:
        sys.stderr.write(f'boolskel: {e}\n')
        return EXIT_USAGE
    except (NetworkFormatError, NetworkValidationError, PathFileError, EmptyGraphError) as e:
        sys.stderr.write(f'boolskel: {e}\n')
        return EXIT_INPUT
    except VerificationError as e:
        for violation in e.violations:
            sys.stderr.write(f'  {violation}\n')
        sys.stderr.write(f'boolskel: {e}\n')
        return EXIT_VERIFY
    except OSError as e:
        sys.stderr.write(f'boolskel: {e}\n')
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
