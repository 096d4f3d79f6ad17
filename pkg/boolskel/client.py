"""
boolskel.client
~~~~~~~~~~~~~~~

Facade over parsing, skeletonization, analysis and verification.
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from boolskel.__version__ import __version__
from boolskel.analysis import (CompressionStats, TimingPath, compression_stats, critical_path,
                               critical_region_similarity, extract_critical_region, similarity, to_network_path)
from boolskel.config import FaninLimit, ReductionConfig, RunConfig
from boolskel.depgraph import DepGraph, SkeletonGraph, recover
from boolskel.exceptions import NetworkFormatError
from boolskel.formats import (dump_dot, dump_graphml, dump_skeleton_json, parse_aiger, parse_graphml_network,
                              parse_path_file, stats_row)
from boolskel.network import BooleanNetwork
from boolskel.oracle import VerificationResult, verify_skeleton
from boolskel.reduction import ReductionReport, k_sweep, prepare, skeletonize
from boolskel.types import InputFormat, OutputFormat, SimilarityMetric
from boolskel.utils import detect_format

logger = logging.getLogger(__name__)

_PARSERS = {
    InputFormat.AIGER: parse_aiger,
    InputFormat.GRAPHML: parse_graphml_network,
}

_WRITERS = {
    OutputFormat.GRAPHML: dump_graphml,
    OutputFormat.DOT: dump_dot,
    OutputFormat.JSON: dump_skeleton_json,
}


class BoolSkel:
    def __init__(self, config: Optional[RunConfig] = None):
        """
        :param config: (optional) run configuration; K, seed and metric default from it.
        """

        self.config = config or RunConfig()

    def __str__(self):
        return f'BoolSkel {__version__}'

    def __repr__(self):
        return f'BoolSkel {__version__}'

    def _reduction(self, k: Optional[FaninLimit]) -> ReductionConfig:
        return ReductionConfig(k=k) if k is not None else self.config.reduction

    def load(self, path: Union[str, Path], input_format: Optional[InputFormat] = None) -> BooleanNetwork:
        data = Path(path).read_bytes()
        input_format = input_format or self.config.input_format
        if input_format is InputFormat.AUTO:
            input_format = detect_format(path, data[:64])
        if input_format is InputFormat.AUTO:
            raise NetworkFormatError(f'cannot tell the format of {path}')
        net = _PARSERS[input_format](data)
        logger.info('loaded %s: %s', path, net)
        return net

    def skeletonize(self, net: BooleanNetwork, k: Optional[FaninLimit] = None) -> Tuple[SkeletonGraph, ReductionReport]:
        return skeletonize(net, self._reduction(k))

    def stats(self, net: BooleanNetwork, k: Optional[FaninLimit] = None) -> CompressionStats:
        skeleton, _ = self.skeletonize(net, k)
        return compression_stats(recover(net), skeleton)

    def stats_rows(self, path: Union[str, Path]) -> List[dict]:
        """One stats row per K of the sweep (or the single configured K)"""
        net = self.load(path)
        baseline = recover(net)
        return [stats_row(Path(path).name, k, compression_stats(baseline, skeleton))
                for k, skeleton, _ in k_sweep(net, self.config.k_sweep or [self.config.reduction.k])]

    def graph(self, net: BooleanNetwork, k: Optional[FaninLimit] = None) -> Union[DepGraph, SkeletonGraph]:
        """Skeleton at ``k`` (or the configured K).

        When neither is set this is the unreduced dependency graph, with logic
        that reaches no PO pruned.
        """
        k = k if k is not None else self.config.k
        if k is None:
            return prepare(net)
        skeleton, _ = skeletonize(net, ReductionConfig(k=k))
        return skeleton

    def critical_path(self, net: BooleanNetwork, k: Optional[FaninLimit] = None) -> List[int]:
        """Critical path mapped onto network ids"""
        graph = self.graph(net, k)
        path: TimingPath = critical_path(graph)
        return to_network_path(path, graph)

    def similarity(self, net: BooleanNetwork, text_a: str, text_b: Optional[str] = None,
                   metric: Optional[SimilarityMetric] = None) -> float:
        """Region similarity of two path files, or of one path file and the graph's critical path.

        ``text_a`` and ``text_b`` are path file contents.
        """
        metric = metric or self.config.metric
        first = parse_path_file(text_a, net)
        if text_b is None:
            return critical_region_similarity(net, self.graph(net), first, metric)
        second = parse_path_file(text_b, net)
        return similarity(extract_critical_region(net, first), extract_critical_region(net, second), metric)

    def verify(self, net: BooleanNetwork, k: Optional[FaninLimit] = None) -> VerificationResult:
        return verify_skeleton(net, self._reduction(k), seed=self.config.seed)

    def verify_many(self, net: BooleanNetwork, limits: Sequence[FaninLimit]) -> List[Tuple[FaninLimit, VerificationResult]]:
        return [(k, self.verify(net, k)) for k in limits]

    @staticmethod
    def export(graph, out_format: OutputFormat = OutputFormat.GRAPHML) -> str:
        return _WRITERS[out_format](graph)
