from .__version__ import __author__, __email__, __version__

from .client import BoolSkel
from .config import ReductionConfig, RunConfig
from .network import BooleanNetwork, Fanin
from .reduction import ReductionReport, skeletonize
from .types import UNLIMITED, GateKind, NodeStatus, SimilarityMetric

__all__ = ['BoolSkel', 'ReductionConfig', 'RunConfig', 'BooleanNetwork', 'Fanin', 'ReductionReport', 'skeletonize',
           'UNLIMITED', 'GateKind', 'NodeStatus', 'SimilarityMetric']
