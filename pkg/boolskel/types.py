from enum import Enum


class GateKind(Enum):
    """Gate tags of a typed Boolean network"""

    PI = "PI"
    PO = "PO"
    CONST0 = "CONST0"
    AND2 = "AND2"
    OR2 = "OR2"
    XOR2 = "XOR2"
    INV = "INV"
    BUF = "BUF"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def is_boundary(self) -> bool:
        """PIs, POs and the constant are never reduced"""
        return self in (GateKind.PI, GateKind.PO, GateKind.CONST0)


_ARITY = {
    GateKind.PI: 0,
    GateKind.CONST0: 0,
    GateKind.INV: 1,
    GateKind.BUF: 1,
    GateKind.PO: 1,
    GateKind.AND2: 2,
    GateKind.OR2: 2,
    GateKind.XOR2: 2,
}


class NodeStatus(Enum):
    """Lifecycle of a dependency-graph node"""

    KEEP = "keep"  # boundary signal, always retained
    ACTIVE = "active"  # candidate for reduction
    PRESERVED = "preserved"  # retained in the skeleton
    DEAD = "dead"  # removed

    @property
    def is_retained(self) -> bool:
        return self in (NodeStatus.KEEP, NodeStatus.PRESERVED)


# Keep -> Preserved is legal but never taken by the reduction: boundary nodes
# stay Keep for the whole run.
LEGAL_TRANSITIONS = {
    NodeStatus.ACTIVE: frozenset({NodeStatus.PRESERVED, NodeStatus.DEAD}),
    NodeStatus.KEEP: frozenset({NodeStatus.PRESERVED}),
    NodeStatus.PRESERVED: frozenset(),
    NodeStatus.DEAD: frozenset(),
}


class PatternClass(Enum):
    HOMOGENEOUS = "homogeneous"
    HETEROGENEOUS = "heterogeneous"


class DiagnosticRule(Enum):
    """Network invariants checked by validate"""

    ARITY = "arity"
    CYCLE = "cycle"
    PO_FANOUT = "po_fanout"
    BAD_REFERENCE = "bad_reference"
    DANGLING = "dangling"


class SimilarityMetric(Enum):
    JACCARD = "jaccard"  # |r1 & r2| / |r1 | r2|
    OVERLAP = "overlap"  # |r1 & r2| / min(|r1|, |r2|)


class InputFormat(Enum):
    AUTO = "auto"
    AIGER = "aiger"
    GRAPHML = "graphml"


class OutputFormat(Enum):
    GRAPHML = "graphml"
    DOT = "dot"
    JSON = "json"


class Unlimited(Enum):
    """Fanin limit with no bound"""

    UNLIMITED = "inf"

    def __str__(self):
        return self.value


UNLIMITED = Unlimited.UNLIMITED
