"""Recognition of (k,l)-graphs for k, l <= 2 with verifiable partition certificates."""

from .basic import bipartite_check, cobipartite_check, split_check
from .certificates import KLPartition, Violation, verify_kl
from .dispatch import recognize
from .graph import Graph, GraphError, build_graph, complement, induced_subgraph
from .oracle import oracle_kl
from .recog21 import recognize_12, recognize_21, recognize_21_oddcore
from .recog22 import recognize_22

__all__ = [
    "Graph",
    "GraphError",
    "KLPartition",
    "Violation",
    "bipartite_check",
    "build_graph",
    "cobipartite_check",
    "complement",
    "induced_subgraph",
    "oracle_kl",
    "recognize",
    "recognize_12",
    "recognize_21",
    "recognize_21_oddcore",
    "recognize_22",
    "split_check",
    "verify_kl",
]
