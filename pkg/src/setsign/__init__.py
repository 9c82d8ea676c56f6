"""Signed graphs whose edge signs come from set-valuations of the vertices.

An edge ``uv`` is negative exactly when ``|f(u) ^ f(v)|`` is odd. The package
builds such valuations, tests balance and 2-clusterability with certificates,
checks Eulerian label-size parity, and ships brute-force oracles for all of it.
"""

from setsign.analysis import (
    Bipartition,
    ClusterCertificate,
    CycleDecomposition,
    cycle_negative_count,
    eulerian_cycle_decomposition,
    eulerian_label_sum_parity,
    is_balanced,
    is_eulerian,
    is_two_clusterable,
    two_clusterable_by_parity,
)
from setsign.constructors import (
    Unbalanced,
    balance_compatible_labeling,
    canonical_set_indexer,
    random_valuation,
)
from setsign.graph import (
    Cycle,
    Graph,
    Sign,
    SignedGraph,
    build_graph,
    connected_components,
    cycle_sign,
    enumerate_cycles,
)
from setsign.valuation import (
    ParityPartition,
    SetLabel,
    SetValuation,
    induce_signed_graph,
    induced_edge_label,
    induced_sign,
    is_set_indexer,
    parity_partition,
    same_parity,
    symmetric_difference,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "ClusterCertificate",
    "Cycle",
    "CycleDecomposition",
    "Graph",
    "ParityPartition",
    "SetLabel",
    "SetValuation",
    "Sign",
    "SignedGraph",
    "Unbalanced",
    "balance_compatible_labeling",
    "build_graph",
    "canonical_set_indexer",
    "connected_components",
    "cycle_negative_count",
    "cycle_sign",
    "enumerate_cycles",
    "eulerian_cycle_decomposition",
    "eulerian_label_sum_parity",
    "induce_signed_graph",
    "induced_edge_label",
    "induced_sign",
    "is_balanced",
    "is_eulerian",
    "is_set_indexer",
    "is_two_clusterable",
    "parity_partition",
    "random_valuation",
    "same_parity",
    "symmetric_difference",
    "two_clusterable_by_parity",
]
