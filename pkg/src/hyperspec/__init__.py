"""Spectra of uniform hypergraphs: s-paths, s-cycles and their Laplacian tensors."""

from .bipartite import OddBipartition, find_odd_bipartition_exhaustive, verify_odd_bipartition
from .families import (
    CycleClass, CycleParams, PathParams, build_s_cycle, build_s_path, classify_s_cycle,
    construct_odd_bipartition, cycle_odd_bipartite_predicate, recognize,
)
from .hypergraph import (
    DegreeProfile, Hypergraph, SupervertexPartition, core_analysis, degrees, is_connected,
    is_regular, make_hypergraph, supervertices,
)
from .tensor import EigenPair, OperatorTag, apply_operator, eigen_residual

__all__ = [
    "CycleClass", "CycleParams", "DegreeProfile", "EigenPair", "Hypergraph", "OddBipartition",
    "OperatorTag", "PathParams", "SupervertexPartition", "apply_operator", "build_s_cycle",
    "build_s_path", "classify_s_cycle", "construct_odd_bipartition", "core_analysis",
    "cycle_odd_bipartite_predicate", "degrees", "eigen_residual", "find_odd_bipartition_exhaustive",
    "is_connected", "is_regular", "make_hypergraph", "recognize", "supervertices",
    "verify_odd_bipartition",
]

__version__ = "0.1.0"
