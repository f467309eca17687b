"""Graph representation, builders and elementary operations."""
from treebound.graph_core.builders import build, complete, cycle, disjoint_union, empty, path, random_graph
from treebound.graph_core.graph import Graph, Homomorphism, VertexSet, WeightFunction
from treebound.graph_core.operations import (
    blowup,
    complement,
    connected_components,
    graph_fingerprint,
    induced_subgraph,
    is_chordal,
    is_stable_set,
)

__all__ = [
    "Graph",
    "Homomorphism",
    "VertexSet",
    "WeightFunction",
    "blowup",
    "build",
    "complement",
    "complete",
    "connected_components",
    "cycle",
    "disjoint_union",
    "empty",
    "graph_fingerprint",
    "induced_subgraph",
    "is_chordal",
    "is_stable_set",
    "path",
    "random_graph",
]
