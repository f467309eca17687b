"""Elementary graph operations: complement, induced subgraphs, blowups, components."""
from __future__ import annotations

import hashlib
from collections.abc import Iterable

import networkx as nx

from treebound.graph_core.bitset import components, iter_bits
from treebound.graph_core.graph import Graph, Homomorphism, VertexSet, WeightFunction


def complement(graph: Graph) -> Graph:
    full = graph.full_mask
    return Graph(graph.labels, tuple(full & ~row & ~(1 << v) for v, row in enumerate(graph.adjacency)))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on *vertices* in increasing index order, labels preserved."""
    return induced_subgraph_mask(graph, graph.vertex_mask(vertices))


def induced_subgraph_mask(graph: Graph, mask: int) -> Graph:
    kept = list(iter_bits(mask))
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(graph.adjacency[v] & mask):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(tuple(graph.labels[v] for v in kept), tuple(rows))


def is_stable_set(graph: Graph, vertices: Iterable[int]) -> bool:
    mask = graph.vertex_mask(vertices)
    return all(not graph.adjacency[v] & mask for v in iter_bits(mask))


def is_clique(graph: Graph, vertices: Iterable[int]) -> bool:
    mask = graph.vertex_mask(vertices)
    return all((graph.adjacency[v] | (1 << v)) & mask == mask for v in iter_bits(mask))


def connected_components(graph: Graph) -> list[VertexSet]:
    return [frozenset(iter_bits(comp)) for comp in components(graph.adjacency, graph.full_mask)]


def is_connected(graph: Graph) -> bool:
    return graph.n == 0 or len(components(graph.adjacency, graph.full_mask)) == 1


def is_chordal(graph: Graph) -> bool:
    return nx.is_chordal(graph.to_networkx())


def blowup(graph: Graph, weights: WeightFunction) -> tuple[Graph, Homomorphism]:
    """Replace v by a stable class of w(v) vertices "v#0".."v#(w-1)"; classes joined along edges.

    Classes are laid out in vertex order; zero-weight vertices disappear.
    """
    weights.check_for(graph)
    class_masks: list[int] = []
    labels: list[str] = []
    origin: list[int] = []
    for v in graph.vertices():
        start = len(labels)
        for i in range(weights[v]):
            labels.append(f"{graph.labels[v]}#{i}")
            origin.append(v)
        class_masks.append(((1 << weights[v]) - 1) << start)
    rows = []
    for v in origin:
        row = 0
        for u in iter_bits(graph.adjacency[v]):
            row |= class_masks[u]
        rows.append(row)
    blown = Graph(tuple(labels), tuple(rows))
    return blown, Homomorphism(blown, graph, tuple(origin))


def graph_fingerprint(graph: Graph) -> str:
    """sha256 of the canonical .gr serialisation."""
    from treebound.graph_core.formats import write_graph

    return hashlib.sha256(write_graph(graph).encode("utf-8")).hexdigest()

