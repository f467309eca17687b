from __future__ import annotations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from treebound.graph_core.builders import complete, cycle, empty, path
from treebound.graph_core.graph import Graph, WeightFunction
from treebound.graph_core.operations import (
    blowup,
    complement,
    connected_components,
    graph_fingerprint,
    induced_subgraph,
    is_chordal,
    is_clique,
    is_connected,
    is_stable_set,
)


@st.composite
def graphs(draw, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
@settings(max_examples=50, deadline=None)
def test_complement_is_an_involution(graph: Graph) -> None:
    co = complement(graph)

    assert complement(co) == graph
    assert graph.num_edges + co.num_edges == graph.n * (graph.n - 1) // 2


def test_induced_subgraph_keeps_labels() -> None:
    sub = induced_subgraph(cycle(5), [0, 1, 3])

    assert sub.labels == ("0", "1", "3")
    assert list(sub.edges()) == [(0, 1)]


def test_stable_sets_and_cliques() -> None:
    pentagon = cycle(5)

    assert is_stable_set(pentagon, [0, 2])
    assert not is_stable_set(pentagon, [0, 1])
    assert is_clique(complete(4), range(4))
    assert is_clique(pentagon, [])


def test_components_and_chordality() -> None:
    graph = Graph.from_edges(5, [(0, 1), (3, 4)])

    assert connected_components(graph) == [frozenset({0, 1}), frozenset({2}), frozenset({3, 4})]
    assert not is_connected(graph)
    assert is_chordal(path(4))
    assert not is_chordal(cycle(4))


def test_blowup_of_an_edge_is_a_square() -> None:
    blown, projection = blowup(complete(2), WeightFunction.constant(2, 2))

    assert blown.labels == ("0#0", "0#1", "1#0", "1#1")
    assert nx.is_isomorphic(blown.to_networkx(), nx.cycle_graph(4))
    assert projection.mapping == (0, 0, 1, 1)
    assert projection.is_valid()


def test_blowup_drops_zero_weight_vertices() -> None:
    blown, projection = blowup(path(3), WeightFunction((1, 0, 3)))

    assert blown.n == 4
    assert blown.num_edges == 0
    assert projection.mapping == (0, 2, 2, 2)


@given(graphs(max_n=6), st.data())
@settings(max_examples=40, deadline=None)
def test_blowup_classes_are_stable_and_projection_is_a_homomorphism(graph: Graph, data: st.DataObject) -> None:
    values = data.draw(st.lists(st.integers(min_value=0, max_value=3), min_size=graph.n, max_size=graph.n))
    blown, projection = blowup(graph, WeightFunction(tuple(values)))

    assert blown.n == sum(values)
    assert projection.is_valid()
    for v in graph.vertices():
        assert is_stable_set(blown, projection.preimage([v]))


def test_fingerprint_depends_on_labels_and_edges() -> None:
    assert graph_fingerprint(cycle(5)) == graph_fingerprint(cycle(5))
    assert graph_fingerprint(cycle(5)) != graph_fingerprint(path(5))
    assert graph_fingerprint(empty(2)) != graph_fingerprint(Graph(("a", "b"), (0, 0)))
