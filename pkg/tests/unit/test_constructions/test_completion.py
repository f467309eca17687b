from __future__ import annotations

import networkx as nx
import pytest

from treebound.constructions.completion import (
    complete_minor_model,
    completion_lift_decomposition,
    completion_star_decomposition,
    crown_decomposition,
    induced_crown_embedding,
    one_completion,
)
from treebound.errors import DomainError, PreconditionError
from treebound.graph_core.builders import complete, cycle, empty, path
from treebound.graph_core.operations import induced_subgraph
from treebound.treedec.certificates import is_minor_model
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.validation import validate


def test_complete_graph_is_its_own_completion() -> None:
    completion = one_completion(complete(4))

    assert completion.graph == complete(4)
    assert completion.pairs == ()


def test_completion_of_three_isolated_vertices_is_a_hexagon() -> None:
    completion = one_completion(empty(3))

    assert completion.pairs == ((0, 1), (0, 2), (1, 2))
    assert completion.graph.labels[3:] == ("a(0,1)", "a(0,2)", "a(1,2)")
    assert nx.is_isomorphic(completion.graph.to_networkx(), nx.cycle_graph(6))


def test_completion_of_the_pentagon() -> None:
    completion = one_completion(cycle(5))

    assert completion.graph.n == 10
    assert completion.graph.num_edges == 15
    assert completion.added_vertex(2, 0) == 5
    for (u, v), a in completion.added.items():
        assert completion.graph.neighbors(a) == (u, v)


def test_star_decomposition_of_the_pentagon_completion() -> None:
    star = completion_star_decomposition(cycle(5))

    assert validate(star).is_valid
    assert star.num_nodes == 6
    assert star.width == 4
    assert bag_parameter(star, BagMeasure.ALPHA).value == 2


def test_star_decomposition_bag_alpha_on_an_edgeless_base() -> None:
    star = completion_star_decomposition(empty(3))

    assert star.num_nodes == 4
    assert bag_parameter(star, BagMeasure.ALPHA).value == 3
    assert completion_star_decomposition(complete(3)).num_nodes == 1


def test_star_decomposition_needs_three_vertices() -> None:
    with pytest.raises(DomainError):
        completion_star_decomposition(path(2))


def test_lift_spreads_a_pair_that_shares_no_bag() -> None:
    base = TreeDecomposition.build(path(3), [[0, 1], [1, 2]], [(0, 1)])
    lifted = completion_lift_decomposition(path(3), base)

    assert lifted.bags == (frozenset({0, 1, 3}), frozenset({1, 2, 3}))
    assert validate(lifted).is_valid
    assert bag_parameter(lifted, BagMeasure.CHI).value == 2


def test_lift_hangs_a_leaf_for_a_covered_pair() -> None:
    square = cycle(4)
    base = TreeDecomposition.build(square, [[0, 1, 2], [0, 2, 3]], [(0, 1)])
    lifted = completion_lift_decomposition(square, base)
    completion = one_completion(square)
    a02, a13 = completion.added_vertex(0, 2), completion.added_vertex(1, 3)

    assert lifted.num_nodes == 3
    assert lifted.bags[2] == frozenset({0, 2, a02})
    assert a13 in lifted.bags[0] and a13 in lifted.bags[1]
    assert validate(lifted).is_valid
    assert bag_parameter(lifted, BagMeasure.CHI).value == bag_parameter(base, BagMeasure.CHI).value


def test_lift_preconditions() -> None:
    with pytest.raises(DomainError):
        completion_lift_decomposition(empty(3), TreeDecomposition.single_bag(empty(3)))
    with pytest.raises(PreconditionError):
        completion_lift_decomposition(path(3), TreeDecomposition.single_bag(cycle(3)))
    with pytest.raises(PreconditionError):
        completion_lift_decomposition(path(3), TreeDecomposition.build(path(3), [[0], [1, 2]], [(0, 1)]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_crown_decomposition_has_smaller_bag_alpha(n: int) -> None:
    crown = crown_decomposition(n)

    assert validate(crown).is_valid
    assert crown.num_nodes == (n - 1) * (n - 2) // 2 + 2
    assert bag_parameter(crown, BagMeasure.ALPHA).value == n - 1


def test_crown_decomposition_needs_three_vertices() -> None:
    with pytest.raises(DomainError):
        crown_decomposition(2)


def test_complete_minor_model_of_the_completion() -> None:
    completion = one_completion(cycle(5))
    branches, target = complete_minor_model(completion)

    assert target == complete(5)
    assert is_minor_model(completion.graph, branches, target)


def test_induced_crown_embedding() -> None:
    completion = one_completion(cycle(5))
    chosen = induced_crown_embedding(completion, frozenset({0, 2}))
    embedded = induced_subgraph(completion.graph, chosen)

    assert chosen == frozenset({0, 2, completion.added_vertex(0, 2)})
    assert nx.is_isomorphic(embedded.to_networkx(), one_completion(empty(2)).graph.to_networkx())
    with pytest.raises(PreconditionError):
        induced_crown_embedding(completion, frozenset({0, 1}))
