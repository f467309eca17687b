from __future__ import annotations

import networkx as nx
import pytest

from treebound.constructions.completion import one_completion
from treebound.errors import BudgetExceededError
from treebound.graph_core.builders import complete, cycle, empty, path
from treebound.graph_core.graph import Graph
from treebound.solvers.brute_force import minimal_fill_ins
from treebound.solvers.budget import Deadline
from treebound.solvers.certify import certifies
from treebound.solvers.separators import pmc_catalog
from treebound.solvers.tree_parameter import tree_parameter, treewidth, treewidth_by_elimination
from treebound.treedec.measures import BagMeasure
from treebound.treedec.validation import validate


def test_square_separators_and_pmcs() -> None:
    catalog = pmc_catalog(cycle(4))

    assert catalog.separators == [frozenset({0, 2}), frozenset({1, 3})]
    assert catalog.pmcs == [
        frozenset({0, 1, 2}),
        frozenset({0, 1, 3}),
        frozenset({0, 2, 3}),
        frozenset({1, 2, 3}),
    ]
    assert len(minimal_fill_ins(cycle(4))) == 2


def test_empty_set_separates_a_disconnected_graph() -> None:
    assert frozenset() in pmc_catalog(empty(2)).separators


@pytest.mark.parametrize(
    ("graph", "expected"),
    [
        (path(1), 0),
        (empty(3), 0),
        (path(5), 1),
        (cycle(5), 2),
        (complete(4), 3),
        (Graph.from_networkx(nx.petersen_graph()), 4),
        (one_completion(cycle(5)).graph, 4),
    ],
)
def test_treewidth_values(graph: Graph, expected: int) -> None:
    result = treewidth(graph)

    assert result.value == expected
    assert treewidth_by_elimination(graph) == expected
    assert certifies(result, graph)


@pytest.mark.parametrize(
    ("graph", "measure", "expected"),
    [
        (cycle(5), BagMeasure.ALPHA, 2),
        (cycle(5), BagMeasure.CHI, 2),
        (cycle(5), BagMeasure.TW, 1),
        (complete(4), BagMeasure.ALPHA, 1),
        (complete(4), BagMeasure.CHI, 4),
        (complete(4), BagMeasure.TW, 3),
        (empty(3), BagMeasure.ALPHA, 1),
        (empty(3), BagMeasure.CHI, 1),
        (path(4), BagMeasure.ALPHA, 1),
        (one_completion(cycle(5)).graph, BagMeasure.ALPHA, 2),
        (one_completion(cycle(5)).graph, BagMeasure.CHI, 2),
    ],
)
def test_tree_parameter_values(graph: Graph, measure: BagMeasure, expected: int) -> None:
    result = tree_parameter(graph, measure)

    assert result.value == expected
    assert validate(result.witness).is_valid
    assert certifies(result, graph)


def test_tree_parameter_of_the_empty_graph() -> None:
    assert tree_parameter(Graph((), ()), BagMeasure.CHI).value == 0


def test_size_guard_refuses_large_inputs() -> None:
    with pytest.raises(BudgetExceededError) as excinfo:
        tree_parameter(cycle(6), BagMeasure.ALPHA, guard=5)
    assert excinfo.value.limit == 5
    assert excinfo.value.actual == 6


def test_expired_deadline_raises() -> None:
    with pytest.raises(BudgetExceededError):
        tree_parameter(cycle(6), BagMeasure.CHI, deadline=Deadline(-1.0))
