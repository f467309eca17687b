from __future__ import annotations

import networkx as nx

from treebound.graph_core.builders import complete, cycle, disjoint_union, empty, path
from treebound.graph_core.graph import Graph, WeightFunction
from treebound.solvers.certify import certifies
from treebound.solvers.coloring import chromatic_number, clique_number, is_proper_coloring
from treebound.solvers.dispatch import solve
from treebound.solvers.models import ParameterName
from treebound.solvers.stable_set import max_stable_set, max_weight_stable_set_mask


def _petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def test_stable_set_values() -> None:
    assert max_stable_set(cycle(5)).value == 2
    assert max_stable_set(complete(4)).value == 1
    assert max_stable_set(empty(4)).value == 4
    assert max_stable_set(_petersen()).value == 4


def test_weighted_stable_set_prefers_heavy_middle() -> None:
    weights = WeightFunction((1, 3, 1))
    result = max_stable_set(path(3), weights)

    assert result.value == 3
    assert result.witness == frozenset({1})
    assert certifies(result, path(3), weights)


def test_stable_set_mask_restricted_to_a_subset() -> None:
    pentagon = cycle(5)
    value, chosen = max_weight_stable_set_mask(pentagon.adjacency, 0b00111, [1] * 5)

    assert value == 2
    assert chosen == 0b00101


def test_chromatic_numbers() -> None:
    assert chromatic_number(empty(3)).value == 1
    assert chromatic_number(cycle(6)).value == 2
    assert chromatic_number(cycle(5)).value == 3
    assert chromatic_number(complete(4)).value == 4
    assert chromatic_number(_petersen()).value == 3
    assert chromatic_number(disjoint_union([complete(3), cycle(5), path(2)])).value == 3


def test_colouring_witness_is_proper() -> None:
    result = chromatic_number(_petersen())

    assert is_proper_coloring(_petersen(), result.witness)
    assert certifies(result, _petersen())
    assert not is_proper_coloring(path(2), (0, 0))


def test_clique_numbers() -> None:
    assert clique_number(cycle(5)).value == 2
    assert clique_number(complete(5)).value == 5
    assert clique_number(_petersen()).value == 2
    assert certifies(clique_number(complete(3)), complete(3))


def test_dispatch_by_name() -> None:
    pentagon = cycle(5)

    assert solve(pentagon, "alpha").value == 2
    assert solve(pentagon, "chi").value == 3
    assert solve(pentagon, ParameterName.OMEGA).value == 2
    assert solve(pentagon, "tw").value == 2
    assert solve(pentagon, "tree-chi").value == 2
    assert solve(pentagon, "tree-alpha").name is ParameterName.TREE_ALPHA


def test_certifies_rejects_wrong_values() -> None:
    result = max_stable_set(cycle(5))

    assert not certifies(result.model_copy(update={"value": 3}), cycle(5))
    assert not certifies(result.model_copy(update={"witness": frozenset({0, 1})}), cycle(5))


def test_long_odd_cycle_does_not_exhaust_the_stack() -> None:
    long_cycle = cycle(1101)

    colouring = chromatic_number(long_cycle)
    assert colouring.value == 3
    assert is_proper_coloring(long_cycle, colouring.witness)

    stable = max_stable_set(long_cycle)
    assert stable.value == 550
    assert certifies(stable, long_cycle)
