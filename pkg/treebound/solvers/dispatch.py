from __future__ import annotations

from treebound.graph_core.graph import Graph
from treebound.solvers.budget import UNLIMITED, Deadline
from treebound.solvers.coloring import chromatic_number, clique_number
from treebound.solvers.models import MEASURE_OF, ParameterName, ParameterValue
from treebound.solvers.stable_set import max_stable_set
from treebound.solvers.tree_parameter import tree_parameter, treewidth


def solve(graph: Graph, name: ParameterName | str, *, deadline: Deadline = UNLIMITED) -> ParameterValue:
    """Exact value of the named parameter on *graph*, with its witness."""
    name = ParameterName(name)
    if name is ParameterName.ALPHA:
        return max_stable_set(graph, deadline=deadline)
    if name is ParameterName.CHI:
        return chromatic_number(graph, deadline=deadline)
    if name is ParameterName.OMEGA:
        return clique_number(graph, deadline=deadline)
    if name is ParameterName.TW:
        return treewidth(graph, deadline=deadline)
    return tree_parameter(graph, MEASURE_OF[name], deadline=deadline)
