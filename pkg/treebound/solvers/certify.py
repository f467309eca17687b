from __future__ import annotations

from treebound.graph_core.graph import Graph, WeightFunction
from treebound.graph_core.operations import is_clique, is_stable_set
from treebound.solvers.coloring import is_proper_coloring
from treebound.solvers.models import MEASURE_OF, ParameterName, ParameterValue
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.validation import validate


def certifies(result: ParameterValue, graph: Graph, weights: WeightFunction | None = None) -> bool:
    """Re-check that the witness of *result* achieves its value on *graph*."""
    witness = result.witness
    if result.name is ParameterName.ALPHA:
        if not isinstance(witness, frozenset) or not is_stable_set(graph, witness):
            return False
        achieved = weights.of(witness) if weights is not None else len(witness)
        return achieved == result.value
    if result.name is ParameterName.OMEGA:
        return isinstance(witness, frozenset) and is_clique(graph, witness) and len(witness) == result.value
    if result.name is ParameterName.CHI:
        if not isinstance(witness, tuple) or not is_proper_coloring(graph, witness):
            return False
        return len(set(witness)) == result.value
    if not isinstance(witness, TreeDecomposition) or witness.host != graph:
        return False
    if not validate(witness).is_valid:
        return False
    if result.name is ParameterName.TW:
        return witness.width == result.value
    return bag_parameter(witness, MEASURE_OF[result.name]).value == result.value
