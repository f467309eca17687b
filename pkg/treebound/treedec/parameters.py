from __future__ import annotations

from typing import NamedTuple

from treebound.errors import PreconditionError
from treebound.solvers.budget import UNLIMITED, Deadline
from treebound.solvers.measures import BagEvaluator
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.measures import BagMeasure
from treebound.treedec.validation import validate


class BagParameter(NamedTuple):
    value: int
    node: int


def bag_values(
    decomposition: TreeDecomposition,
    measure: BagMeasure | str,
    *,
    deadline: Deadline = UNLIMITED,
) -> list[int]:
    """p(G[X_t]) for every node t, in node order."""
    report = validate(decomposition)
    if not report.is_valid:
        raise PreconditionError(f"decomposition is invalid: {report.violations[0].detail}")
    evaluate = BagEvaluator(decomposition.host, BagMeasure(measure), deadline)
    return [evaluate(mask) for mask in decomposition.bag_masks]


def bag_parameter(
    decomposition: TreeDecomposition,
    measure: BagMeasure | str,
    *,
    deadline: Deadline = UNLIMITED,
) -> BagParameter:
    """max over nodes of p(G[X_t]); the smallest maximising node id is reported.

    For the size measure this is the largest bag size (width + 1).
    """
    values = bag_values(decomposition, measure, deadline=deadline)
    best = max(values)
    return BagParameter(value=best, node=values.index(best))
