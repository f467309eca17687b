from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict

from treebound.treedec.measures import BagMeasure


class ParameterName(str, Enum):
    ALPHA = "alpha"
    CHI = "chi"
    OMEGA = "omega"
    TW = "tw"
    TREE_SIZE = "tree-size"
    TREE_ALPHA = "tree-alpha"
    TREE_CHI = "tree-chi"
    TREE_TW = "tree-tw"


TREE_PARAMETER_OF: dict[BagMeasure, ParameterName] = {
    BagMeasure.SIZE: ParameterName.TREE_SIZE,
    BagMeasure.ALPHA: ParameterName.TREE_ALPHA,
    BagMeasure.CHI: ParameterName.TREE_CHI,
    BagMeasure.TW: ParameterName.TREE_TW,
}

MEASURE_OF: dict[ParameterName, BagMeasure] = {name: measure for measure, name in TREE_PARAMETER_OF.items()}


class ParameterValue(BaseModel):
    """An exact parameter value with the witness that certifies it.

    Witness by name: a frozenset of vertices for alpha / omega, a colour per
    vertex for chi, a TreeDecomposition for tw and the tree-parameters.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: ParameterName
    value: int
    witness: Any = None
