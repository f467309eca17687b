from __future__ import annotations

import pytest

from treebound.errors import PreconditionError
from treebound.graph_core.builders import complete, cycle, path
from treebound.graph_core.graph import Homomorphism, WeightFunction
from treebound.graph_core.operations import blowup
from treebound.treedec.certificates import family_coverage, is_minor_model, is_star_forest
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter, bag_values
from treebound.treedec.pullback import pullback
from treebound.treedec.simplify import simplify
from treebound.treedec.validation import validate


def test_simplify_contracts_contained_bags() -> None:
    redundant = TreeDecomposition.build(path(3), [[0, 1], [1], [1, 2]], [(0, 1), (1, 2)])
    simplified = simplify(redundant)

    assert simplified.bags == (frozenset({0, 1}), frozenset({1, 2}))
    assert simplified.edges == ((0, 1),)
    assert validate(simplified).is_valid


def test_pullback_along_a_blowup() -> None:
    base = TreeDecomposition.build(path(3), [[0, 1], [1, 2]], [(0, 1)])
    blown, projection = blowup(path(3), WeightFunction((2, 1, 2)))
    pulled = pullback(base, projection)

    assert pulled.host == blown
    assert pulled.bags == (frozenset({0, 1, 2}), frozenset({2, 3, 4}))
    assert validate(pulled).is_valid
    assert bag_parameter(pulled, BagMeasure.CHI).value <= bag_parameter(base, BagMeasure.CHI).value


def test_pullback_rejects_a_non_homomorphism() -> None:
    square = cycle(4)
    collapse = Homomorphism(square, complete(2), (0, 0, 1, 1))

    with pytest.raises(PreconditionError, match="not a homomorphism"):
        pullback(TreeDecomposition.single_bag(complete(2)), collapse)


def test_pullback_rejects_an_invalid_decomposition() -> None:
    broken = TreeDecomposition.build(path(3), [[0], [1, 2]], [(0, 1)])

    with pytest.raises(PreconditionError, match="invalid"):
        pullback(broken, Homomorphism.identity(path(3)))


def test_bag_measures() -> None:
    decomposition = TreeDecomposition.build(cycle(4), [[0, 1, 2], [0, 2, 3]], [(0, 1)])

    assert bag_values(decomposition, BagMeasure.SIZE) == [3, 3]
    assert bag_values(decomposition, BagMeasure.ALPHA) == [2, 2]
    assert bag_parameter(decomposition, "chi") == (2, 0)
    assert bag_parameter(decomposition, BagMeasure.TW).value == 1
    assert BagMeasure.parse("ALPHA") is BagMeasure.ALPHA
    with pytest.raises(ValueError):
        BagMeasure.parse("omega")


def test_bag_parameter_requires_a_valid_decomposition() -> None:
    with pytest.raises(PreconditionError):
        bag_parameter(TreeDecomposition.build(path(3), [[0, 1]], []), BagMeasure.SIZE)


def test_star_forest_recognition() -> None:
    assert is_star_forest(path(1), [0])
    assert is_star_forest(path(3), range(3))
    assert not is_star_forest(path(4), range(4))
    assert not is_star_forest(cycle(3), range(3))
    assert is_star_forest(cycle(5), [0, 1, 3])


def test_family_coverage_reports_first_covering_node() -> None:
    decomposition = TreeDecomposition.build(path(3), [[0, 1], [1, 2]], [(0, 1)])

    assert family_coverage(decomposition, [[1], [1, 2], [0, 2]]) == [0, 1, None]


def test_minor_model_checks() -> None:
    assert is_minor_model(path(3), [[0, 1], [2]], complete(2))
    assert not is_minor_model(path(3), [[0], [2]], complete(2))
    assert not is_minor_model(path(3), [[0, 1], [1, 2]], complete(2))
    assert not is_minor_model(path(3), [[0, 2], [1]], complete(2))
    assert not is_minor_model(path(3), [[0]], complete(2))
