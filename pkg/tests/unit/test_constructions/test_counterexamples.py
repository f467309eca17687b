from __future__ import annotations

import shutil

import pytest

from config import settings
from treebound.constructions.burling import burling
from treebound.constructions.counterexamples import (
    CounterexampleKind,
    blowup_burling,
    counterexample,
    counterexample_completion,
    pentagons,
)
from treebound.errors import DependencyError, InvalidParameterError
from treebound.solvers.stable_set import max_stable_set


@pytest.fixture
def weights_cache(tmp_path):
    target = tmp_path / "weights"
    shutil.copytree(settings.WEIGHTS_CACHE_DIR, target)
    return target


def test_pentagon_counterexamples() -> None:
    assert counterexample("pentagon", 1).n == 10
    assert counterexample(CounterexampleKind.PENTAGON, 2).n == 45
    assert pentagons(3).n == 15
    with pytest.raises(InvalidParameterError):
        pentagons(0)


def test_unknown_kind_is_rejected() -> None:
    with pytest.raises(ValueError):
        counterexample("hexagon", 1)


def test_blowup_sizes_follow_the_weighting(weights_cache) -> None:
    assert blowup_burling(1, weights_cache)[0].n == 1
    assert blowup_burling(2, weights_cache)[0].n == 3

    blown, projection = blowup_burling(3, weights_cache)
    assert blown.n == 16
    assert projection.target == burling(3).graph
    assert projection.is_valid()


def test_third_blowup_has_small_stable_sets(weights_cache) -> None:
    blown, _ = blowup_burling(3, weights_cache)

    assert max_stable_set(blown).value <= 8


def test_burling_completion_keeps_the_blowup(weights_cache) -> None:
    completion = counterexample_completion("burling_completion", 2, weights_cache)

    assert completion.base.n == 3
    assert completion.graph.n == 3 + len(completion.pairs)


def test_blowup_without_cached_weights(tmp_path) -> None:
    with pytest.raises(DependencyError):
        blowup_burling(2, tmp_path, allow_search=False)
