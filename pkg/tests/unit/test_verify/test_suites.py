from __future__ import annotations

import shutil

import pytest
from pydantic import ValidationError

from config import settings
from config.constants import SUITE_ORDER
from treebound.constructions.completion import one_completion
from treebound.errors import InvalidParameterError
from treebound.graph_core.builders import cycle, path
from treebound.verify.burling_checks import check_burling
from treebound.verify.completion_checks import check_completion_lemmas
from treebound.verify.crown_checks import check_crown
from treebound.verify.inequalities import check_inequalities, check_random_inequalities
from treebound.verify.refutation import check_refutation
from treebound.verify.registry import SUITE_REGISTRY, SuiteOptions, run_suites, suite_names
from treebound.verify.sampling import random_samples


@pytest.fixture
def weights_cache(tmp_path):
    target = tmp_path / "weights"
    shutil.copytree(settings.WEIGHTS_CACHE_DIR, target)
    return target


def _failures(results) -> list[str]:
    return [f"{result.id}: {result.values}" for result in results if not result.passed]


def test_samples_are_reproducible() -> None:
    first = [(s.graph, s.p) for s in random_samples(6, 2, 5, 11)]
    again = [(s.graph, s.p) for s in random_samples(6, 2, 5, 11)]

    assert first == again
    assert all(2 <= graph.n <= 5 for graph, _ in first)
    assert all(s.graph.num_edges > 0 for s in random_samples(6, 2, 3, 5, need_edges=True))


def test_registry_lists_every_suite() -> None:
    assert suite_names("all") == list(SUITE_ORDER)
    assert set(SUITE_ORDER) <= set(SUITE_REGISTRY)
    assert suite_names("crown") == ["crown"]
    with pytest.raises(InvalidParameterError):
        suite_names("lemmas")


def test_suite_options_ranges() -> None:
    with pytest.raises(ValidationError):
        SuiteOptions(max_n=7)
    with pytest.raises(ValidationError):
        SuiteOptions(burling_max=5)


def test_crown_suite(tmp_path) -> None:
    results = check_crown(range(2, 6), witness_dir=tmp_path)

    assert [result.id for result in results] == ["crown/n=2", "crown/n=3", "crown/n=4", "crown/n=5"]
    assert _failures(results) == []
    assert results[2].values["crown_nodes"] == 5


def test_completion_suite_small(tmp_path) -> None:
    results = check_completion_lemmas(max_n=5, samples=4, seed=3, chi_samples=3, witness_dir=tmp_path)

    assert len(results) == 3 + 4 + 3
    assert results[0].id == "completion/tree-chi/C5"
    assert _failures(results) == []


def test_burling_suite_small(tmp_path, weights_cache) -> None:
    results = check_burling(3, witness_dir=tmp_path / "witnesses", weights_cache_dir=weights_cache)

    assert _failures(results) == []
    by_id = {result.id: result for result in results}
    assert by_id["burling/blowup/k=3"].values["vertices"] == 16
    assert by_id["burling/tree-chi/k=3"].values["tree_chi"] == 2


def test_pentagon_completion_refutes(tmp_path) -> None:
    result = check_inequalities(one_completion(cycle(5)).graph, "inequalities/C(C5)", witness_dir=tmp_path)

    assert result.passed
    assert result.values["refutes_question"] is True
    assert (result.values["tw"], result.values["tree_alpha"], result.values["tree_chi"]) == (4, 2, 2)
    assert (tmp_path / "inequalities__C_C5_.gr").exists()


def test_chordal_graph_is_tight(tmp_path) -> None:
    result = check_inequalities(path(4), witness_dir=tmp_path)

    assert result.passed
    assert result.values["chordal"] is True
    assert result.values["question_holds"] is True
    assert result.witness_paths == []


def test_random_inequalities_small(tmp_path) -> None:
    results = check_random_inequalities(6, 6, seed=1, witness_dir=tmp_path)

    assert len(results) == 8
    assert _failures(results) == []


def test_refutation_suite(tmp_path, weights_cache) -> None:
    results = check_refutation(witness_dir=tmp_path / "witnesses", weights_cache_dir=weights_cache)

    assert _failures(results) == []
    refuting = {result.id for result in results if result.values["refutes_question"]}
    assert refuting == {
        "refutation/pentagon/k=1",
        "refutation/pentagon/k=2",
        "refutation/burling_completion/k=3",
    }
    assert all(result.witness_paths for result in results if result.id in refuting)


def test_run_suites_by_name(tmp_path) -> None:
    results = run_suites("crown", SuiteOptions(crown_max=3, witness_dir=tmp_path))

    assert [result.id for result in results] == ["crown/n=2", "crown/n=3"]
