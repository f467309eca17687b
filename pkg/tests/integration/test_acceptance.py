"""
End-to-end runs of the verification suites at full size.

These take minutes rather than seconds; select them with
``pytest tests/integration``.
"""
from __future__ import annotations

import json
import shutil

import pytest

from config import settings
from config.constants import weighting_bound, weighting_total
from treebound.cli.main import run
from treebound.constructions.burling import burling, burling_star_forest_decomposition
from treebound.constructions.completion import one_completion
from treebound.constructions.counterexamples import blowup_burling
from treebound.constructions.weighting import burling_weighting, find_weighting, verify_weighting
from treebound.graph_core.builders import cycle
from treebound.solvers.brute_force import brute_force_tree_parameter
from treebound.solvers.tree_parameter import tree_parameter, treewidth
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.pullback import pullback
from treebound.verify.burling_checks import check_burling
from treebound.verify.completion_checks import check_completion_lemmas
from treebound.verify.crown_checks import check_crown
from treebound.verify.inequalities import check_random_inequalities
from treebound.verify.refutation import check_refutation
from treebound.verify.sampling import random_samples


@pytest.fixture
def weights_cache(tmp_path):
    target = tmp_path / "weights"
    shutil.copytree(settings.WEIGHTS_CACHE_DIR, target)
    return target


def _failures(results) -> list[str]:
    return [f"{result.id}: {result.values}" for result in results if not result.passed]


def test_pentagon_completion_breaks_the_product_bound() -> None:
    graph = one_completion(cycle(5)).graph
    tw = treewidth(graph).value
    tree_chi = tree_parameter(graph, BagMeasure.CHI).value
    tree_alpha = tree_parameter(graph, BagMeasure.ALPHA).value

    assert (tw, tree_chi, tree_alpha) == (4, 2, 2)
    assert tw + 1 > tree_alpha * tree_chi


def test_crowns_two_to_six(tmp_path) -> None:
    results = check_crown(range(2, 7), witness_dir=tmp_path)

    assert _failures(results) == []
    assert [result.values["tree_alpha"] for result in results] == [1, 2, 3, 4, 5]


def test_completion_lemmas_on_seeded_samples(tmp_path) -> None:
    results = check_completion_lemmas(6, 50, 0, chi_samples=30, witness_dir=tmp_path)

    assert len(results) == 83
    assert _failures(results) == []


def test_burling_levels_up_to_four(tmp_path, weights_cache) -> None:
    results = check_burling(4, witness_dir=tmp_path / "witnesses", weights_cache_dir=weights_cache)

    assert _failures(results) == []


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fresh_weight_search(k: int) -> None:
    graph = burling(k).graph
    result = find_weighting(graph, weighting_bound(k), weighting_total(k))

    assert result.found
    assert verify_weighting(graph, result.weights, weighting_bound(k), weighting_total(k))[0]


def test_cached_fourth_weighting_verifies(weights_cache) -> None:
    weights = burling_weighting(4, weights_cache, allow_search=False)

    assert verify_weighting(burling(4).graph, weights, 128, 320) == (True, 128)


def test_blowup_sizes_and_tree_chi(weights_cache) -> None:
    sizes = [blowup_burling(k, weights_cache)[0].n for k in (1, 2, 3, 4)]
    assert sizes == [1, 3, 16, 320]

    third, _ = blowup_burling(3, weights_cache)
    assert tree_parameter(third, BagMeasure.CHI).value == 2

    fourth, projection = blowup_burling(4, weights_cache)
    pulled = pullback(burling_star_forest_decomposition(4), projection)
    assert bag_parameter(pulled, BagMeasure.CHI).value == 2
    assert fourth.num_edges > 0


def test_inequalities_on_two_hundred_graphs(tmp_path) -> None:
    results = check_random_inequalities(200, 8, 0, witness_dir=tmp_path)

    assert _failures(results) == []


def test_refutation_instances(tmp_path, weights_cache) -> None:
    results = check_refutation(witness_dir=tmp_path / "witnesses", weights_cache_dir=weights_cache)

    assert _failures(results) == []


def test_block_program_against_brute_force_on_seeded_graphs() -> None:
    mismatches = []
    for sample in random_samples(100, 1, 7, 9):
        for measure in (BagMeasure.ALPHA, BagMeasure.CHI, BagMeasure.SIZE):
            exact = tree_parameter(sample.graph, measure).value
            oracle = brute_force_tree_parameter(sample.graph, measure).value
            if exact != oracle:
                mismatches.append((sample.index, measure.value, exact, oracle))

    assert mismatches == []


def test_cli_verify_is_deterministic(tmp_path, weights_cache, capsys) -> None:
    reports = []
    for name in ("first", "second"):
        report = tmp_path / f"{name}.jsonl"
        argv = [
            "verify", "--suite", "refutation", "--seed", "0", "--deterministic",
            "--witness-dir", str(tmp_path / name), "--weights-cache-dir", str(weights_cache), "-o", str(report),
        ]
        assert run(argv) == 0
        reports.append([json.loads(line) for line in report.read_text().splitlines()])

    strip = [[{k: v for k, v in line.items() if k != "witness_paths"} for line in lines] for lines in reports]
    assert strip[0] == strip[1]
