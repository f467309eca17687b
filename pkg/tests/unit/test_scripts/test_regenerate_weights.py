from __future__ import annotations

from config.constants import weighting_total
from scripts.regenerate_weights import regenerate
from treebound.constructions.burling import burling
from treebound.constructions.formats import read_weights_file
from treebound.constructions.weighting import weights_cache_path


def test_regenerate_fills_an_empty_cache(tmp_path) -> None:
    assert regenerate([1, 2], tmp_path, force=False, budget_seconds=None) == 0

    for k in (1, 2):
        weights, header = read_weights_file(weights_cache_path(k, tmp_path), burling(k).graph.n)
        assert weights.total == header.target == weighting_total(k)


def test_force_replaces_a_corrupt_file(tmp_path) -> None:
    path = weights_cache_path(2, tmp_path)
    path.write_text("not a weights file\n")

    assert regenerate([2], tmp_path, force=True, budget_seconds=None) == 0
    assert read_weights_file(path, 3)[0].total == 3
