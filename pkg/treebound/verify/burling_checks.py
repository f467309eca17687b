"""
Checks on the Burling sequence, its weightings and blowups.

For k = 4 the blowup H_4 has 320 vertices, out of reach of the exact
tree-χ solver; tree-χ(H_4) = 2 is then certified by the pullback of the
star-forest decomposition (every bag bipartite) and by H_4 having an edge
(some bag of any decomposition contains it).
"""
from __future__ import annotations

import math
from pathlib import Path

from config.constants import BURLING_FAMILY_SIZES, BURLING_VERTEX_COUNTS, weighting_bound, weighting_total
from shared.models.reports import CheckResult
from treebound.constructions.burling import (
    burling,
    burling_family_size,
    burling_star_forest_decomposition,
    burling_vertex_count,
)
from treebound.constructions.counterexamples import blowup_burling
from treebound.constructions.weighting import burling_weighting, verify_weighting
from treebound.solvers.budget import Deadline
from treebound.solvers.stable_set import max_stable_set
from treebound.solvers.tree_parameter import tree_parameter
from treebound.treedec.certificates import family_coverage, is_star_forest
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.pullback import pullback
from treebound.treedec.validation import validate
from treebound.verify.registry import SuiteOptions, register_suite
from treebound.verify.runner import Outcome, register_instance, run_check

EXACT_TREE_CHI_MAX_K = 3


def structure_outcome(n: int) -> Outcome:
    level = burling(n)
    register_instance(level.graph)
    vertices, members = level.graph.n, len(level.family)
    values = {
        "vertices": vertices,
        "family": members,
        "edges": level.graph.num_edges,
        "family_stable": level.family.all_stable(),
    }
    ok = (
        vertices == BURLING_VERTEX_COUNTS[n] == burling_vertex_count(n)
        and members == BURLING_FAMILY_SIZES[n] == burling_family_size(n) == weighting_bound(n)
        and values["family_stable"]
    )
    return Outcome(ok=ok, values=values, graph=level.graph)


def star_forest_outcome(n: int, deadline: Deadline) -> Outcome:
    level = burling(n)
    decomposition = burling_star_forest_decomposition(n)
    register_instance(level.graph, {"star-forest": decomposition})
    report = validate(decomposition)
    stars = sum(1 for bag in decomposition.bags if is_star_forest(level.graph, bag))
    uncovered = [i for i, node in enumerate(family_coverage(decomposition, level.family.members)) if node is None]
    chi = bag_parameter(decomposition, BagMeasure.CHI, deadline=deadline).value if report.is_valid else None
    values = {
        "nodes": decomposition.num_nodes,
        "valid": report.is_valid,
        "star_forest_bags": stars,
        "uncovered_members": uncovered,
        "chi_measure": chi,
    }
    ok = (
        report.is_valid
        and stars == decomposition.num_nodes
        and not uncovered
        and chi is not None
        and chi <= 2
    )
    return Outcome(ok=ok, values=values, graph=level.graph, decompositions={"star-forest": decomposition})


def weighting_outcome(k: int, cache_dir: Path | None) -> Outcome:
    graph = burling(k).graph
    register_instance(graph)
    weights = burling_weighting(k, cache_dir)
    bound, target = weighting_bound(k), weighting_total(k)
    ok, heaviest = verify_weighting(graph, weights, bound, target)
    values = {"total": weights.total, "target": target, "bound": bound, "max_stable_weight": heaviest}
    return Outcome(ok=ok, values=values, graph=graph)


def blowup_outcome(k: int, cache_dir: Path | None, deadline: Deadline) -> Outcome:
    level = burling(k)
    blown, projection = blowup_burling(k, cache_dir)
    register_instance(blown)
    weights = burling_weighting(k, cache_dir, allow_search=False)
    # a stable set of H_k projects onto a stable set of G_k, and classes are stable
    alpha = max_stable_set(level.graph, weights, deadline=deadline).value
    values: dict[str, object] = {
        "vertices": blown.n,
        "edges": blown.num_edges,
        "alpha": alpha,
        "projection_valid": projection.is_valid(),
    }
    ok = blown.n == weighting_total(k) and projection.is_valid() and alpha * (k + 1) <= 2 * blown.n
    if k <= EXACT_TREE_CHI_MAX_K:
        direct = max_stable_set(blown, deadline=deadline).value
        values["alpha_direct"] = direct
        ok = ok and direct == alpha
    if k >= 2:
        strict = 4 * blown.n / math.log2(math.log2(blown.n))
        values["alpha_strict_bound"] = round(strict, 6)
        ok = ok and alpha < strict
    return Outcome(ok=ok, values=values, graph=blown)


def tree_chi_outcome(k: int, cache_dir: Path | None, deadline: Deadline) -> Outcome:
    blown, projection = blowup_burling(k, cache_dir)
    pulled = pullback(burling_star_forest_decomposition(k), projection)
    register_instance(blown, {"pullback": pulled})
    upper = bag_parameter(pulled, BagMeasure.CHI, deadline=deadline).value
    lower = 2 if blown.num_edges else 1
    values: dict[str, object] = {"upper": upper, "lower": lower}
    ok = upper == lower
    decompositions = {"pullback": pulled}
    if k <= EXACT_TREE_CHI_MAX_K:
        exact = tree_parameter(blown, BagMeasure.CHI, deadline=deadline)
        values["tree_chi"] = exact.value
        decompositions["tree-chi"] = exact.witness
        ok = ok and exact.value == upper
    return Outcome(ok=ok, values=values, graph=blown, decompositions=decompositions)


def check_burling(
    n_max: int = 4,
    *,
    budget_ms: int | None = None,
    witness_dir: Path | None = None,
    weights_cache_dir: Path | None = None,
) -> list[CheckResult]:
    def deadline() -> Deadline:
        return Deadline.from_ms(budget_ms)

    results: list[CheckResult] = []
    for n in range(1, n_max + 1):
        results.append(run_check(f"burling/structure/n={n}", lambda n=n: structure_outcome(n), witness_dir=witness_dir))
        results.append(run_check(
            f"burling/star-forest/n={n}", lambda n=n: star_forest_outcome(n, deadline()), witness_dir=witness_dir
        ))
    for k in range(1, n_max + 1):
        results.append(run_check(
            f"burling/weighting/k={k}", lambda k=k: weighting_outcome(k, weights_cache_dir), witness_dir=witness_dir
        ))
        results.append(run_check(
            f"burling/blowup/k={k}",
            lambda k=k: blowup_outcome(k, weights_cache_dir, deadline()),
            witness_dir=witness_dir,
        ))
        results.append(run_check(
            f"burling/tree-chi/k={k}",
            lambda k=k: tree_chi_outcome(k, weights_cache_dir, deadline()),
            witness_dir=witness_dir,
        ))
    return results


@register_suite("burling")
def burling_suite(options: SuiteOptions) -> list[CheckResult]:
    return check_burling(
        options.burling_max,
        budget_ms=options.budget_ms,
        witness_dir=options.witness_dir,
        weights_cache_dir=options.weights_cache_dir,
    )
