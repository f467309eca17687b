"""
Finite instances C(H) of the refutation, certified without the exact solvers.

    tw(C(H)) = |V(H)| - 1      K_n minor model (lower) and star decomposition (upper)
    tree-α(C(H)) <= max(α(H), 2)   alpha measure of the star decomposition
    tree-χ(C(H)) = 2           lifted decomposition of a chi <= 2 decomposition of H
                               (upper), an edge of C(H) (lower)

H = k·C_5 takes its decomposition from the exact tree-χ solver; H = H_k
takes the pullback of the star-forest decomposition of G_k. The instance
refutes tw + 1 <= tree-α · tree-χ when |V(H)| > 2 · max(α(H), 2).
"""
from __future__ import annotations

from pathlib import Path

from shared.models.reports import CheckResult
from treebound.constructions.burling import burling_star_forest_decomposition
from treebound.constructions.completion import (
    complete_minor_model,
    completion_lift_decomposition,
    completion_star_decomposition,
    one_completion,
)
from treebound.constructions.counterexamples import blowup_burling, pentagons
from treebound.graph_core.graph import Graph
from treebound.solvers.budget import Deadline
from treebound.solvers.stable_set import max_stable_set
from treebound.solvers.tree_parameter import tree_parameter
from treebound.treedec.certificates import is_minor_model
from treebound.treedec.decomposition import TreeDecomposition
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.pullback import pullback
from treebound.verify.registry import SuiteOptions, register_suite
from treebound.verify.runner import Outcome, register_decomposition, register_instance, run_check

PENTAGON_COUNTS = (1, 2)
BURLING_LEVELS = (2, 3)


def certified_outcome(
    base: Graph,
    base_decomposition: TreeDecomposition,
    deadline: Deadline,
    *,
    expect_refutation: bool | None = None,
) -> Outcome:
    completion = one_completion(base)
    graph = completion.graph
    n = base.n
    register_instance(graph)

    branches, target = complete_minor_model(completion)
    minor_ok = is_minor_model(graph, branches, target)
    star = completion_star_decomposition(base, completion)
    register_decomposition("star", star)
    alpha = max_stable_set(base, deadline=deadline).value
    star_alpha = bag_parameter(star, BagMeasure.ALPHA, deadline=deadline).value

    base_chi = bag_parameter(base_decomposition, BagMeasure.CHI, deadline=deadline).value
    lifted = completion_lift_decomposition(base, base_decomposition, completion)
    register_decomposition("lift", lifted)
    lift_chi = bag_parameter(lifted, BagMeasure.CHI, deadline=deadline).value
    tree_chi_lower = 2 if graph.num_edges else 1

    tree_alpha_upper = star_alpha
    product_upper = tree_alpha_upper * lift_chi
    refutes = n > product_upper
    values = {
        "base_vertices": n,
        "vertices": graph.n,
        "tw": n - 1,
        "tw_certified": minor_ok and star.width == n - 1,
        "alpha_base": alpha,
        "tree_alpha_lower": alpha - 1,
        "tree_alpha_upper": tree_alpha_upper,
        "tree_chi_base_decomposition": base_chi,
        "tree_chi_upper": lift_chi,
        "tree_chi_lower": tree_chi_lower,
        "product_upper": product_upper,
        "refutes_question": refutes,
    }
    ok = (
        values["tw_certified"]
        and star_alpha == max(alpha, 2)
        and lift_chi == tree_chi_lower == 2
        and (expect_refutation is None or refutes == expect_refutation)
    )
    return Outcome(
        ok=ok,
        values=values,
        graph=graph,
        decompositions={"star": star, "lift": lifted},
        keep_witness=refutes,
    )


def pentagon_outcome(k: int, deadline: Deadline) -> Outcome:
    base = pentagons(k)
    decomposition = tree_parameter(base, BagMeasure.CHI, deadline=deadline).witness
    return certified_outcome(base, decomposition, deadline, expect_refutation=True)


def burling_completion_outcome(k: int, cache_dir: Path | None, deadline: Deadline) -> Outcome:
    base, projection = blowup_burling(k, cache_dir)
    decomposition = pullback(burling_star_forest_decomposition(k), projection)
    return certified_outcome(base, decomposition, deadline)


def check_refutation(
    seed: int = 0,
    *,
    budget_ms: int | None = None,
    witness_dir: Path | None = None,
    weights_cache_dir: Path | None = None,
) -> list[CheckResult]:
    """The instances are fixed; *seed* is accepted for a uniform suite signature."""

    def deadline() -> Deadline:
        return Deadline.from_ms(budget_ms)

    results = [
        run_check(f"refutation/pentagon/k={k}", lambda k=k: pentagon_outcome(k, deadline()), witness_dir=witness_dir)
        for k in PENTAGON_COUNTS
    ]
    results.extend(
        run_check(
            f"refutation/burling_completion/k={k}",
            lambda k=k: burling_completion_outcome(k, weights_cache_dir, deadline()),
            witness_dir=witness_dir,
        )
        for k in BURLING_LEVELS
    )
    return results


@register_suite("refutation")
def refutation_suite(options: SuiteOptions) -> list[CheckResult]:
    return check_refutation(
        options.seed,
        budget_ms=options.budget_ms,
        witness_dir=options.witness_dir,
        weights_cache_dir=options.weights_cache_dir,
    )
