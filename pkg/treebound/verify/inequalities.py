"""
The inequality landscape on one graph.

Always true, and checked:

    tw + 1 <= tree-α² · tree-χ
    tree-tw + 1 <= tree-α · tree-χ
    tw + 1 <= α · tree-χ,   tw + 1 <= tree-α · χ,   χ <= tw + 1
    ω <= tree-χ <= χ,   tree-tw <= tw

Reported, not required: whether tw + 1 <= tree-α · tree-χ holds (a graph on
which it fails refutes the question), and the two sufficient conditions
α = tree-α or χ = tree-χ under which it must hold. On chordal graphs
tree-α = 1 and tree-tw + 1 = tree-χ = ω.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

from shared.models.reports import CheckResult
from treebound.constructions.completion import one_completion
from treebound.graph_core.builders import complete, cycle
from treebound.graph_core.graph import Graph
from treebound.graph_core.operations import is_chordal
from treebound.solvers.budget import Deadline
from treebound.solvers.coloring import chromatic_number, clique_number
from treebound.solvers.stable_set import max_stable_set
from treebound.solvers.tree_parameter import tree_parameter, treewidth
from treebound.treedec.measures import BagMeasure
from treebound.verify.registry import SuiteOptions, register_suite
from treebound.verify.runner import Outcome, register_instance, run_check
from treebound.verify.sampling import random_samples


def inequality_values(graph: Graph, deadline: Deadline) -> dict[str, Any]:
    tw = treewidth(graph, deadline=deadline).value
    alpha = max_stable_set(graph, deadline=deadline).value
    chi = chromatic_number(graph, deadline=deadline).value
    omega = clique_number(graph, deadline=deadline).value
    tree_alpha = tree_parameter(graph, BagMeasure.ALPHA, deadline=deadline).value
    tree_chi = tree_parameter(graph, BagMeasure.CHI, deadline=deadline).value
    tree_tw = tree_parameter(graph, BagMeasure.TW, deadline=deadline).value
    chordal = is_chordal(graph)
    question = tw + 1 <= tree_alpha * tree_chi
    positive = alpha == tree_alpha or chi == tree_chi
    return {
        "n": graph.n,
        "tw": tw,
        "alpha": alpha,
        "chi": chi,
        "omega": omega,
        "tree_alpha": tree_alpha,
        "tree_chi": tree_chi,
        "tree_tw": tree_tw,
        "chordal": chordal,
        "question_holds": question,
        "refutes_question": not question,
        "positive_criterion": positive,
        "quadratic_bound": tw + 1 <= tree_alpha**2 * tree_chi,
        "tree_tw_bound": tree_tw + 1 <= tree_alpha * tree_chi,
        "alpha_chain": tw + 1 <= alpha * tree_chi,
        "chi_chain": tw + 1 <= tree_alpha * chi,
        "chi_le_tw": chi <= tw + 1,
        "omega_chain": omega <= tree_chi <= chi,
        "tree_tw_le_tw": tree_tw <= tw,
        "chordal_tight": (not chordal) or (tree_alpha == 1 and tree_tw + 1 == tree_chi == omega),
    }


_REQUIRED = (
    "quadratic_bound",
    "tree_tw_bound",
    "alpha_chain",
    "chi_chain",
    "chi_le_tw",
    "omega_chain",
    "tree_tw_le_tw",
    "chordal_tight",
)


def inequalities_outcome(graph: Graph, deadline: Deadline, expected: dict[str, Any] | None = None) -> Outcome:
    register_instance(graph)
    values = inequality_values(graph, deadline)
    ok = all(values[key] for key in _REQUIRED)
    # the question can only fail where neither sufficient condition holds
    ok = ok and (values["question_holds"] or not values["positive_criterion"])
    for key, value in (expected or {}).items():
        ok = ok and values[key] == value
    return Outcome(ok=ok, values=values, graph=graph, keep_witness=values["refutes_question"])


def check_inequalities(
    graph: Graph,
    check_id: str = "inequalities/graph",
    *,
    expected: dict[str, Any] | None = None,
    budget_ms: int | None = None,
    witness_dir: Path | None = None,
) -> CheckResult:
    return run_check(
        check_id,
        lambda: inequalities_outcome(graph, Deadline.from_ms(budget_ms), expected),
        witness_dir=witness_dir,
    )


def check_random_inequalities(
    count: int = 200,
    max_n: int = 8,
    seed: int = 0,
    *,
    budget_ms: int | None = None,
    witness_dir: Path | None = None,
) -> list[CheckResult]:
    results = [
        check_inequalities(
            one_completion(cycle(5)).graph,
            "inequalities/C(C5)",
            expected={"tw": 4, "tree_chi": 2, "tree_alpha": 2, "refutes_question": True},
            budget_ms=budget_ms,
            witness_dir=witness_dir,
        ),
        check_inequalities(
            complete(4),
            "inequalities/K4",
            expected={"tree_tw": 3, "tree_alpha": 1, "tree_chi": 4, "chordal": True},
            budget_ms=budget_ms,
            witness_dir=witness_dir,
        ),
    ]
    for sample in random_samples(count, 1, max_n, seed + 2):
        results.append(check_inequalities(
            sample.graph,
            f"inequalities/sample={sample.index}",
            budget_ms=budget_ms,
            witness_dir=witness_dir,
        ))
    return results


@register_suite("inequalities")
def inequalities_suite(options: SuiteOptions) -> list[CheckResult]:
    return check_random_inequalities(
        options.random_graphs,
        options.random_max_n,
        options.seed,
        budget_ms=options.budget_ms,
        witness_dir=options.witness_dir,
    )
