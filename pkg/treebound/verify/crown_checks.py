"""tree-α(C(K̄_n)) = n - 1, by the exact solver and by the crown decomposition."""
from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from shared.models.reports import CheckResult
from treebound.constructions.completion import crown_decomposition, one_completion
from treebound.graph_core.builders import empty
from treebound.solvers.budget import Deadline
from treebound.solvers.tree_parameter import tree_parameter
from treebound.treedec.measures import BagMeasure
from treebound.treedec.parameters import bag_parameter
from treebound.treedec.validation import validate
from treebound.verify.registry import SuiteOptions, register_suite
from treebound.verify.runner import Outcome, register_instance, run_check


def crown_outcome(n: int, deadline: Deadline) -> Outcome:
    graph = one_completion(empty(n)).graph
    register_instance(graph)
    exact = tree_parameter(graph, BagMeasure.ALPHA, deadline=deadline)
    values: dict[str, object] = {"n": n, "vertices": graph.n, "tree_alpha": exact.value}
    decompositions = {"tree-alpha": exact.witness}
    ok = exact.value == n - 1
    # n = 2 is the path P_3; the construction starts at n = 3
    if n >= 3:
        crown = crown_decomposition(n)
        crown_valid = validate(crown).is_valid
        crown_alpha = bag_parameter(crown, BagMeasure.ALPHA, deadline=deadline).value if crown_valid else None
        values["crown_alpha"] = crown_alpha
        values["crown_nodes"] = crown.num_nodes
        decompositions["crown"] = crown
        ok = ok and crown_valid and crown_alpha == n - 1
    return Outcome(ok=ok, values=values, graph=graph, decompositions=decompositions)


def check_crown(
    n_range: Iterable[int] = range(2, 7),
    *,
    budget_ms: int | None = None,
    witness_dir: Path | None = None,
) -> list[CheckResult]:
    return [
        run_check(
            f"crown/n={n}",
            lambda n=n: crown_outcome(n, Deadline.from_ms(budget_ms)),
            witness_dir=witness_dir,
        )
        for n in n_range
    ]


@register_suite("crown")
def crown_suite(options: SuiteOptions) -> list[CheckResult]:
    return check_crown(range(2, options.crown_max + 1), budget_ms=options.budget_ms, witness_dir=options.witness_dir)
