from __future__ import annotations

import json

from shared.models.reports import CheckResult, SuiteSummary
from treebound.errors import BudgetExceededError, DomainError, PreconditionError
from treebound.graph_core.builders import cycle, path
from treebound.treedec.decomposition import TreeDecomposition
from treebound.verify import inequalities
from treebound.verify.inequalities import check_inequalities
from treebound.verify.runner import (
    Outcome,
    register_decomposition,
    register_instance,
    render_report,
    run_check,
    witness_stem,
    write_report,
)


def _failing_outcome() -> Outcome:
    graph = path(3)
    return Outcome(
        ok=False,
        values={"expected": 1, "found": 2},
        graph=graph,
        decompositions={"star": TreeDecomposition.single_bag(graph)},
    )


def test_witness_stem_is_filesystem_safe() -> None:
    assert witness_stem("crown/n=3") == "crown__n_3"
    assert witness_stem("inequalities/C(C5)") == "inequalities__C_C5_"


def test_passing_check_writes_no_witness(tmp_path) -> None:
    result = run_check("demo/pass", lambda: Outcome(ok=True, values={"x": 1}, graph=path(2)), witness_dir=tmp_path)

    assert result.status == "pass"
    assert result.values == {"x": 1}
    assert result.witness_paths == []
    assert list(tmp_path.iterdir()) == []


def test_failing_check_writes_graph_and_decompositions(tmp_path) -> None:
    result = run_check("demo/fail", _failing_outcome, witness_dir=tmp_path)

    assert result.status == "fail"
    assert sorted(p.rsplit("/", 1)[-1] for p in result.witness_paths) == ["demo__fail.gr", "demo__fail.star.td"]
    assert (tmp_path / "demo__fail.gr").read_text().startswith("p tw 3 2\n")


def test_kept_witness_on_a_passing_check(tmp_path) -> None:
    result = run_check(
        "demo/keep",
        lambda: Outcome(ok=True, values={}, graph=path(2), keep_witness=True),
        witness_dir=tmp_path,
    )

    assert result.passed
    assert (tmp_path / "demo__keep.gr").exists()


def test_errors_become_statuses(tmp_path) -> None:
    def over_budget() -> Outcome:
        raise BudgetExceededError("too big", limit=30, actual=40)

    def out_of_domain() -> Outcome:
        raise DomainError("n must be >= 3")

    budget = run_check("demo/budget", over_budget, witness_dir=tmp_path)
    assert budget.status == "budget-exceeded"
    assert budget.values == {"error": "too big", "limit": 30}

    failed = run_check("demo/domain", out_of_domain, witness_dir=tmp_path)
    assert failed.status == "fail"
    assert failed.values["error"] == "DomainError: n must be >= 3"


def test_deterministic_report_zeroes_timings(tmp_path) -> None:
    results = [
        CheckResult(id="a", status="pass", values={"v": 1}, ms=12.5),
        CheckResult(id="b", status="fail", ms=3.0),
    ]
    lines = render_report(results, deterministic=True).splitlines()

    assert [json.loads(line)["ms"] for line in lines] == [0.0, 0.0]
    assert json.loads(lines[0]) == {"id": "a", "status": "pass", "values": {"v": 1}, "witness_paths": [], "ms": 0.0}
    assert json.loads(render_report(results).splitlines()[0])["ms"] == 12.5

    target = write_report(tmp_path / "report.jsonl", results, deterministic=True)
    assert target.read_text() == render_report(results, deterministic=True)


def test_summary_counts_statuses() -> None:
    results = [
        CheckResult(id="a", status="pass"),
        CheckResult(id="b", status="fail"),
        CheckResult(id="c", status="budget-exceeded"),
    ]
    summary = SuiteSummary.from_results("all", 0, results)

    assert (summary.total, summary.passed) == (3, 1)
    assert summary.failed == ["b"]
    assert summary.budget_exceeded == ["c"]


def test_error_after_registration_still_writes_the_instance(tmp_path) -> None:
    def body() -> Outcome:
        graph = path(3)
        register_instance(graph)
        register_decomposition("single", TreeDecomposition.single_bag(graph))
        raise PreconditionError("decomposition does not cover the graph")

    result = run_check("demo/raised", body, witness_dir=tmp_path)

    assert result.status == "fail"
    assert result.values["error"].startswith("PreconditionError")
    assert (tmp_path / "demo__raised.gr").read_text().startswith("p tw 3 2\n")
    assert (tmp_path / "demo__raised.single.td").exists()
    assert len(result.witness_paths) == 2


def test_registration_outside_a_check_is_ignored(tmp_path) -> None:
    register_instance(path(2))
    result = run_check("demo/clean", lambda: Outcome(ok=False, values={}), witness_dir=tmp_path)

    assert result.status == "fail"
    assert result.witness_paths == []


def test_solver_error_in_a_suite_check_keeps_the_graph(tmp_path, monkeypatch) -> None:
    def broken_treewidth(graph, *, deadline):
        raise PreconditionError("solver rejected the instance")

    monkeypatch.setattr(inequalities, "treewidth", broken_treewidth)
    result = check_inequalities(cycle(5), "inequalities/C5", witness_dir=tmp_path)

    assert result.status == "fail"
    assert result.witness_paths == [str(tmp_path / "inequalities__C5.gr")]
    assert (tmp_path / "inequalities__C5.gr").read_text().startswith("p tw 5 5\n")
