"""Human-facing panels for the CLI; they go to stderr, values and reports to stdout."""
from __future__ import annotations

from typing import Any

from shared.models.reports import SuiteSummary
from shared.utils.terminal_ui import Ansi, print_panel
from treebound.treedec.validation import ValidationReport


def print_verify_summary(summary: SuiteSummary) -> None:
    rows: list[tuple[str, Any]] = [
        ("Suite", summary.suite),
        ("Seed", summary.seed),
        ("Passed", f"{summary.passed}/{summary.total}"),
    ]
    if summary.failed:
        rows.append(("Failed", ", ".join(summary.failed)))
    if summary.budget_exceeded:
        rows.append(("Budget exceeded", ", ".join(summary.budget_exceeded)))
    all_passed = summary.passed == summary.total
    print_panel("Verify", rows, Ansi.GREEN if all_passed else Ansi.RED)


def print_validation(report: ValidationReport, measure: str | None = None, value: int | None = None) -> None:
    rows: list[tuple[str, Any]] = [
        ("Nodes", report.num_nodes),
        ("Valid", "yes" if report.is_valid else "no"),
    ]
    for violation in report.violations[:10]:
        rows.append((violation.axiom, violation.detail))
    if len(report.violations) > 10:
        rows.append(("More", f"{len(report.violations) - 10} further violations"))
    if measure is not None and value is not None:
        rows.append((f"{measure} measure", value))
    print_panel("Validation", rows, Ansi.GREEN if report.is_valid else Ansi.RED)


def print_weight_search(status: str, iterations: int, cuts: int, max_stable: int | None) -> None:
    rows: list[tuple[str, Any]] = [
        ("Status", status),
        ("Iterations", iterations),
        ("Cuts", cuts),
    ]
    if max_stable is not None:
        rows.append(("Max stable weight", max_stable))
    print_panel("Weight search", rows, Ansi.GREEN if status == "found" else Ansi.YELLOW)
