"""Runnable checks for every construction and inequality, reported as JSON lines."""
from treebound.verify.registry import SUITE_REGISTRY, SuiteOptions, register_suite, run_suites
from treebound.verify.runner import Outcome, register_instance, render_report, run_check, write_report

__all__ = [
    "SUITE_REGISTRY",
    "Outcome",
    "register_instance",
    "SuiteOptions",
    "register_suite",
    "render_report",
    "run_check",
    "run_suites",
    "write_report",
]
