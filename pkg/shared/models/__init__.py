from shared.models.reports import CheckResult, CheckStatus, SuiteSummary

__all__ = [
    "CheckResult",
    "CheckStatus",
    "SuiteSummary",
]
