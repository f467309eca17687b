from __future__ import annotations

import time

from treebound.errors import BudgetExceededError


class Deadline:
    """Wall-clock budget shared by nested solver calls; ``None`` means unlimited."""

    def __init__(self, seconds: float | None = None) -> None:
        self._expires = None if seconds is None else time.monotonic() + seconds
        self._seconds = seconds

    @classmethod
    def from_ms(cls, ms: int | None) -> "Deadline":
        return cls(None if ms is None else ms / 1000.0)

    @property
    def unlimited(self) -> bool:
        return self._expires is None

    def remaining(self) -> float | None:
        if self._expires is None:
            return None
        return max(0.0, self._expires - time.monotonic())

    def check(self, where: str) -> None:
        if self._expires is not None and time.monotonic() > self._expires:
            raise BudgetExceededError(f"time budget of {self._seconds}s exceeded in {where}", limit=self._seconds)


UNLIMITED = Deadline()


def enforce_guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise BudgetExceededError(f"{what}: {n} vertices exceeds the guard of {limit}", limit=limit, actual=n)
