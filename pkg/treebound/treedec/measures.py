from __future__ import annotations

from enum import Enum


class BagMeasure(str, Enum):
    """Parameter p applied to each bag-induced subgraph G[X_t]."""

    SIZE = "size"
    ALPHA = "alpha"
    CHI = "chi"
    TW = "tw"

    @classmethod
    def parse(cls, name: str) -> "BagMeasure":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown bag measure {name!r}; expected one of "
                             f"{', '.join(m.value for m in cls)}") from None
