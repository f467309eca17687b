"""
Validated options of one CLI invocation.

argparse handles the grammar; ``CommandConfig`` checks what argparse cannot
(input files exist, numeric options within their guards) before any work
starts. A validation error is a usage error.
"""
from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config import settings
from config.constants import DEFAULT_SEED
from shared.utils.logging import resolve_level

Command = Literal["gen", "solve", "validate", "weights", "verify"]


class CommandConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    subject: str | None = None
    input: Path | None = None
    output: Path | None = None
    graph: Path | None = None
    decomposition: Path | None = None
    decomposition_out: Path | None = None
    family_out: Path | None = None
    weights_out: Path | None = None
    witness: Path | None = None
    witness_dir: Path | None = None
    weights_cache_dir: Path | None = None
    param: str | None = None
    kind: str | None = None
    n: int | None = Field(default=None, ge=1)
    k: int | None = Field(default=None, ge=1)
    bound: int | None = Field(default=None, ge=1)
    target: int | None = Field(default=None, ge=1)
    seed: int = DEFAULT_SEED
    max_n: int | None = Field(default=None, ge=3, le=6)
    samples: int | None = Field(default=None, ge=0)
    chi_samples: int | None = Field(default=None, ge=0)
    budget_ms: int | None = Field(default=None, ge=1)
    deterministic: bool = False
    log_level: str = settings.LOG_LEVEL

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        resolve_level(value)
        return value.upper()

    @model_validator(mode="after")
    def _inputs_exist(self) -> "CommandConfig":
        for name in ("input", "graph", "decomposition"):
            path = getattr(self, name)
            if path is not None and not path.is_file():
                raise ValueError(f"{name} file not found: {path}")
        return self

    @model_validator(mode="after")
    def _within_guards(self) -> "CommandConfig":
        if self.k is not None and self.subject in ("burling", "blowup") and self.k > settings.BURLING_N_MAX:
            raise ValueError(f"-k must be at most {settings.BURLING_N_MAX} for {self.subject}")
        if self.n is not None and self.subject == "burling" and self.n > settings.BURLING_N_MAX:
            raise ValueError(f"-n must be at most {settings.BURLING_N_MAX} for burling")
        return self
