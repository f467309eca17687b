"""
Summary panels for the ``treebound`` CLI and maintenance scripts.

Panels go to stderr so that stdout stays machine-readable (solver values,
JSON-lines reports). Labels are aligned in one column; long values wrap
under their own column.
"""
from __future__ import annotations

import shutil
import sys
import textwrap
from collections.abc import Sequence
from typing import Any, TextIO

from shared.utils.env import env_flag

MIN_WIDTH = 40
MAX_WIDTH = 120


class Ansi:
    RESET = "\033[0m"
    BOLD = "\033[1m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    RED = "\033[31m"


def color_enabled(stream: TextIO | None = None) -> bool:
    """TREEBOUND_FORCE_COLOR wins; otherwise colour only a terminal."""
    force = env_flag("TREEBOUND_FORCE_COLOR", default=None)
    if force is not None:
        return force
    target = stream if stream is not None else sys.stderr
    return bool(getattr(target, "isatty", lambda: False)())


def panel_width() -> int:
    columns = shutil.get_terminal_size((100, 20)).columns
    return max(MIN_WIDTH, min(columns, MAX_WIDTH))


def panel_lines(title: str, rows: Sequence[tuple[str, Any]], width: int) -> list[str]:
    """Boxed ``label  value`` rows; the result carries no colour codes."""
    label_w = max((len(label) for label, _ in rows), default=0)
    value_w = max(12, width - label_w - 6)

    body: list[str] = []
    for label, value in rows:
        chunks = textwrap.wrap(str(value), width=value_w) or [""]
        body.append(f"{label.ljust(label_w)}  {chunks[0]}")
        body.extend(f"{'':{label_w}}  {chunk}" for chunk in chunks[1:])

    inner = max([len(title) + 2, 30, *(len(line) for line in body)])
    inner = min(inner, width - 2)
    head = f" {title} "
    lines = [f"╭─{head}{'─' * max(0, inner - len(head))}╮"]
    lines.extend(f"│ {line.ljust(inner)}│" for line in body)
    lines.append(f"╰{'─' * (inner + 1)}╯")
    return lines


def print_panel(
    title: str,
    rows: Sequence[tuple[str, Any]],
    color_code: str,
    *,
    stream: TextIO | None = None,
) -> None:
    target = stream if stream is not None else sys.stderr
    lines = panel_lines(title, rows, panel_width())
    if color_enabled(target):
        lines = [f"{color_code}{line}{Ansi.RESET}" for line in lines]
    target.write("\n" + "\n".join(lines) + "\n")
