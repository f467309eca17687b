"""
Text formats for stable-set families and vertex weightings.

Family: one member per line, space-separated 1-based vertex indices.

Weights:

    c bound <B>
    c target <W>
    c graph <sha256 of the .gr text>
    <vertex> <weight>             (1-based vertex, one line per vertex)

Lines starting with ``c`` are comments; in a weights file the three header
comments above are read back.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from shared.utils.atomic import write_text_atomic
from treebound.errors import MalformedInputError
from treebound.graph_core.graph import Graph, VertexSet, WeightFunction


@dataclass(frozen=True)
class WeightsHeader:
    bound: int | None = None
    target: int | None = None
    graph_hash: str | None = None


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise MalformedInputError(f"non-integer token in {' '.join(tokens)!r}", line=lineno) from None


def write_family(members: tuple[VertexSet, ...] | list[VertexSet]) -> str:
    return "".join(" ".join(str(v + 1) for v in sorted(member)) + "\n" for member in members)


def parse_family(text: str, graph: Graph) -> list[VertexSet]:
    members: list[VertexSet] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        values = _ints(line.split(), lineno)
        for v in values:
            if not 1 <= v <= graph.n:
                raise MalformedInputError(f"vertex {v} outside 1..{graph.n}", line=lineno)
        members.append(frozenset(v - 1 for v in values))
    return members


def write_weights(weights: WeightFunction, header: WeightsHeader) -> str:
    lines = []
    if header.bound is not None:
        lines.append(f"c bound {header.bound}")
    if header.target is not None:
        lines.append(f"c target {header.target}")
    if header.graph_hash is not None:
        lines.append(f"c graph {header.graph_hash}")
    lines.extend(f"{v + 1} {weight}" for v, weight in enumerate(weights.values))
    return "\n".join(lines) + "\n"


def parse_weights(text: str, n: int) -> tuple[WeightFunction, WeightsHeader]:
    fields: dict[str, str] = {}
    values: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split()
            if len(parts) == 3 and parts[1] in ("bound", "target", "graph"):
                fields[parts[1]] = parts[2]
            continue
        pair = _ints(line.split(), lineno)
        if len(pair) != 2:
            raise MalformedInputError("weight lines hold '<vertex> <weight>'", line=lineno)
        v, weight = pair
        if not 1 <= v <= n:
            raise MalformedInputError(f"vertex {v} outside 1..{n}", line=lineno)
        if v - 1 in values:
            raise MalformedInputError(f"vertex {v} weighted twice", line=lineno)
        if weight < 0:
            raise MalformedInputError(f"negative weight {weight} for vertex {v}", line=lineno)
        values[v - 1] = weight
    if len(values) != n:
        raise MalformedInputError(f"expected a weight for each of {n} vertices, found {len(values)}")
    try:
        header = WeightsHeader(
            bound=int(fields["bound"]) if "bound" in fields else None,
            target=int(fields["target"]) if "target" in fields else None,
            graph_hash=fields.get("graph"),
        )
    except ValueError:
        raise MalformedInputError("bound/target header comments must be integers") from None
    return WeightFunction(tuple(values[v] for v in range(n))), header


def read_weights_file(path: str | Path, n: int) -> tuple[WeightFunction, WeightsHeader]:
    return parse_weights(Path(path).read_text(encoding="utf-8"), n)


def write_weights_file(path: str | Path, weights: WeightFunction, header: WeightsHeader) -> Path:
    return write_text_atomic(path, write_weights(weights, header))


def write_family_file(path: str | Path, members: tuple[VertexSet, ...] | list[VertexSet]) -> Path:
    return write_text_atomic(path, write_family(members))
