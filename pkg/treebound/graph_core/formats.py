"""
PACE-style ``.gr`` text format.

    p tw <n> <m>
    c label <index> <string>      (one per vertex, 1-based index)
    <u> <v>                       (m lines, 1-based, u < v, lexicographic)

The writer is canonical, so ``write_graph(parse_graph(text)) == text`` for
any text it produced.
"""
from __future__ import annotations

from pathlib import Path

from shared.utils.atomic import write_text_atomic
from treebound.errors import InvalidParameterError, MalformedInputError
from treebound.graph_core.graph import Graph


def write_graph(graph: Graph) -> str:
    lines = [f"p tw {graph.n} {graph.num_edges}"]
    lines.extend(f"c label {v + 1} {label}" for v, label in enumerate(graph.labels))
    lines.extend(f"{u + 1} {v + 1}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def _int_token(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedInputError(f"{what} {token!r} is not an integer", line=lineno) from None


def _vertex_names(labels: dict[int, str], n: int) -> list[str]:
    """Explicit labels first; an unlabeled vertex v is named str(v), primed until it is free."""
    taken = set(labels.values())
    names = []
    for v in range(n):
        name = labels.get(v + 1)
        if name is None:
            name = str(v)
            while name in taken:
                name += "'"
            taken.add(name)
        names.append(name)
    return names


def parse_graph(text: str) -> Graph:
    n: int | None = None
    m = 0
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            parts = line.split(maxsplit=3)
            if len(parts) >= 3 and parts[0] == "c" and parts[1] == "label":
                index = _int_token(parts[2], lineno, "label index")
                labels[index] = parts[3] if len(parts) == 4 else ""
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise MalformedInputError("duplicate header", line=lineno)
            if len(parts) != 4 or parts[1] != "tw":
                raise MalformedInputError("header must read 'p tw <n> <m>'", line=lineno)
            n = _int_token(parts[2], lineno, "vertex count")
            m = _int_token(parts[3], lineno, "edge count")
            if n < 0 or m < 0:
                raise MalformedInputError("negative counts in header", line=lineno)
            continue
        if n is None:
            raise MalformedInputError("edge line before the 'p tw' header", line=lineno)
        if len(parts) != 2:
            raise MalformedInputError("edge lines hold exactly two vertex indices", line=lineno)
        u, v = (_int_token(token, lineno, "vertex") for token in parts)
        if not (1 <= u <= n and 1 <= v <= n):
            raise MalformedInputError(f"edge {u} {v} outside 1..{n}", line=lineno)
        if u == v:
            raise MalformedInputError(f"self-loop at {u}", line=lineno)
        key = (min(u, v) - 1, max(u, v) - 1)
        if key in seen:
            raise MalformedInputError(f"duplicate edge {u} {v}", line=lineno)
        seen.add(key)
        edges.append(key)

    if n is None:
        raise MalformedInputError("missing 'p tw <n> <m>' header")
    if len(edges) != m:
        raise MalformedInputError(f"header announces {m} edges, found {len(edges)}")
    for index in labels:
        if not 1 <= index <= n:
            raise MalformedInputError(f"label for vertex {index} outside 1..{n}")
    names = _vertex_names(labels, n)
    try:
        return Graph.from_edges(names, edges)
    except InvalidParameterError as exc:
        raise MalformedInputError(str(exc)) from exc


def read_graph_file(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph_file(path: str | Path, graph: Graph) -> Path:
    return write_text_atomic(path, write_graph(graph))
