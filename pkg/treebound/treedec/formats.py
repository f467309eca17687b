"""
PACE-style ``.td`` text format.

    s td <num_bags> <max_bag_size> <n>
    b <bag_id> <v ...>            (1-based ids and vertices, vertices ascending)
    <i> <j>                       (tree edges, 1-based, i < j, lexicographic)

Lines starting with ``c`` are comments.
"""
from __future__ import annotations

from pathlib import Path

from shared.utils.atomic import write_text_atomic
from treebound.errors import MalformedInputError
from treebound.graph_core.graph import Graph
from treebound.treedec.decomposition import TreeDecomposition


def write_decomposition(decomposition: TreeDecomposition) -> str:
    lines = [
        f"s td {decomposition.num_nodes} {decomposition.max_bag_size} {decomposition.host.n}"
    ]
    for node, bag in enumerate(decomposition.bags):
        members = " ".join(str(v + 1) for v in sorted(bag))
        lines.append(f"b {node + 1} {members}".rstrip())
    lines.extend(f"{a + 1} {b + 1}" for a, b in decomposition.edges)
    return "\n".join(lines) + "\n"


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise MalformedInputError(f"non-integer token in {' '.join(tokens)!r}", line=lineno) from None


def parse_decomposition(text: str, host: Graph) -> TreeDecomposition:
    header: tuple[int, int, int] | None = None
    bags: dict[int, list[int]] = {}
    edges: list[tuple[int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise MalformedInputError("duplicate solution line", line=lineno)
            if len(parts) != 5 or parts[1] != "td":
                raise MalformedInputError("header must read 's td <bags> <max_bag> <n>'", line=lineno)
            count, width, n = _ints(parts[2:], lineno)
            if n != host.n:
                raise MalformedInputError(f"decomposition is for {n} vertices, graph has {host.n}", line=lineno)
            header = (count, width, n)
            continue
        if header is None:
            raise MalformedInputError("content before the 's td' header", line=lineno)
        count = header[0]
        if parts[0] == "b":
            values = _ints(parts[1:], lineno)
            if not values:
                raise MalformedInputError("bag line without an id", line=lineno)
            node, members = values[0], values[1:]
            if not 1 <= node <= count:
                raise MalformedInputError(f"bag id {node} outside 1..{count}", line=lineno)
            if node in bags:
                raise MalformedInputError(f"bag {node} listed twice", line=lineno)
            for v in members:
                if not 1 <= v <= host.n:
                    raise MalformedInputError(f"bag {node} holds vertex {v} outside 1..{host.n}", line=lineno)
            bags[node] = [v - 1 for v in members]
            continue
        values = _ints(parts, lineno)
        if len(values) != 2:
            raise MalformedInputError("tree edge lines hold exactly two bag ids", line=lineno)
        a, b = values
        if not (1 <= a <= count and 1 <= b <= count):
            raise MalformedInputError(f"tree edge {a} {b} outside 1..{count}", line=lineno)
        edges.append((a - 1, b - 1))

    if header is None:
        raise MalformedInputError("missing 's td' header")
    count, width, _ = header
    if len(bags) != count:
        raise MalformedInputError(f"header announces {count} bags, found {len(bags)}")
    decomposition = TreeDecomposition.build(host, [bags[node] for node in range(1, count + 1)], edges)
    if decomposition.max_bag_size != width:
        raise MalformedInputError(
            f"header announces max bag size {width}, found {decomposition.max_bag_size}"
        )
    return decomposition


def read_decomposition_file(path: str | Path, host: Graph) -> TreeDecomposition:
    return parse_decomposition(Path(path).read_text(encoding="utf-8"), host)


def write_decomposition_file(path: str | Path, decomposition: TreeDecomposition) -> Path:
    return write_text_atomic(path, write_decomposition(decomposition))
