"""Text formats for graphs: Graphviz DOT export and a plain adjacency list."""

from typing import Optional, Sequence

from SRC.base.graph import Graph, iter_bits
from Utilities.GenericUtils.file_op_utils import read_text, write_text


def to_dot(graph: Graph, name: str = "G", labels: Optional[Sequence[str]] = None) -> str:
    lines = [f'graph "{name}" {{']
    for v in range(graph.n):
        label = labels[v] if labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(path: str, graph: Graph, name: str = "G", labels: Optional[Sequence[str]] = None) -> None:
    write_text(path, to_dot(graph, name, labels))


def to_adjacency_text(graph: Graph) -> str:
    """First line ``n loops_allowed``; then one line per vertex listing its neighbours."""
    lines = [f"{graph.n} {int(graph.loops_allowed)}"]
    lines += [" ".join(str(w) for w in iter_bits(row)) for row in graph.rows]
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ValueError("Empty adjacency text")
    header = lines[0].split()
    n = int(header[0])
    loops_allowed = len(header) > 1 and header[1] == "1"
    body = lines[1 : n + 1]
    body += [""] * (n - len(body))
    rows = []
    for line in body:
        row = 0
        for token in line.split():
            row |= 1 << int(token)
        rows.append(row)
    return Graph(n, rows, loops_allowed)


def read_adjacency(path: str) -> Graph:
    return from_adjacency_text(read_text(path))


def write_adjacency(path: str, graph: Graph) -> None:
    write_text(path, to_adjacency_text(graph))
