"""Graph file formats.

Edge-list text::

    n 5
    # comment
    0 1 1.0
    1 2          # weight defaults to 1.0

JSON: ``{"n": 5, "edges": [[0, 1, 1.0], [1, 2, 1.0]]}``. Nodes are 0-based.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphFormatError
from .graph import WeightedGraph, build_graph


def parse_edge_list(text: str) -> WeightedGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: malformed or repeated header")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad node count {parts[1]!r}") from None
            continue
        if n is None:
            raise GraphFormatError(f"line {lineno}: edge before 'n <count>' header")
        if len(parts) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected 'i j [w]', got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-numeric field in {line!r}") from None
        edges.append((i, j, w))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return build_graph(n, edges)


def format_edge_list(g: WeightedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{i} {j} {w!r}" for i, j, w in g.edges]
    return "\n".join(lines) + "\n"


def parse_json_graph(text: str) -> WeightedGraph:
    try:
        data = json.loads(text)
        return build_graph(data["n"], data["edges"])
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"invalid JSON graph: {exc}") from None


def format_json_graph(g: WeightedGraph) -> str:
    return json.dumps(g.to_dict()) + "\n"


def load_graph(path: str | Path) -> WeightedGraph:
    """Read a graph, choosing the format from the first non-blank character."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_json_graph(text)
    return parse_edge_list(text)


def save_graph(g: WeightedGraph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "edges"
    path.write_text(format_json_graph(g) if fmt == "json" else format_edge_list(g))
