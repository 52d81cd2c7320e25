"""Canonical JSON graph files.

Oriented::

    {"kind":"oriented","m":M,"n":N,"arcs":[[a,b,"AtoB"|"BtoA"],...]}

Colored::

    {"kind":"colored","m":M,"n":N,"edges":[[a,b,c],...]}

Arrays are written sorted by (a, b); a pair may appear only once on input.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graphs import AnyGraph, ColoredBipartiteGraph, OrientedBipartiteGraph, validate


class GraphFormatError(ValueError):
    """Malformed graph file; ``where`` is a line:column or a JSON path."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def graph_to_dict(graph: AnyGraph) -> dict:
    if isinstance(graph, OrientedBipartiteGraph):
        return {
            "kind": "oriented",
            "m": graph.m,
            "n": graph.n,
            "arcs": [[a, b, d.value] for a, b, d in graph.arcs],
        }
    return {
        "kind": "colored",
        "m": graph.m,
        "n": graph.n,
        "edges": [[a, b, c] for a, b, c in graph.edges],
    }


def dumps(obj) -> str:
    """Compact, key-order-preserving JSON; graphs are converted first."""
    if isinstance(obj, (OrientedBipartiteGraph, ColoredBipartiteGraph)):
        obj = graph_to_dict(obj)
    return json.dumps(obj, separators=(",", ":"))


def _int(value, where: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise GraphFormatError(f"expected an integer >= {minimum}, got {value!r}", where)
    return value


def graph_from_dict(data) -> AnyGraph:
    if not isinstance(data, dict):
        raise GraphFormatError("top level must be a JSON object", "$")
    kind = data.get("kind")
    if kind not in ("oriented", "colored"):
        raise GraphFormatError(f'"kind" must be "oriented" or "colored", got {kind!r}', "$.kind")
    m = _int(data.get("m"), "$.m")
    n = _int(data.get("n"), "$.n")
    key = "arcs" if kind == "oriented" else "edges"
    items = data.get(key)
    if not isinstance(items, list):
        raise GraphFormatError(f'"{key}" must be a list', f"$.{key}")
    parsed = []
    for i, item in enumerate(items):
        where = f"$.{key}[{i}]"
        if not isinstance(item, list) or len(item) != 3:
            raise GraphFormatError("expected a 3-element list", where)
        a = _int(item[0], where + "[0]")
        b = _int(item[1], where + "[1]")
        if kind == "oriented":
            if item[2] not in ("AtoB", "BtoA"):
                raise GraphFormatError(f'direction must be "AtoB" or "BtoA", got {item[2]!r}', where + "[2]")
            parsed.append((a, b, item[2]))
        else:
            parsed.append((a, b, _int(item[2], where + "[2]", minimum=1)))
    graph = OrientedBipartiteGraph(m, n, parsed) if kind == "oriented" else ColoredBipartiteGraph(m, n, parsed)
    problems = validate(graph)
    if problems:
        raise GraphFormatError("; ".join(map(str, problems)), f"$.{key}")
    return graph


def loads(text: str) -> AnyGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return graph_from_dict(data)


def load(path) -> AnyGraph:
    return loads(Path(path).read_text())


def dump(graph: AnyGraph, path) -> None:
    Path(path).write_text(dumps(graph) + "\n")
