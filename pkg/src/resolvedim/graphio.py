"""Graph file formats: whitespace edge lists and a small JSON shape.

Edge list: a header line "n m" followed by m lines "u v"; anything after
'#' on a line is a comment. JSON: {"n": int, "edges": [[u, v], ...]}.
The reader auto-detects the format from the first meaningful byte.
"""

from __future__ import annotations

import json

from .graphs import Graph, build_graph


def parse_graph(text: str) -> Graph:
    """Parse either supported graph format, detected from the content."""
    stripped = _strip_comments(text)
    for ch in stripped:
        if ch.isspace():
            continue
        if ch == "{":
            return _parse_json(stripped)
        return _parse_edge_list(text)
    raise ValueError("empty graph input")


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _parse_edge_list(text: str) -> Graph:
    header = None
    edges = []
    expected = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected two fields, got {len(fields)}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: not an integer pair: {line!r}") from None
        if header is None:
            header = (a, b)
            if a < 0 or b < 0:
                raise ValueError(f"line {lineno}: order and edge count must be nonnegative")
            expected = b
            continue
        edges.append((a, b))
    if header is None:
        raise ValueError("empty graph input")
    if len(edges) != expected:
        raise ValueError(f"header promised {expected} edges, found {len(edges)}")
    return build_graph(header[0], edges)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON graph: {exc}") from None
    if not isinstance(obj, dict):
        raise ValueError("JSON graph must be an object")
    if "n" not in obj or "edges" not in obj:
        raise ValueError('JSON graph needs keys "n" and "edges"')
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int):
        raise ValueError('"n" must be an integer')
    if not isinstance(edges, list):
        raise ValueError('"edges" must be a list of pairs')
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ValueError(f"edge {i} is not an integer pair")
        pairs.append((e[0], e[1]))
    return build_graph(n, pairs)


def graph_to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format, edges sorted."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    """Serialize to the JSON format with sorted keys."""
    return json.dumps(
        {"edges": [[u, v] for u, v in g.edges()], "n": g.n}, sort_keys=True
    )
