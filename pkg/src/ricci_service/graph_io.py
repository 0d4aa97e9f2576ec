"""Edge-list and JSON graph files.

Edge list: first line "n m", then m lines "u v" (0-based). Blank lines and
lines starting with '#' are ignored.
JSON: {"n": 3, "edges": [[0, 1], [1, 2]]}
"""
import json
from pathlib import Path

from src.ricci_service.errors import GraphParseError, InvalidGraph
from src.ricci_service.graph_core import build_graph


def _parse_int(token, line):
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"'{token}' is not an integer", line)


def parse_edge_list(text):
    rows = [(number, raw.split()) for number, raw in enumerate(text.splitlines(), start=1)]
    rows = [(number, tokens) for number, tokens in rows if tokens and not tokens[0].startswith('#')]
    if not rows:
        raise GraphParseError("empty graph file")

    header_line, header = rows[0]
    if len(header) != 2:
        raise GraphParseError(f"header must be 'n m', got {' '.join(header)!r}", header_line)
    n, m = (_parse_int(t, header_line) for t in header)
    if n < 0 or m < 0:
        raise GraphParseError("vertex and edge counts must be non-negative", header_line)

    edges = []
    for number, tokens in rows[1:]:
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {' '.join(tokens)!r}", number)
        u, v = (_parse_int(t, number) for t in tokens)
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise GraphParseError(f"vertex {vertex} out of range 0..{n - 1}", number)
        if u == v:
            raise GraphParseError(f"loop edge at vertex {u}", number)
        edges.append((u, v))

    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges but {len(edges)} were given")
    return build_graph(n, edges)


def parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"invalid JSON: {e.msg}", e.lineno)
    if not isinstance(data, dict) or 'n' not in data or 'edges' not in data:
        raise GraphParseError("JSON graph needs 'n' and 'edges' keys")
    n = data['n']
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphParseError(f"'n' must be an integer, got {n!r}")
    if not isinstance(data['edges'], list):
        raise GraphParseError(f"'edges' must be a list, got {data['edges']!r}")
    edges = []
    for index, edge in enumerate(data['edges']):
        if not (isinstance(edge, list) and len(edge) == 2 and all(isinstance(v, int) for v in edge)):
            raise GraphParseError(f"edge #{index} must be a pair of integers, got {edge!r}")
        edges.append(tuple(edge))
    try:
        return build_graph(n, edges)
    except InvalidGraph as e:
        raise GraphParseError(e.message)


def parse_graph_text(text):
    if text.lstrip().startswith('{'):
        return parse_json(text)
    return parse_edge_list(text)


def parse_graph_file(path):
    """Read an edge-list or JSON graph; OSError propagates for unreadable paths"""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise GraphParseError(f"graph file is not UTF-8 text: {e.reason} at byte {e.start}")
    return parse_graph_text(text)


def to_edge_list_text(g):
    lines = [f"{g.n} {g.edge_count}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_json(g):
    return json.dumps(g.to_dict())
