"""Graph construction, distances, girth and strongly regular parameter detection"""
import logging
import math

import networkx as nx

from src.models.graph_models import Graph, SrgParams
from src.ricci_service.errors import InvalidGraph

logger = logging.getLogger(__name__)


def build_graph(n, edges):
    """Build a simple graph from an edge list, deduplicating repeated edges"""
    if not isinstance(n, int) or n < 0:
        raise InvalidGraph(f"vertex count must be a non-negative integer, got {n!r}")

    adjacency = [set() for _ in range(n)]
    for edge in edges:
        try:
            u, v = edge
        except (TypeError, ValueError):
            raise InvalidGraph(f"edge {edge!r} is not a vertex pair")
        for endpoint in (u, v):
            if not isinstance(endpoint, int) or not 0 <= endpoint < n:
                raise InvalidGraph(f"endpoint {endpoint!r} of edge ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise InvalidGraph(f"loop edge at vertex {u}")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, adjacency)


def all_pairs_distances(g):
    return g.dist


def connected_components(g):
    """Vertex lists of the connected components, ordered by smallest vertex"""
    components = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(components, key=lambda c: c[0])


def is_connected(g):
    return g.n > 0 and nx.is_connected(g.to_networkx())


def diameter(g):
    """Largest finite distance; infinity for disconnected graphs"""
    if not is_connected(g):
        return math.inf
    return nx.diameter(g.to_networkx())


def is_regular(g):
    """Common degree, or None when degrees differ"""
    degrees = {g.degree(u) for u in range(g.n)}
    return degrees.pop() if len(degrees) == 1 else None


def girth(g):
    """Shortest cycle length; infinity for forests"""
    return nx.girth(g.to_networkx())


def common_neighbors(g, u, v):
    return g.neighbors(u) & g.neighbors(v)


def detect_srg(g):
    """Strongly regular parameters (n, d, alpha, beta), or None"""
    if not is_connected(g):
        return None
    d = is_regular(g)
    if d is None or d == 0:
        return None

    alphas = set()
    betas = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            shared = len(common_neighbors(g, u, v))
            (alphas if g.has_edge(u, v) else betas).add(shared)
            if len(alphas) > 1 or len(betas) > 1:
                return None

    if not alphas or not betas:
        # complete graphs have no nonadjacent pairs, so beta is undefined
        return None
    beta = betas.pop()
    if beta < 1:
        return None

    params = SrgParams(g.n, d, alphas.pop(), beta)
    if not params.feasible:
        logger.warning("SRG counting identity fails for %s", params.as_tuple())
    return params
