from dataclasses import dataclass
from enum import Enum
import threading

import networkx as nx

from src.ricci_service.errors import InvalidGraph, PreconditionViolated

# Marker stored in the distance matrix for pairs in different components
UNREACHABLE = -1


def distance_rows(graph, n):
    """Hop-count rows from nx.all_pairs_shortest_path_length; UNREACHABLE where no path exists"""
    rows = [[UNREACHABLE] * n for _ in range(n)]
    for source, lengths in nx.all_pairs_shortest_path_length(graph):
        row = rows[source]
        for target, length in lengths.items():
            row[target] = length
    return tuple(tuple(row) for row in rows)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    The all-pairs distance matrix is filled on first access under a lock, so a
    graph may be shared between threads before or after that happens.
    """

    def __init__(self, n, adjacency):
        if len(adjacency) != n:
            raise InvalidGraph(f"expected {n} adjacency rows, got {len(adjacency)}")
        self._n = n
        self._adj = tuple(tuple(sorted(row)) for row in adjacency)
        self._adj_sets = tuple(frozenset(row) for row in self._adj)
        for u, row in enumerate(self._adj_sets):
            if u in row:
                raise InvalidGraph(f"loop at vertex {u}")
            for v in row:
                if u not in self._adj_sets[v]:
                    raise InvalidGraph(f"adjacency is not symmetric for ({u}, {v})")
        self._dist = None
        self._lock = threading.Lock()

    @property
    def n(self):
        return self._n

    def adj(self, u):
        return self._adj[u]

    def neighbors(self, u):
        return self._adj_sets[u]

    def degree(self, u):
        return len(self._adj[u])

    def has_edge(self, u, v):
        return 0 <= u < self._n and v in self._adj_sets[u]

    def edges(self):
        """Edges as (u, v) with u < v, in lexicographic order"""
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    @property
    def edge_count(self):
        return sum(len(row) for row in self._adj) // 2

    @property
    def dist(self):
        if self._dist is None:
            with self._lock:
                if self._dist is None:
                    self._dist = distance_rows(self.to_networkx(), self._n)
        return self._dist

    def distance(self, u, v):
        return self.dist[u][v]

    def to_networkx(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self.edges())
        return graph

    def to_dict(self):
        return {
            'n': self._n,
            'edges': [[u, v] for u, v in self.edges()]
        }

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.edge_count})"


@dataclass(frozen=True)
class SrgParams:
    n: int
    d: int
    alpha: int
    beta: int

    @property
    def feasible(self):
        return self.d * (self.d - self.alpha - 1) == (self.n - self.d - 1) * self.beta

    @property
    def is_conference(self):
        b = self.beta
        return (self.n, self.d, self.alpha) == (4 * b + 1, 2 * b, b - 1)

    def as_tuple(self):
        return (self.n, self.d, self.alpha, self.beta)

    def to_dict(self):
        return {'n': self.n, 'd': self.d, 'alpha': self.alpha, 'beta': self.beta}


@dataclass(frozen=True)
class CoreNeighborhood:
    x: int
    y: int
    triangle: tuple
    nx: tuple
    ny: tuple
    pentagon: tuple

    def parts(self):
        return ((self.x,), (self.y,), self.triangle, self.nx, self.ny, self.pentagon)

    def vertices(self):
        return sorted(v for part in self.parts() for v in part)

    @property
    def degree_x(self):
        return 1 + len(self.triangle) + len(self.nx)

    def to_dict(self):
        return {
            'x': self.x,
            'y': self.y,
            'triangle': list(self.triangle),
            'nx': list(self.nx),
            'ny': list(self.ny),
            'pentagon': list(self.pentagon)
        }


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self):
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class BipartiteGraph:
    """Bipartite graph on local indices 0..len(side)-1 with parent vertex ids"""

    def __init__(self, left, right, edges):
        self.left = tuple(left)
        self.right = tuple(right)
        self.edges = tuple(sorted(set(edges)))
        self._left_adj = [[] for _ in self.left]
        self._right_adj = [[] for _ in self.right]
        for i, j in self.edges:
            if not (0 <= i < len(self.left) and 0 <= j < len(self.right)):
                raise InvalidGraph(f"bipartite edge ({i}, {j}) out of range")
            self._left_adj[i].append(j)
            self._right_adj[j].append(i)

    def side(self, side):
        return self.left if side is Side.LEFT else self.right

    def size(self, side):
        return len(self.side(side))

    def neighbors(self, side, index):
        return self._left_adj[index] if side is Side.LEFT else self._right_adj[index]

    def has_edge(self, i, j):
        return j in self._left_adj[i]

    def parent_edges(self):
        return [(self.left[i], self.right[j]) for i, j in self.edges]

    def to_dict(self):
        return {
            'left': list(self.left),
            'right': list(self.right),
            'edges': [list(e) for e in self.parent_edges()]
        }


class Matching:
    """Vertex-disjoint set of host edges, stored as local (left, right) pairs"""

    def __init__(self, host, pairs):
        self.host = host
        self.pairs = tuple(sorted(pairs))
        self.mate_left = {}
        self.mate_right = {}
        for i, j in self.pairs:
            if not host.has_edge(i, j):
                raise PreconditionViolated(f"pair ({i}, {j}) is not an edge of the bipartite graph")
            if i in self.mate_left or j in self.mate_right:
                raise PreconditionViolated(f"pair ({i}, {j}) reuses a matched vertex")
            self.mate_left[i] = j
            self.mate_right[j] = i

    @property
    def size(self):
        return len(self.pairs)

    def mates(self, side):
        return self.mate_left if side is Side.LEFT else self.mate_right

    def is_matched(self, side, index):
        return index in self.mates(side)

    def unmatched(self, side):
        mates = self.mates(side)
        return [k for k in range(self.host.size(side)) if k not in mates]

    def is_perfect(self):
        return self.size == self.host.size(Side.LEFT) == self.host.size(Side.RIGHT)

    def parent_pairs(self):
        return [(self.host.left[i], self.host.right[j]) for i, j in self.pairs]

    def to_dict(self):
        return {
            'size': self.size,
            'pairs': [list(p) for p in self.parent_pairs()]
        }


@dataclass(frozen=True)
class AlternatingReach:
    from_side: Side
    reach_s: frozenset
    reach_t: frozenset

    def to_dict(self, host):
        s_ids = host.side(self.from_side)
        t_ids = host.side(self.from_side.other)
        return {
            'from_side': self.from_side.value,
            'reach_s': sorted(s_ids[k] for k in self.reach_s),
            'reach_t': sorted(t_ids[k] for k in self.reach_t)
        }


@dataclass(frozen=True)
class CountingCheck:
    ok: bool
    reach_s_count: int
    reach_t_count: int
    side_size: int
    matching_size: int

    def to_dict(self):
        return {
            'ok': self.ok,
            'reach_s': self.reach_s_count,
            'reach_t_plus_side_minus_m': self.reach_t_count + self.side_size - self.matching_size,
            'side_size': self.side_size,
            'matching_size': self.matching_size
        }


@dataclass(frozen=True)
class HallResult:
    satisfied: bool
    witness: tuple = None

    def to_dict(self):
        return {
            'satisfied': self.satisfied,
            'witness': None if self.witness is None else list(self.witness)
        }
