"""Named graph families with fixed, documented vertex labelings.

complete(n)             vertices 0..n-1
cycle(n)                i ~ i+1 mod n
complete_bipartite(s,t) left 0..s-1, right s..s+t-1
petersen                2-subsets of {0..4} in lexicographic order, adjacent when disjoint
rooks(r)                cell (i, j) -> r*i + j, adjacent when sharing a row or a column
shrikhande              (a, b) in Z4 x Z4 -> 4a + b, differences in {±(1,0), ±(0,1), ±(1,1)}
paley(q)                residues mod q, differences that are nonzero squares
hoffman_singleton       pentagon P_h vertex j -> 5h + j, pentagram Q_i vertex j -> 25 + 5i + j;
                        P_h[j] ~ P_h[j±1], Q_i[j] ~ Q_i[j±2], P_h[j] ~ Q_i[h*i + j mod 5]
clebsch                 0..15, adjacent when the xor has popcount 1 or 4
triangular(k)           2-subsets of {0..k-1} in lexicographic order, adjacent when meeting
"""
import itertools

import networkx as nx

from src.ricci_service.errors import UnsupportedParameter
from src.ricci_service.graph_core import build_graph


def is_prime(q):
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    return all(q % p for p in range(3, int(q ** 0.5) + 1, 2))


def _require(condition, message):
    if not condition:
        raise UnsupportedParameter(message)


def complete(n):
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return build_graph(n, nx.complete_graph(n).edges())


def cycle(n):
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, nx.cycle_graph(n).edges())


def complete_bipartite(s, t):
    _require(s >= 1 and t >= 1, f"complete bipartite graph needs s, t >= 1, got ({s}, {t})")
    return build_graph(s + t, nx.complete_bipartite_graph(s, t).edges())


def _kneser_pairs(k):
    return list(itertools.combinations(range(k), 2))


def petersen():
    pairs = _kneser_pairs(5)
    edges = [(a, b) for a, b in itertools.combinations(range(len(pairs)), 2)
             if not set(pairs[a]) & set(pairs[b])]
    return build_graph(len(pairs), edges)


def triangular(k):
    _require(k >= 4, f"triangular graph needs k >= 4, got {k}")
    pairs = _kneser_pairs(k)
    edges = [(a, b) for a, b in itertools.combinations(range(len(pairs)), 2)
             if set(pairs[a]) & set(pairs[b])]
    return build_graph(len(pairs), edges)


def rooks(r):
    _require(r >= 2, f"rook's graph needs r >= 2, got {r}")
    cells = [(i, j) for i in range(r) for j in range(r)]
    edges = [(r * a[0] + a[1], r * b[0] + b[1]) for a, b in itertools.combinations(cells, 2)
             if a[0] == b[0] or a[1] == b[1]]
    return build_graph(r * r, edges)


def shrikhande():
    steps = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for u, v in itertools.combinations(range(16), 2):
        diff = ((v // 4 - u // 4) % 4, (v % 4 - u % 4) % 4)
        if diff in steps:
            edges.append((u, v))
    return build_graph(16, edges)


def paley(q):
    _require(is_prime(q), f"paley(q) supports prime q only, got {q}")
    _require(q % 4 == 1, f"paley(q) needs q = 1 mod 4, got {q}")
    squares = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u, v in itertools.combinations(range(q), 2) if (v - u) % q in squares]
    return build_graph(q, edges)


def hoffman_singleton():
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return build_graph(50, edges)


def clebsch():
    edges = [(u, v) for u, v in itertools.combinations(range(16), 2) if bin(u ^ v).count('1') in (1, 4)]
    return build_graph(16, edges)


FAMILIES = {
    'complete': (complete, 1),
    'cycle': (cycle, 1),
    'complete_bipartite': (complete_bipartite, 2),
    'petersen': (petersen, 0),
    'rooks': (rooks, 1),
    'shrikhande': (shrikhande, 0),
    'paley': (paley, 1),
    'hoffman_singleton': (hoffman_singleton, 0),
    'clebsch': (clebsch, 0),
    'triangular': (triangular, 1),
}


def generate(family, *args):
    """Build a named graph family"""
    try:
        builder, arity = FAMILIES[family]
    except KeyError:
        raise UnsupportedParameter(f"Unknown graph family '{family}'. Valid: {', '.join(sorted(FAMILIES))}")
    if len(args) != arity:
        raise UnsupportedParameter(f"{family} takes {arity} argument(s), got {len(args)}")
    return builder(*args)


def parse_generator_spec(spec):
    """Split 'name[:a,b]' into the family name and integer arguments"""
    name, _, arg_text = spec.strip().partition(':')
    args = []
    if arg_text:
        for token in arg_text.split(','):
            try:
                args.append(int(token))
            except ValueError:
                raise UnsupportedParameter(f"generator argument '{token}' in '{spec}' is not an integer")
    return name, tuple(args)


def generate_from_spec(spec):
    name, args = parse_generator_spec(spec)
    return generate(name, *args)
