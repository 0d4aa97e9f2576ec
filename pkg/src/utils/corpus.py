"""Seeded graph corpora for verification runs.

Random graphs use Python's random.Random (Mersenne Twister MT19937) seeded with
the given integer. For each graph: n = rng.randint(2, max_vertices), then
nx.gnp_random_graph(n, p, seed=rng) draws the edges from the same generator, then
consecutive connected components are joined by an edge between their smallest
vertices.
"""
import random

import networkx as nx

from src.ricci_service.generators import generate
from src.ricci_service.graph_core import build_graph, connected_components

# (label, family, args) for the named corpus
SRG_CORPUS = [
    ('C5', 'cycle', (5,)),
    ('C4', 'cycle', (4,)),
    ('petersen', 'petersen', ()),
    ('hoffman_singleton', 'hoffman_singleton', ()),
    ('K3,3', 'complete_bipartite', (3, 3)),
    ('K4,4', 'complete_bipartite', (4, 4)),
    ('clebsch', 'clebsch', ()),
    ('rooks3', 'rooks', (3,)),
    ('rooks4', 'rooks', (4,)),
    ('shrikhande', 'shrikhande', ()),
    ('paley13', 'paley', (13,)),
    ('paley17', 'paley', (17,)),
    ('T5', 'triangular', (5,)),
]

REGULAR_CORPUS = SRG_CORPUS + [
    ('K2', 'complete', (2,)),
    ('K5', 'complete', (5,)),
    ('C6', 'cycle', (6,)),
    ('C7', 'cycle', (7,)),
]


class CorpusGenerator:
    def __init__(self, seed=2024):
        self.seed = seed
        self.rng = random.Random(seed)

    def random_connected_graph(self, n, p):
        """G(n, p) sample joined into one component"""
        edges = list(nx.gnp_random_graph(n, p, seed=self.rng).edges())
        g = build_graph(n, edges)
        components = connected_components(g)
        if len(components) == 1:
            return g
        bridges = [(min(a), min(b)) for a, b in zip(components, components[1:])]
        return build_graph(n, edges + bridges)

    def random_corpus(self, count, max_vertices=12, p=0.35):
        return [self.random_connected_graph(self.rng.randint(2, max_vertices), p) for _ in range(count)]

    @staticmethod
    def named(entries):
        return {label: generate(family, *args) for label, family, args in entries}

    def srg_corpus(self):
        return self.named(SRG_CORPUS)

    def regular_corpus(self):
        return self.named(REGULAR_CORPUS)
