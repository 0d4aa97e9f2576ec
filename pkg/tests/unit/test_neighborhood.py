"""Unit Tests - core neighbourhood decomposition"""
import pytest

from src.ricci_service import generators
from src.ricci_service.errors import NotAnEdge
from src.ricci_service.graph_core import detect_srg, diameter
from src.ricci_service.neighborhood import decompose, induced_bipartite


def _sizes(cn):
    return len(cn.triangle), len(cn.nx), len(cn.ny), len(cn.pentagon)


class TestDecompose:
    """Test the partition {x}, {y}, common, exclusive and two-step sets"""

    def test_complete_graph(self):
        """Test every other vertex of K_4 is a common neighbour"""
        cn = decompose(generators.complete(4), (0, 1))
        assert cn.triangle == (2, 3)
        assert cn.nx == cn.ny == cn.pentagon == ()

    def test_petersen(self, petersen):
        """Test Petersen edges split 1+1+0+2+2+4"""
        for edge in petersen.edges():
            cn = decompose(petersen, edge)
            assert _sizes(cn) == (0, 2, 2, 4)
            assert len(cn.vertices()) == 10

    def test_rooks(self, rooks4):
        """Test rook's graph edges split 1+1+2+3+3+6"""
        for edge in rooks4.edges():
            assert _sizes(decompose(rooks4, edge)) == (2, 3, 3, 6)

    def test_parts_partition_diameter_two_graphs(self, srg_corpus):
        """Test the six parts cover every vertex once and |P| = n - 2d + alpha"""
        for label, g in srg_corpus.items():
            params = detect_srg(g)
            assert diameter(g) == 2, label
            for edge in g.edges():
                cn = decompose(g, edge)
                assert cn.vertices() == list(range(g.n)), label
                assert len(cn.pentagon) == g.n - 2 * params.d + len(cn.triangle), label

    def test_reversed_edge_swaps_sides(self, shrikhande):
        """Test decompose(y, x) swaps N_x and N_y"""
        forward = decompose(shrikhande, (0, 1))
        backward = decompose(shrikhande, (1, 0))
        assert (backward.nx, backward.ny) == (forward.ny, forward.nx)
        assert backward.triangle == forward.triangle
        assert backward.pentagon == forward.pentagon

    def test_non_edge(self, petersen):
        """Test a non-adjacent pair is rejected"""
        with pytest.raises(NotAnEdge):
            decompose(petersen, (0, 1))

    def test_to_dict(self):
        """Test the decomposition serializes every part"""
        cn = decompose(generators.cycle(5), (0, 1))
        assert cn.to_dict() == {'x': 0, 'y': 1, 'triangle': [], 'nx': [4], 'ny': [2], 'pentagon': [3]}


class TestInducedBipartite:
    """Test the bipartite graph H between N_x and N_y"""

    def test_girth_five_has_no_edges(self, petersen, hoffman_singleton, c5):
        """Test H is edgeless on girth-5 graphs"""
        for g in (petersen, hoffman_singleton, c5):
            for edge in g.edges():
                assert induced_bipartite(g, decompose(g, edge)).edges == ()

    def test_complete_bipartite_degrees(self):
        """Test each vertex of H has beta - 1 = 2 neighbours in K_{3,3}"""
        g = generators.complete_bipartite(3, 3)
        h = induced_bipartite(g, decompose(g, (0, 3)))
        assert len(h.left) == len(h.right) == 2
        assert len(h.edges) == 4

    def test_shrikhande_has_one_edge(self, shrikhande):
        """Test H has a single edge on every Shrikhande edge"""
        for edge in shrikhande.edges():
            assert len(induced_bipartite(shrikhande, decompose(shrikhande, edge)).edges) == 1

    def test_parent_ids(self):
        """Test local indices map back to graph vertices"""
        g = generators.cycle(4)
        h = induced_bipartite(g, decompose(g, (0, 1)))
        assert h.left == (3,)
        assert h.right == (2,)
        assert h.parent_edges() == [(3, 2)]
