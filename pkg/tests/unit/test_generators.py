"""Unit Tests - named graph families"""
import itertools

import pytest

from src.ricci_service import generators
from src.ricci_service.errors import UnsupportedParameter
from src.ricci_service.graph_core import detect_srg, girth, is_connected, is_regular


def _triangles_in_neighborhood(g, u):
    return sum(
        1 for a, b, c in itertools.combinations(g.adj(u), 3)
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )


class TestFamilies:
    """Test sizes and parameters of each family"""

    def test_petersen(self, petersen):
        """Test Petersen has 10 vertices, 15 edges and degree 3"""
        assert petersen.n == 10
        assert petersen.edge_count == 15
        assert is_regular(petersen) == 3

    def test_petersen_labeling(self, petersen):
        """Test vertices are 2-subsets in lexicographic order, adjacent when disjoint"""
        pairs = list(itertools.combinations(range(5), 2))
        for a, b in itertools.combinations(range(10), 2):
            assert petersen.has_edge(a, b) == (not set(pairs[a]) & set(pairs[b]))

    def test_paley_five_is_five_cycle(self):
        """Test paley(5) coincides with C_5 under the identity labeling"""
        assert generators.paley(5) == generators.cycle(5)

    def test_rooks_parameters(self, rooks4):
        """Test the 4x4 rook's graph is SRG (16,6,2,2)"""
        assert detect_srg(rooks4).as_tuple() == (16, 6, 2, 2)

    def test_shrikhande_differs_from_rooks(self, shrikhande, rooks4):
        """Test Shrikhande has no triangle inside a neighbourhood, the rook's graph has two"""
        assert detect_srg(shrikhande).as_tuple() == (16, 6, 2, 2)
        assert _triangles_in_neighborhood(shrikhande, 0) == 0
        assert _triangles_in_neighborhood(rooks4, 0) == 2

    def test_shrikhande_labeling(self, shrikhande):
        """Test vertex 4a + b is adjacent to the six steps of Z4 x Z4"""
        assert sorted(shrikhande.adj(0)) == [1, 3, 4, 5, 12, 15]

    def test_hoffman_singleton(self, hoffman_singleton):
        """Test Hoffman-Singleton is the (50,7,0,1) Moore graph"""
        assert hoffman_singleton.edge_count == 175
        assert is_regular(hoffman_singleton) == 7
        assert girth(hoffman_singleton) == 5
        assert detect_srg(hoffman_singleton).as_tuple() == (50, 7, 0, 1)

    def test_clebsch(self):
        """Test the folded 5-cube is SRG (16,5,0,2)"""
        g = generators.clebsch()
        assert detect_srg(g).as_tuple() == (16, 5, 0, 2)
        assert girth(g) == 4

    def test_triangular(self):
        """Test triangular graphs T(k) for small k"""
        assert detect_srg(generators.triangular(4)).as_tuple() == (6, 4, 2, 4)
        assert detect_srg(generators.triangular(5)).as_tuple() == (10, 6, 3, 4)
        assert detect_srg(generators.triangular(6)).as_tuple() == (15, 8, 4, 4)

    def test_complete_and_bipartite(self):
        """Test complete and complete bipartite graphs"""
        assert generators.complete(1).edge_count == 0
        assert generators.complete(7).edge_count == 21
        g = generators.complete_bipartite(2, 3)
        assert g.edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]

    def test_every_family_is_connected(self):
        """Test the default instances are connected"""
        for spec in ['complete:4', 'cycle:6', 'complete_bipartite:2,5', 'petersen', 'rooks:3',
                     'shrikhande', 'paley:13', 'hoffman_singleton', 'clebsch', 'triangular:5']:
            assert is_connected(generators.generate_from_spec(spec)), spec


class TestParameterValidation:
    """Test rejected parameters"""

    def test_unsupported_parameters(self):
        """Test each family's parameter checks"""
        invalid_cases = [
            ('paley', (9,)),
            ('paley', (7,)),
            ('paley', (1,)),
            ('cycle', (2,)),
            ('complete', (0,)),
            ('complete_bipartite', (0, 3)),
            ('rooks', (1,)),
            ('triangular', (3,)),
        ]
        for family, args in invalid_cases:
            with pytest.raises(UnsupportedParameter):
                generators.generate(family, *args)

    def test_unknown_family_and_arity(self):
        """Test unknown names and wrong argument counts"""
        with pytest.raises(UnsupportedParameter, match="Unknown graph family"):
            generators.generate('dodecahedron')
        with pytest.raises(UnsupportedParameter, match="takes 1 argument"):
            generators.generate('paley')
        with pytest.raises(UnsupportedParameter):
            generators.generate('petersen', 3)

    def test_parse_generator_spec(self):
        """Test NAME[:ARGS] parsing"""
        assert generators.parse_generator_spec('paley:13') == ('paley', (13,))
        assert generators.parse_generator_spec('complete_bipartite:3,3') == ('complete_bipartite', (3, 3))
        assert generators.parse_generator_spec('petersen') == ('petersen', ())
        with pytest.raises(UnsupportedParameter):
            generators.parse_generator_spec('paley:x')

    def test_is_prime(self):
        """Test the primality helper"""
        assert [q for q in range(30) if generators.is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
