"""Unit Tests - normalized Laplacian and Jacobi eigenvalues"""
import math

import numpy as np
import pytest

from src.models.spectral_models import SymMatrix
from src.ricci_service import generators
from src.ricci_service import spectral as spectral_module
from src.ricci_service.errors import DegreeZero, Disconnected, NoConvergence, PreconditionViolated
from src.ricci_service.graph_core import build_graph
from src.utils.corpus import CorpusGenerator
from src.ricci_service.spectral import (
    eigenvalues, lambda1_checks, normalized_laplacian, zero_multiplicity
)


def _spectrum(g):
    return eigenvalues(normalized_laplacian(g))


class TestNormalizedLaplacian:
    """Test L = I - D^-1/2 A D^-1/2"""

    def test_entries(self):
        """Test the star K_1,2 entries"""
        mat = normalized_laplacian(build_graph(3, [(0, 1), (0, 2)]))
        expected = [
            [1.0, -1 / math.sqrt(2), -1 / math.sqrt(2)],
            [-1 / math.sqrt(2), 1.0, 0.0],
            [-1 / math.sqrt(2), 0.0, 1.0],
        ]
        assert np.allclose(mat.entries, expected)

    def test_isolated_vertex(self):
        """Test degree-zero vertices are rejected"""
        with pytest.raises(DegreeZero):
            normalized_laplacian(build_graph(3, [(0, 1)]))

    def test_sym_matrix_validation(self):
        """Test non-square and non-symmetric input"""
        with pytest.raises(ValueError):
            SymMatrix([[1.0, 2.0, 3.0]])
        with pytest.raises(ValueError):
            SymMatrix([[1.0, 2.0], [0.0, 1.0]])


class TestEigenvalues:
    """Test Jacobi rotations against closed forms and numpy"""

    def test_complete_graph(self):
        """Test K_n has 0 and n/(n-1) with multiplicity n-1"""
        for n in (2, 4, 7):
            values = _spectrum(generators.complete(n))
            assert values[0] == pytest.approx(0.0, abs=1e-9)
            assert values[1:] == pytest.approx([n / (n - 1)] * (n - 1))

    def test_cycle(self):
        """Test C_n has 1 - cos(2 pi k / n)"""
        for n in (5, 6, 9):
            expected = sorted(1 - math.cos(2 * math.pi * k / n) for k in range(n))
            assert _spectrum(generators.cycle(n)) == pytest.approx(expected, abs=1e-9)

    def test_petersen(self, petersen):
        """Test 0, 2/3 (x5), 5/3 (x4)"""
        assert _spectrum(petersen) == pytest.approx([0.0] + [2 / 3] * 5 + [5 / 3] * 4, abs=1e-9)

    def test_against_numpy(self, srg_corpus):
        """Test agreement with numpy's symmetric eigensolver"""
        for label, g in srg_corpus.items():
            mat = normalized_laplacian(g)
            assert eigenvalues(mat) == pytest.approx(sorted(np.linalg.eigvalsh(mat.entries)), abs=1e-8), label

    def test_diagonal_matrix(self):
        """Test a diagonal matrix needs no rotations"""
        assert eigenvalues(SymMatrix(np.diag([3.0, 1.0, 2.0]))) == [1.0, 2.0, 3.0]

    def test_characteristic_polynomial_roots(self):
        """Test small matrices against the roots of det(tI - A) to 1e-12"""
        matrices = [
            [[2.0, 1.0], [1.0, 3.0]],
            [[0.5, -2.0], [-2.0, -1.5]],
            [[4.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]],
            [[1.0, 0.25, -0.5], [0.25, -2.0, 0.75], [-0.5, 0.75, 0.5]],
        ]
        for rows in matrices:
            entries = np.array(rows)
            roots = sorted(np.roots(np.poly(entries)).real)
            assert eigenvalues(SymMatrix(entries), tol=1e-12) == pytest.approx(roots, abs=1e-12), rows

    def test_two_by_two_closed_form(self):
        """Test (tr +- sqrt(tr^2 - 4 det)) / 2"""
        a, b, c = 1.5, 0.75, -0.25
        trace, det = a + c, a * c - b * b
        root = math.sqrt(trace * trace - 4 * det)
        expected = [(trace - root) / 2, (trace + root) / 2]
        assert eigenvalues(SymMatrix(np.array([[a, b], [b, c]]))) == pytest.approx(expected, abs=1e-12)

    def test_trace_and_range(self, regular_corpus):
        """Test eigenvalues sum to n and lie in [0, 2]"""
        graphs = list(regular_corpus.values()) + CorpusGenerator(13).random_corpus(25, max_vertices=10)
        for g in graphs:
            values = _spectrum(g)
            assert sum(values) == pytest.approx(g.n, abs=1e-9), repr(g)
            assert all(-1e-9 <= v <= 2 + 1e-9 for v in values), repr(g)

    def test_no_convergence(self, c5):
        """Test zero sweeps cannot clear the off-diagonal part"""
        with pytest.raises(NoConvergence):
            eigenvalues(normalized_laplacian(c5), max_sweeps=0)

    def test_tolerance_must_be_positive(self, c5):
        """Test tol <= 0 is rejected"""
        with pytest.raises(PreconditionViolated):
            eigenvalues(normalized_laplacian(c5), tol=0)

    def test_zero_multiplicity_counts_components(self):
        """Test two disjoint triangles give two zero eigenvalues"""
        g = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert zero_multiplicity(_spectrum(g)) == 2
        assert zero_multiplicity(_spectrum(generators.cycle(5))) == 1


class TestLambda1Checks:
    """Test lambda_1 bounds"""

    def test_complete_graph_attains_bound(self):
        """Test lambda_1 = n/(n-1) on K_n"""
        report = lambda1_checks(generators.complete(5), None)
        assert report.lambda1 == pytest.approx(5 / 4)
        assert report.leq_bound_ok
        assert report.connected

    def test_curvature_lower_bound(self, srg_corpus):
        """Test lambda_1 is at least the positive minimum curvature"""
        lower_bounds = [
            ('rooks4', 2 / 3),
            ('shrikhande', 1 / 3),
            ('clebsch', 2 / 5),
            ('petersen', 0.0),
        ]
        for label, bound in lower_bounds:
            report = lambda1_checks(srg_corpus[label], bound)
            assert report.lichnerowicz_ok, label
            assert report.lambda1 >= bound - 1e-9, label
            assert report.leq_bound_ok, label

    def test_violated_lower_bound(self, c5):
        """Test an impossible curvature bound is flagged"""
        assert not lambda1_checks(c5, 2).lichnerowicz_ok

    def test_disconnected(self):
        """Test disconnected graphs are refused"""
        with pytest.raises(Disconnected):
            lambda1_checks(build_graph(4, [(0, 1), (2, 3)]), None)

    def test_single_vertex(self):
        """Test lambda_1 needs two vertices"""
        with pytest.raises(PreconditionViolated):
            lambda1_checks(generators.complete(1), None)

    def test_connected_uses_jacobi_tolerance(self, c5, monkeypatch):
        """Test lambda_1 between tol and slack still counts as connected"""
        monkeypatch.setattr(spectral_module, 'eigenvalues', lambda mat, tol, max_sweeps: [0.0, 5e-10, 1.0, 1.0, 1.0])
        assert lambda1_checks(c5, None, tol=1e-12, slack=1e-9).connected
        assert not lambda1_checks(c5, None, tol=1e-9, slack=1e-9).connected

    def test_bound_attained_only_by_complete_graphs(self, regular_corpus):
        """Test lambda_1 = n/(n-1) holds on K_n and nowhere else in the corpus"""
        for graph_corpus in (regular_corpus, dict(enumerate(CorpusGenerator(31).random_corpus(40, max_vertices=9)))):
            for label, g in graph_corpus.items():
                if g.n < 2:
                    continue
                attains = abs(lambda1_checks(g, None).lambda1 - g.n / (g.n - 1)) < 1e-9
                assert attains == (g.edge_count == g.n * (g.n - 1) // 2), label
