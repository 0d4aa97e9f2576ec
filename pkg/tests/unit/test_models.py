"""Unit Tests - run configuration, report rows and rational helpers"""
from fractions import Fraction

import pytest

from src.models.curvature_models import (
    Certificate, ConjectureRow, CurvatureMethod, CurvatureReport, VerifySummary
)
from src.models.graph_models import SrgParams
from src.models.run_models import Command, OutputFormat, RunConfig
from src.models.transport_models import parse_rational, rational_text, rational_to_dict
from src.ricci_service.errors import PreconditionViolated


class TestRunConfig:
    """Test usage validation"""

    def test_valid_configs(self):
        """Test runnable configurations report no errors"""
        valid_cases = [
            RunConfig(Command.CURVATURE, generator='petersen', all_edges=True),
            RunConfig(Command.CURVATURE, graph_file='g.txt', edge=(0, 1), format=OutputFormat.CSV),
            RunConfig(Command.MATCHING, generator='shrikhande', edge=(0, 1)),
            RunConfig(Command.SPECTRUM, generator='cycle:5'),
            RunConfig(Command.VERIFY, random_graphs=5, seed=3),
            RunConfig(Command.SCAN, paley=[13, 17]),
            RunConfig(Command.GENERATE, generator='rooks:4', format=OutputFormat.EDGELIST),
        ]
        for run_config in valid_cases:
            assert run_config.validate() == [], run_config

    def test_usage_errors(self):
        """Test each misuse yields a message"""
        invalid_cases = [
            (RunConfig(Command.SPECTRUM), "Missing graph source"),
            (RunConfig(Command.SPECTRUM, graph_file='g.txt', generator='petersen'), "exactly one graph source"),
            (RunConfig(Command.DECOMPOSE, generator='petersen'), "needs --edge"),
            (RunConfig(Command.CURVATURE, generator='petersen'), "exactly one of --edge"),
            (RunConfig(Command.CURVATURE, generator='petersen', edge=(0, 7), all_edges=True), "exactly one of --edge"),
            (RunConfig(Command.SCAN), "needs --paley"),
            (RunConfig(Command.SPECTRUM, generator='petersen', format=OutputFormat.CSV), "CSV output"),
            (RunConfig(Command.CURVATURE, generator='petersen', all_edges=True, format=OutputFormat.EDGELIST),
             "edgelist output"),
            (RunConfig(Command.CURVATURE, generator='petersen', all_edges=True, eps=Fraction(3, 2)), "--eps"),
        ]
        for run_config, message in invalid_cases:
            errors = run_config.validate()
            assert any(message in e for e in errors), (run_config, errors)


class TestRationals:
    """Test exact rational parsing and rendering"""

    def test_parse(self):
        """Test fractions, integers and whitespace"""
        assert parse_rational('1/2') == Fraction(1, 2)
        assert parse_rational(' 3 ') == 3
        assert parse_rational(2) == 2
        assert parse_rational(Fraction(5, 7)) == Fraction(5, 7)

    def test_parse_errors(self):
        """Test malformed and zero-denominator input"""
        for text in ('half', '1/0', ''):
            with pytest.raises(PreconditionViolated):
                parse_rational(text)

    def test_render(self):
        """Test num/den/decimal output"""
        assert rational_to_dict(Fraction(-4, 7)) == {'num': -4, 'den': 7, 'decimal': '-0.571428571429'}
        assert rational_to_dict(Fraction(2, 3))['decimal'] == '0.666666666667'
        assert rational_to_dict(1)['decimal'] == '1'
        assert rational_text(Fraction(6, 4)) == '3/2'


class TestReports:
    """Test report serialization"""

    def _report(self, matching_size=None):
        return CurvatureReport(
            edge=(0, 1),
            eps=Fraction(1, 2),
            w1=Fraction(2, 3),
            kappa_eps=Fraction(1, 3),
            condensed=Fraction(2, 3),
            method=CurvatureMethod.BOTH,
            certificate=Certificate(Fraction(2, 3), Fraction(2, 3), True),
            matching_size=matching_size
        )

    def test_csv_row(self):
        """Test the CSV row layout"""
        assert self._report(3).csv_row() == [0, 1, 2, 3, 'both', 3, 'true']
        assert self._report().csv_row()[5] == ''

    def test_to_dict(self):
        """Test the JSON layout"""
        data = self._report(3).to_dict()
        assert data['edge'] == [0, 1]
        assert data['condensed'] == {'num': 2, 'den': 3, 'decimal': '0.666666666667'}
        assert data['certificate']['gap_zero'] is True
        assert data['method'] == 'both'

    def test_conjecture_row(self):
        """Test agreement needs a uniform value equal to the conjectured one"""
        params = SrgParams(13, 6, 2, 3)
        row = ConjectureRow(13, params, True, Fraction(2, 3), Fraction(2, 3))
        assert row.agrees
        assert not ConjectureRow(13, params, True, None, Fraction(2, 3), uniform=False).agrees
        assert row.to_dict()['params'] == {'n': 13, 'd': 6, 'alpha': 2, 'beta': 3}

    def test_verify_summary(self):
        """Test the summary is consistent only without inconsistent graphs"""
        assert VerifySummary(graphs=3, complete=1).to_dict()['consistent']
        assert not VerifySummary(graphs=3, inconsistent=[2]).to_dict()['consistent']
