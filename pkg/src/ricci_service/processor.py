import csv
import io
import json
import logging

from src.models.curvature_models import CSV_COLUMNS, VerifySummary
from src.models.graph_models import Side
from src.models.run_models import Command, OutputFormat
from src.models.transport_models import rational_to_dict
from src.ricci_service import curvature, spectral
from src.ricci_service.errors import CertificateError, RicciError
from src.ricci_service.generators import generate_from_spec
from src.ricci_service.graph_core import (
    connected_components, detect_srg, diameter, girth, is_connected, is_regular
)
from src.ricci_service.graph_io import parse_graph_file, to_edge_list_text, to_json
from src.ricci_service.matching import (
    alternating_reach, counting_identity_check, exclusion_violations, hall_check, maximum_matching
)
from src.ricci_service.neighborhood import decompose, induced_bipartite
from src.utils.corpus import CorpusGenerator

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


def _dumps(data):
    return json.dumps(data, indent=2) + "\n"


def _finite(value):
    return value if value != float('inf') else None


class RicciProcessor:
    def __init__(self, settings):
        self.threads = settings.RICCI_THREADS
        self.tol = settings.JACOBI_TOL
        self.max_sweeps = settings.JACOBI_MAX_SWEEPS
        self.slack = settings.SPECTRAL_SLACK
        self.verify_max_vertices = settings.VERIFY_MAX_VERTICES
        self.verify_edge_probability = settings.VERIFY_EDGE_PROBABILITY
        self.default_seed = settings.VERIFY_SEED

    def load_graph(self, config):
        if config.graph_file:
            return parse_graph_file(config.graph_file)
        if config.generator:
            return generate_from_spec(config.generator)
        return None

    def run(self, config):
        """Execute one command; never raises, reports errors in the result"""
        usage_errors = config.validate()
        if usage_errors:
            return {'success': False, 'exit_code': EXIT_USAGE, 'errors': usage_errors, 'output': ''}

        handler = {
            Command.CURVATURE: self.curvature,
            Command.DECOMPOSE: self.decompose,
            Command.MATCHING: self.matching,
            Command.SPECTRUM: self.spectrum,
            Command.VERIFY: self.verify,
            Command.SCAN: self.scan,
            Command.GENERATE: self.generate,
        }[config.command]

        try:
            g = self.load_graph(config)
            if g is not None:
                logger.info("loaded graph with %d vertices and %d edges", g.n, g.edge_count)
            output, consistent = handler(g, config)
        except CertificateError as e:
            logger.error("certificate failure: %s", e.message)
            return {'success': False, 'exit_code': EXIT_MATH, 'errors': [e.message], 'output': ''}
        except RicciError as e:
            return {'success': False, 'exit_code': EXIT_USAGE, 'errors': [e.message], 'output': ''}
        except OSError as e:
            return {'success': False, 'exit_code': EXIT_USAGE, 'errors': [f"Cannot read graph file: {e}"], 'output': ''}

        if not consistent:
            return {'success': False, 'exit_code': EXIT_MATH,
                    'errors': ['Mathematical inconsistency detected'], 'output': output}
        return {'success': True, 'exit_code': EXIT_OK, 'errors': [], 'output': output}

    def curvature(self, g, config):
        eps = config.eps
        if config.all_edges:
            profile = curvature.curvature_profile(g, threads=self.threads, certify=config.certify, eps=eps)
            reports = profile.reports
            payload = profile.to_dict()
        else:
            report = curvature.edge_report(g, config.edge, certify=config.certify, eps=eps)
            reports = [report]
            payload = {'report': report.to_dict()}
            if eps is not None:
                payload['linearity'] = curvature.scaled_curvature(g, config.edge, eps).to_dict()

        consistent = all(r.certificate.gap_zero for r in reports)
        if config.format is OutputFormat.CSV:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            writer.writerow(CSV_COLUMNS)
            for report in reports:
                writer.writerow(report.csv_row())
            return buffer.getvalue(), consistent
        return _dumps(payload), consistent

    def decompose(self, g, config):
        cn = decompose(g, config.edge)
        return _dumps(cn.to_dict()), True

    def matching(self, g, config):
        cn = decompose(g, config.edge)
        h = induced_bipartite(g, cn)
        m = maximum_matching(h)
        reach = alternating_reach(h, m, Side.RIGHT)
        counts = counting_identity_check(h, m, Side.RIGHT)
        violations = exclusion_violations(h, m, Side.RIGHT)
        payload = {
            'edge': list(config.edge),
            'm': m.size,
            'bipartite': h.to_dict(),
            'pairs': m.to_dict()['pairs'],
            'reach': reach.to_dict(h),
            'counting_identity': counts.to_dict(),
            'exclusion_violations': [list(v) for v in violations],
            'hall': hall_check(h, Side.LEFT).to_dict()
        }
        return _dumps(payload), counts.ok and not violations

    def spectrum(self, g, config):
        values = spectral.eigenvalues(spectral.normalized_laplacian(g), self.tol, self.max_sweeps)
        payload = {
            'spectrum': values,
            'components': len(connected_components(g)),
            'zero_multiplicity': spectral.zero_multiplicity(values, self.slack),
            'checks': None
        }
        consistent = payload['components'] == payload['zero_multiplicity']
        if is_connected(g) and g.n >= 2:
            rigidity = curvature.rigidity_check(g)
            checks = spectral.lambda1_checks(g, rigidity.min_edge_curvature, self.tol, self.slack, self.max_sweeps)
            payload['checks'] = checks.to_dict()
            consistent = consistent and checks.leq_bound_ok and checks.lichnerowicz_ok and checks.connected
        return _dumps(payload), consistent

    def _verify_graph(self, g):
        rigidity = curvature.rigidity_check(g)
        result = {'rigidity': rigidity.to_dict(), 'lambda1': None}
        consistent = rigidity.consistent
        if g.n >= 2:
            checks = spectral.lambda1_checks(g, rigidity.min_edge_curvature, self.tol, self.slack, self.max_sweeps)
            result['lambda1'] = checks.to_dict()
            consistent = consistent and checks.leq_bound_ok and checks.lichnerowicz_ok and checks.connected
        return result, consistent, rigidity.min_edge_curvature

    def verify(self, g, config):
        if g is not None:
            result, consistent, minimum = self._verify_graph(g)
            params = detect_srg(g)
            result['graph'] = {
                'n': g.n,
                'edges': g.edge_count,
                'regular_degree': is_regular(g),
                'diameter': _finite(diameter(g)),
                'girth': _finite(girth(g)),
                'srg': None if params is None else params.to_dict()
            }
            special = curvature.girth_special_cases(g)
            result['girth_formula'] = None if special is None else rational_to_dict(special)
            moore = curvature.moore_bound_check(g)
            result['moore'] = None if moore is None else moore.to_dict()
            if special is not None and minimum != special:
                logger.warning("girth formula gives %s but the minimum edge curvature is %s", special, minimum)
                consistent = False
            return _dumps(result), consistent

        seed = config.seed if config.seed is not None else self.default_seed
        generator = CorpusGenerator(seed)
        summary = VerifySummary()
        for index, graph in enumerate(generator.random_corpus(
                config.random_graphs, self.verify_max_vertices, self.verify_edge_probability)):
            _, consistent, _ = self._verify_graph(graph)
            summary.graphs += 1
            summary.complete += graph.edge_count == graph.n * (graph.n - 1) // 2
            if not consistent:
                summary.inconsistent.append(index)
        payload = {'seed': seed, **summary.to_dict()}
        return _dumps(payload), not summary.inconsistent

    def scan(self, g, config):
        rows = curvature.conjecture_scan(config.paley, threads=self.threads)
        return _dumps({'experimental': True, 'rows': [r.to_dict() for r in rows]}), True

    def generate(self, g, config):
        if config.format is OutputFormat.EDGELIST:
            return to_edge_list_text(g), True
        return to_json(g) + "\n", True

