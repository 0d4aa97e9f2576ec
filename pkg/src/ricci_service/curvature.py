"""Edge curvature: eps-Ollivier, condensed, and the matching formula with certificates"""
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from src.models.curvature_models import (
    Certificate, ConjectureRow, CurvatureMethod, CurvatureProfile, CurvatureReport,
    MooreCheck, RigidityReport, ScaledCurvature
)
from src.models.graph_models import Side
from src.ricci_service.errors import (
    CertificateError, Disconnected, InvalidMatchingSize, IrregularGraph, NotAnEdge,
    PreconditionViolated, UnsupportedGraph, UnsupportedParameter
)
from src.ricci_service.generators import is_prime, paley
from src.ricci_service.graph_core import detect_srg, diameter, girth, is_connected, is_regular
from src.ricci_service.matching import hall_check, maximum_matching
from src.ricci_service.neighborhood import decompose, induced_bipartite
from src.ricci_service.transport import (
    HALF, dual_bound, lazy_measure, plan_cost, solve_transport, srg_plan, srg_potential,
    two_step_pairing, verify_plan
)

logger = logging.getLogger(__name__)


def _require_edge(g, edge):
    x, y = edge
    if not g.has_edge(x, y):
        raise NotAnEdge(x, y)
    return x, y


def _solve_edge(g, edge, eps):
    x, y = _require_edge(g, edge)
    return solve_transport(g, lazy_measure(g, x, eps), lazy_measure(g, y, eps))


def kappa_eps(g, edge, eps):
    """1 - W(m_x^eps, m_y^eps); rho(x, y) = 1 along an edge"""
    return 1 - _solve_edge(g, edge, Fraction(eps)).value


def scaled_curvature(g, edge, eps):
    """kappa_eps / eps, evaluated at eps and eps / 2 to expose nonlinearity"""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise PreconditionViolated(f"scaled curvature needs 0 < eps <= 1, got {eps}")
    half = eps / 2
    return ScaledCurvature(eps, kappa_eps(g, edge, eps) / eps, kappa_eps(g, edge, half) / half, tuple(edge))


def condensed(g, edge, eps=None, verify_linearity=False):
    """Condensed curvature 2 * kappa_{1/2} on regular graphs, or kappa_eps / eps on request"""
    if eps is None:
        if is_regular(g) is None:
            raise IrregularGraph("condensed curvature is defined here for regular graphs; pass eps to scale kappa_eps")
        value = 2 * kappa_eps(g, edge, HALF)
        if verify_linearity and 4 * kappa_eps(g, edge, Fraction(1, 4)) != value:
            raise CertificateError(f"kappa_1/4 != condensed / 4 on edge {tuple(edge)}")
        return value

    scaled = scaled_curvature(g, edge, eps)
    if verify_linearity and not scaled.linear:
        raise CertificateError(
            f"kappa_eps / eps is not linear on edge {tuple(edge)}: {scaled.value} vs {scaled.half_value}"
        )
    return scaled.value


def matching_formula(d, alpha, m):
    """(alpha + 2) / d - (|N_x| - m) / d with |N_x| = d - alpha - 1"""
    nx = d - alpha - 1
    if not 0 <= m <= nx:
        raise InvalidMatchingSize(f"matching size {m} outside 0..{nx}")
    return Fraction(alpha + 2, d) - Fraction(nx - m, d)


def srg_formula(params, m):
    """Edge curvature of an SRG whose edge neighborhood has a maximum matching of size m"""
    return matching_formula(params.d, params.alpha, m)


def matching_formula_applies(g):
    """Regular and of diameter at most 2 (covers every strongly regular graph)"""
    d = is_regular(g)
    return d is not None and d > 0 and diameter(g) <= 2


def srg_curvature_certified(g, edge):
    """Matching formula for one edge, pinched by an explicit plan and potential"""
    if not matching_formula_applies(g):
        raise UnsupportedGraph("matching formula needs a regular graph of diameter at most 2")
    x, y = _require_edge(g, edge)

    cn = decompose(g, (x, y))
    h = induced_bipartite(g, cn)
    m = maximum_matching(h)
    pairing = two_step_pairing(g, cn, m)
    plan = srg_plan(cn, m, pairing, graph=g)
    check = verify_plan(plan)
    if not check.ok:
        raise CertificateError(f"explicit plan on {(x, y)} fails marginals: " + "; ".join(check.violations))

    mu, nu = lazy_measure(g, x, HALF), lazy_measure(g, y, HALF)
    if plan.source != mu or plan.target != nu:
        raise CertificateError(f"explicit plan on {(x, y)} is not built on the lazy measures")
    cost = plan_cost(g, plan)
    potential = srg_potential(cn, h, m)
    dual = dual_bound(g, potential, mu, nu)
    w1 = solve_transport(g, mu, nu).value
    gap_zero = cost == dual == w1
    if not gap_zero:
        raise CertificateError(f"edge {(x, y)}: plan cost {cost}, potential {dual}, flow {w1} disagree")

    value = 2 * (1 - w1)
    params = detect_srg(g)
    if params is not None:
        formula = srg_formula(params, m.size)
    else:
        formula = matching_formula(g.degree(x), len(cn.triangle), m.size)
    if formula != value:
        raise CertificateError(f"edge {(x, y)}: matching formula gives {formula}, flow gives {value}")

    logger.debug("edge %s: m=%d condensed=%s", (x, y), m.size, value)
    return CurvatureReport(
        edge=(x, y),
        eps=HALF,
        w1=w1,
        kappa_eps=1 - w1,
        condensed=value,
        method=CurvatureMethod.BOTH,
        certificate=Certificate(cost, dual, gap_zero, tuple(m.parent_pairs()), tuple(pairing), plan, potential),
        matching_size=m.size
    )


def flow_curvature_report(g, edge, eps=None):
    """Report from the generic solver alone; eps switches to the scaled value"""
    x, y = _require_edge(g, edge)
    if eps is None:
        if is_regular(g) is None:
            raise IrregularGraph("graph is irregular; pass eps to report kappa_eps / eps")
        eps_used = HALF
    else:
        eps_used = Fraction(eps)
        if not 0 < eps_used <= 1:
            raise PreconditionViolated(f"eps must lie in (0, 1], got {eps_used}")

    solution = _solve_edge(g, (x, y), eps_used)
    kappa = 1 - solution.value
    mu, nu = solution.plan.source, solution.plan.target
    dual = dual_bound(g, solution.potential, mu, nu)
    return CurvatureReport(
        edge=(x, y),
        eps=eps_used,
        w1=solution.value,
        kappa_eps=kappa,
        condensed=kappa / eps_used,
        method=CurvatureMethod.FLOW,
        certificate=Certificate(solution.value, dual, dual == solution.value),
        scaled=eps is not None
    )


def edge_report(g, edge, certify=True, eps=None):
    if eps is None and certify and matching_formula_applies(g):
        return srg_curvature_certified(g, edge)
    return flow_curvature_report(g, edge, eps)


def curvature_profile(g, threads=1, certify=True, eps=None):
    """Reports for every edge in lexicographic order, with exact summary values"""
    if not is_connected(g):
        raise Disconnected("curvature profile needs a connected graph")

    edges = g.edges()
    if threads > 1 and len(edges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda e: edge_report(g, e, certify, eps), edges))
            linearity = [] if eps is None else list(pool.map(lambda e: scaled_curvature(g, e, eps), edges))
    else:
        reports = [edge_report(g, e, certify, eps) for e in edges]
        linearity = [] if eps is None else [scaled_curvature(g, e, eps) for e in edges]

    profile = CurvatureProfile(reports, linearity=linearity)
    nonlinear = [s.edge for s in linearity if not s.linear]
    if nonlinear:
        logger.info("kappa_eps / eps changes between eps and eps / 2 on %d edges", len(nonlinear))
    if reports:
        values = [r.condensed for r in reports]
        profile.minimum = min(values)
        profile.maximum = max(values)
        profile.mean = sum(values, Fraction(0)) / len(values)
        profile.uniform = profile.minimum == profile.maximum
        if not profile.uniform and detect_srg(g) is not None:
            logger.warning("strongly regular graph with non-uniform edge curvature: %s..%s",
                           profile.minimum, profile.maximum)
    logger.info("profiled %d edges on %d vertices", len(reports), g.n)
    return profile


def _edge_curvature(g, edge):
    """2 * kappa_{1/2}, checked against 4 * kappa_{1/4}.

    For any edge xy both values lie in the linear range [0, L/(L+1)],
    L = lcm(deg x, deg y), so this is the condensed curvature for irregular
    graphs as well.
    """
    value = 2 * kappa_eps(g, edge, HALF)
    if 4 * kappa_eps(g, edge, Fraction(1, 4)) != value:
        raise CertificateError(f"kappa_eps is not linear below 1/2 on edge {tuple(edge)}")
    return value


def rigidity_check(g):
    """Complete iff every edge has condensed curvature > 1"""
    if not is_connected(g):
        raise Disconnected("rigidity check needs a connected graph")
    is_complete = g.edge_count == g.n * (g.n - 1) // 2
    values = [_edge_curvature(g, e) for e in g.edges()]
    minimum = min(values) if values else None
    all_above_one = all(v > 1 for v in values)
    consistent = is_complete == all_above_one
    if not consistent:
        logger.warning("rigidity inconsistency on %r: complete=%s min=%s", g, is_complete, minimum)
    return RigidityReport(is_complete, minimum, consistent)


def girth_special_cases(g):
    """3/d - 1 for girth-5 and 2/d for girth-4 strongly regular graphs"""
    params = detect_srg(g)
    if params is None:
        return None
    gi = girth(g)
    if gi == 5:
        return Fraction(3, params.d) - 1
    if gi == 4:
        return Fraction(2, params.d)
    return None


def moore_bound_check(g):
    """Moore bound and curvature sign for a girth-5 strongly regular graph"""
    params = detect_srg(g)
    if params is None or girth(g) != 5:
        return None
    return MooreCheck(
        params=params,
        girth=5,
        meets_moore_bound=params.n == params.d ** 2 + 1,
        curvature=Fraction(3, params.d) - 1
    )


def _validate_paley_q(q):
    if not is_prime(q) or q % 4 != 1:
        raise UnsupportedParameter(f"q = {q} is not a prime congruent to 1 mod 4")
    if (q - 1) // 4 < 2:
        raise UnsupportedParameter(f"q = {q} gives beta = {(q - 1) // 4} < 2")


def conjecture_scan(q_list, threads=1):
    """Compare Paley-graph curvature with 1/2 + 1/(2 beta); reported, never asserted"""
    for q in q_list:
        _validate_paley_q(q)

    rows = []
    for q in q_list:
        g = paley(q)
        params = detect_srg(g)
        if params is None or not params.is_conference:
            raise CertificateError(f"paley({q}) is not a conference graph: {params}")

        perfect = all(
            hall_check(induced_bipartite(g, decompose(g, e)), Side.LEFT).satisfied for e in g.edges()
        )
        profile = curvature_profile(g, threads=threads)
        conjectured = Fraction(1, 2) + Fraction(1, 2 * params.beta)
        row = ConjectureRow(
            q=q,
            params=params,
            perfect_matching_everywhere=perfect,
            curvature=profile.minimum if profile.uniform else None,
            conjectured=conjectured,
            uniform=profile.uniform
        )
        if not row.agrees:
            logger.warning("paley(%d): curvature %s differs from conjectured %s", q, row.curvature, conjectured)
        rows.append(row)
    return rows
