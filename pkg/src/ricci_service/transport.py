"""Exact optimal transport between vertex measures.

All masses are Fractions. The Wasserstein-1 distance is solved as an integer
min-cost flow after scaling both measures by the lcm of their denominators;
the flow's node potentials are turned into a 1-Lipschitz Kantorovich potential
and the solution is accepted only when its dual value equals the plan cost.
"""
import itertools
import logging
import math
from fractions import Fraction

from src.models.graph_models import UNREACHABLE, Side
from src.models.transport_models import Measure, PlanCheck, Potential, TransportPlan, TransportSolution
from src.ricci_service.errors import (
    CertificateError, DegreeZero, InvalidPairing, NotLipschitz, PreconditionViolated, Unreachable
)
from src.ricci_service.matching import alternating_reach, is_maximum
from src.ricci_service.min_cost_flow import FlowNetwork

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def lazy_measure(g, x, eps):
    """1 - eps at x and eps / deg(x) on each neighbor"""
    eps = Fraction(eps)
    if not 0 <= eps <= 1:
        raise PreconditionViolated(f"eps must lie in [0, 1], got {eps}")
    degree = g.degree(x)
    if degree == 0:
        if eps > 0:
            raise DegreeZero(x)
        return Measure({x: 1})
    masses = {x: 1 - eps}
    share = eps / degree
    for v in g.adj(x):
        masses[v] = share
    return Measure(masses)


def plan_cost(g, plan):
    total = Fraction(0)
    for (u, v), mass in plan.entries.items():
        distance = g.dist[u][v]
        if distance == UNREACHABLE:
            raise Unreachable(f"plan moves mass between disconnected vertices {u} and {v}")
        total += distance * mass
    return total


def verify_plan(plan):
    """Check non-negativity and both marginals exactly"""
    violations = []
    for (u, v), mass in plan.entries.items():
        if mass < 0:
            violations.append(f"negative entry {mass} at ({u}, {v})")

    rows = plan.row_marginal()
    for vertex in sorted(set(rows) | set(plan.source.support)):
        got, want = rows.get(vertex, Fraction(0)), plan.source[vertex]
        if got != want:
            violations.append(f"row marginal at vertex {vertex} is {got}, expected {want}")

    columns = plan.column_marginal()
    for vertex in sorted(set(columns) | set(plan.target.support)):
        got, want = columns.get(vertex, Fraction(0)), plan.target[vertex]
        if got != want:
            violations.append(f"column marginal at vertex {vertex} is {got}, expected {want}")

    return PlanCheck(not violations, violations)


def check_lipschitz(g, f):
    """First pair (u, v) of the domain with |f(u) - f(v)| > rho(u, v), or None"""
    for u, v in itertools.combinations(f.domain(), 2):
        distance = g.dist[u][v]
        if distance == UNREACHABLE:
            continue
        if abs(f[u] - f[v]) > distance:
            return (u, v)
    return None


def dual_bound(g, f, mu, nu):
    """Kantorovich lower bound sum f(z) (mu(z) - nu(z)) for a 1-Lipschitz f"""
    missing = sorted((set(mu.support) | set(nu.support)) - set(f.domain()))
    if missing:
        raise PreconditionViolated(f"potential is undefined on support vertices {missing}")
    witness = check_lipschitz(g, f)
    if witness is not None:
        u, v = witness
        raise NotLipschitz(u, v, abs(f[u] - f[v]), g.dist[u][v])
    return sum((f[z] * (mu[z] - nu[z]) for z in set(mu.support) | set(nu.support)), Fraction(0))


def _check_same_component(g, mu, nu):
    vertices = sorted(set(mu.support) | set(nu.support))
    anchor = vertices[0]
    for v in vertices[1:]:
        if g.dist[anchor][v] == UNREACHABLE:
            raise Unreachable(f"measure supports span different components ({anchor} and {v})")


def solve_transport(g, mu, nu):
    """Optimal value, plan and potential for W1(mu, nu)"""
    _check_same_component(g, mu, nu)

    vertices = sorted(set(mu.support) | set(nu.support))
    scale = 1
    for vertex in vertices:
        scale = math.lcm(scale, mu[vertex].denominator, nu[vertex].denominator)

    entries = {}
    supply, demand = {}, {}
    for vertex in vertices:
        shared = min(mu[vertex], nu[vertex])
        if shared:
            entries[(vertex, vertex)] = shared
        excess = int((mu[vertex] - nu[vertex]) * scale)
        if excess > 0:
            supply[vertex] = excess
        elif excess < 0:
            demand[vertex] = -excess

    total = sum(supply.values())
    potential_values = {v: 0 for v in vertices}
    if total:
        network = FlowNetwork()
        source, sink = network.add_node(), network.add_node()
        nodes = {}
        for vertex, amount in supply.items():
            nodes[('s', vertex)] = network.add_node()
            network.add_arc(source, nodes[('s', vertex)], cap=amount, cost=0)
        for vertex, amount in demand.items():
            nodes[('t', vertex)] = network.add_node()
            network.add_arc(nodes[('t', vertex)], sink, cap=amount, cost=0)
        arcs = {}
        for u in supply:
            for v in demand:
                arcs[(u, v)] = network.add_arc(
                    nodes[('s', u)], nodes[('t', v)], cap=total + 1, cost=g.dist[u][v]
                )

        flow, _ = network.min_cost_flow(source, sink, total)
        if flow != total:
            raise CertificateError(f"flow solver shipped {flow} of {total} units")

        for pair, arc in arcs.items():
            if arc.flow:
                entries[pair] = Fraction(arc.flow, scale)

        # node potentials give f = -pi on sources and sinks; extend from the sinks
        sink_values = {v: -network.potential[nodes[('t', v)]] for v in demand}
        for z in vertices:
            potential_values[z] = min(value + g.dist[z][v] for v, value in sink_values.items())

    plan = TransportPlan(entries, mu, nu)
    potential = Potential(potential_values)
    value = plan_cost(g, plan)
    dual = dual_bound(g, potential, mu, nu)
    if dual != value:
        raise CertificateError(f"duality gap: plan cost {value} but potential gives {dual}")
    check = verify_plan(plan)
    if not check.ok:
        raise CertificateError("flow plan fails marginals: " + "; ".join(check.violations))
    return TransportSolution(value, plan, potential)


def wasserstein(g, mu, nu):
    solution = solve_transport(g, mu, nu)
    return solution.value, solution.plan


def two_step_pairing(g, cn, m):
    """Pair unmatched N_x and N_y vertices in ascending order, each at distance 2"""
    matched_x = {cn.nx[i] for i, _ in m.pairs}
    matched_y = {cn.ny[j] for _, j in m.pairs}
    unmatched_x = [v for v in cn.nx if v not in matched_x]
    unmatched_y = [v for v in cn.ny if v not in matched_y]
    pairing = list(zip(unmatched_x, unmatched_y))
    for u, v in pairing:
        if g.dist[u][v] != 2:
            raise InvalidPairing(f"unmatched vertices {u} and {v} are at distance {g.dist[u][v]}, not 2")
    return pairing


def _half_measures(cn):
    dx = cn.degree_x
    dy = 1 + len(cn.triangle) + len(cn.ny)
    if dx != dy:
        raise PreconditionViolated(f"endpoint degrees differ ({dx} vs {dy})")
    share = Fraction(1, 2 * dx)
    mu = {cn.x: HALF, cn.y: share}
    nu = {cn.y: HALF, cn.x: share}
    for v in cn.triangle:
        mu[v] = nu[v] = share
    for v in cn.nx:
        mu[v] = share
    for v in cn.ny:
        nu[v] = share
    return Measure(mu), Measure(nu), dx


def srg_plan(cn, m, pairing, graph=None):
    """Transport plan that moves excess mass from x to y and the rest along matchings"""
    mu, nu, d = _half_measures(cn)
    share = Fraction(1, 2 * d)

    matched = m.parent_pairs()
    unmatched_x = sorted(set(cn.nx) - {u for u, _ in matched})
    unmatched_y = sorted(set(cn.ny) - {v for _, v in matched})
    firsts = [u for u, _ in pairing]
    seconds = [v for _, v in pairing]
    if sorted(firsts) != unmatched_x or sorted(seconds) != unmatched_y:
        raise InvalidPairing(
            f"pairing {pairing} is not a bijection between {unmatched_x} and {unmatched_y}"
        )
    if graph is not None:
        for u, v in pairing:
            if graph.dist[u][v] != 2:
                raise InvalidPairing(f"paired vertices {u} and {v} are not at distance 2")

    entries = {(cn.x, cn.y): HALF - share}
    for v in (cn.x, cn.y) + cn.triangle:
        entries[(v, v)] = share
    for pair in matched:
        entries[pair] = share
    for pair in pairing:
        entries[pair] = share
    return TransportPlan(entries, mu, nu)


def srg_potential(cn, h, m):
    """Kantorovich potential built from alternating paths initiated in N_y"""
    if not is_maximum(h, m):
        raise PreconditionViolated("potential construction requires a maximum matching")
    reach = alternating_reach(h, m, Side.RIGHT)
    values = {v: 0 for v in cn.vertices()}
    values[cn.x] = 1
    for i, v in enumerate(cn.nx):
        if i not in reach.reach_t:
            values[v] = 1
    for j in reach.reach_s:
        values[cn.ny[j]] = -1
    return Potential(values)
