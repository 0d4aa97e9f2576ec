"""Normalized Laplacian spectrum by cyclic Jacobi rotations"""
import logging
import math

import numpy as np

from src.models.spectral_models import Lambda1Report, SymMatrix
from src.ricci_service.errors import DegreeZero, Disconnected, NoConvergence, PreconditionViolated
from src.ricci_service.graph_core import is_connected

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_SLACK = 1e-9
MAX_SWEEPS = 100


def normalized_laplacian(g):
    """L = I - D^-1/2 A D^-1/2"""
    upper = {}
    for u in range(g.n):
        if g.degree(u) == 0:
            raise DegreeZero(u)
        upper[(u, u)] = 1.0
    for u, v in g.edges():
        upper[(u, v)] = -1.0 / math.sqrt(g.degree(u) * g.degree(v))
    return SymMatrix.from_upper(g.n, upper)


def _off_diagonal_norm(a):
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a, p, q):
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0


def eigenvalues(mat, tol=DEFAULT_TOL, max_sweeps=MAX_SWEEPS):
    """Ascending eigenvalues; sweeps until the off-diagonal norm drops below tol"""
    if tol <= 0:
        raise PreconditionViolated(f"tolerance must be positive, got {tol}")
    a = mat.entries.copy()
    n = mat.order
    for sweep in range(max_sweeps + 1):
        off = _off_diagonal_norm(a)
        if off < tol:
            logger.debug("Jacobi converged after %d sweeps (off-diagonal %.3e)", sweep, off)
            return sorted(float(v) for v in np.diag(a))
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, p, q)
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3e})")


def zero_multiplicity(spectrum, slack=DEFAULT_SLACK):
    return sum(1 for value in spectrum if abs(value) < slack)


def lambda1_checks(g, min_curvature, tol=DEFAULT_TOL, slack=DEFAULT_SLACK, max_sweeps=MAX_SWEEPS):
    """First nonzero eigenvalue against n/(n-1) and the curvature lower bound"""
    if not is_connected(g):
        raise Disconnected("lambda_1 checks need a connected graph")
    if g.n < 2:
        raise PreconditionViolated("lambda_1 needs at least two vertices")

    spectrum = eigenvalues(normalized_laplacian(g), tol, max_sweeps)
    lambda1 = spectrum[1]
    n = g.n
    spectral_connected = lambda1 > tol
    if not spectral_connected:
        logger.warning("graph is connected but lambda_1 = %.3e", lambda1)

    lichnerowicz_ok = min_curvature is None or min_curvature <= 0 or lambda1 >= float(min_curvature) - slack
    return Lambda1Report(
        lambda1=lambda1,
        leq_bound_ok=lambda1 <= n / (n - 1) + slack,
        lichnerowicz_ok=lichnerowicz_ok,
        connected=spectral_connected
    )
