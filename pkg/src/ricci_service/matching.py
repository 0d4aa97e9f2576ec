"""Maximum bipartite matching and alternating-path reachability.

Matchings are grown by repeated augmenting-path search from left vertices in a
fixed order, so the matched pairs are reproducible. Every result is checked for
the absence of augmenting paths before it is returned.
"""
import logging
from collections import deque

from src.models.graph_models import AlternatingReach, CountingCheck, HallResult, Matching, Side
from src.ricci_service.errors import CertificateError, PreconditionViolated

logger = logging.getLogger(__name__)


def _augment_from(h, i, mate_left, mate_right, visited):
    for j in h.neighbors(Side.LEFT, i):
        if j in visited:
            continue
        visited.add(j)
        if j not in mate_right or _augment_from(h, mate_right[j], mate_left, mate_right, visited):
            mate_left[i] = j
            mate_right[j] = i
            return True
    return False


def maximum_matching(h, order=None):
    """Maximum-cardinality matching; `order` overrides the left processing order"""
    mate_left, mate_right = {}, {}
    for i in (order if order is not None else range(len(h.left))):
        _augment_from(h, i, mate_left, mate_right, set())

    matching = Matching(h, mate_left.items())
    path = find_augmenting_path(h, matching)
    if path is not None:
        raise CertificateError(f"matching of size {matching.size} admits augmenting path {path}")
    return matching


def alternating_reach(h, m, side):
    """Vertices on alternating paths that start at unmatched vertices of `side`"""
    reach = _alternating_search(h, m, side)
    return AlternatingReach(side, frozenset(reach['s']), frozenset(reach['t']))


def _alternating_search(h, m, side):
    s_mates = m.mates(side)
    t_mates = m.mates(side.other)
    seeds = m.unmatched(side)
    parent = {('s', k): None for k in seeds}
    reach_s, reach_t = set(seeds), set()
    terminal = None
    queue = deque(seeds)
    while queue:
        s = queue.popleft()
        for t in h.neighbors(side, s):
            if s_mates.get(s) == t or t in reach_t:
                continue
            reach_t.add(t)
            parent[('t', t)] = ('s', s)
            mate = t_mates.get(t)
            if mate is None:
                if terminal is None:
                    terminal = t
                continue
            if mate not in reach_s:
                reach_s.add(mate)
                parent[('s', mate)] = ('t', t)
                queue.append(mate)
    return {'s': reach_s, 't': reach_t, 'terminal': terminal, 'parent': parent}


def find_augmenting_path(h, m):
    """An augmenting path as local (side, index) steps, or None (Berge)"""
    search = _alternating_search(h, m, Side.LEFT)
    if search['terminal'] is None:
        return None
    path = []
    node = ('t', search['terminal'])
    while node is not None:
        kind, index = node
        path.append((Side.LEFT if kind == 's' else Side.RIGHT, index))
        node = search['parent'][node]
    return list(reversed(path))


def is_maximum(h, m):
    return find_augmenting_path(h, m) is None


def counting_identity_check(h, m, side):
    """|A_S(S)| = |A_S(T)| + |S| - m for a maximum matching"""
    if not is_maximum(h, m):
        raise PreconditionViolated("counting identity requires a maximum matching")
    reach = alternating_reach(h, m, side)
    s_size = h.size(side)
    ok = len(reach.reach_s) == len(reach.reach_t) + s_size - m.size
    return CountingCheck(ok, len(reach.reach_s), len(reach.reach_t), s_size, m.size)


def exclusion_violations(h, m, side):
    """Host edges between (T minus A_S(T)) and A_S(S); empty for a maximum matching"""
    reach = alternating_reach(h, m, side)
    other = side.other
    violations = []
    for s in sorted(reach.reach_s):
        for t in h.neighbors(side, s):
            if t not in reach.reach_t:
                violations.append((h.side(side)[s], h.side(other)[t]))
    return violations


def hall_check(h, side):
    """Whether some matching covers `side`; otherwise a deficient subset of it"""
    m = maximum_matching(h)
    if m.size == h.size(side):
        return HallResult(True)

    reach = alternating_reach(h, m, side)
    witness = reach.reach_s
    neighborhood = {t for s in witness for t in h.neighbors(side, s)}
    if len(neighborhood) >= len(witness):
        raise CertificateError(
            f"Hall witness of size {len(witness)} has {len(neighborhood)} neighbors"
        )
    ids = h.side(side)
    return HallResult(False, tuple(sorted(ids[k] for k in witness)))
