"""
Integer min-cost flow by successive shortest augmenting paths.

Dijkstra runs on reduced costs, so arc costs must be non-negative when the
network is built. Node potentials are kept after the solve; on an optimal flow
they satisfy complementary slackness and serve as the dual solution.
"""
import heapq
import logging

logger = logging.getLogger(__name__)

INFINITY = 10**18


class Arc:
    def __init__(self, dst, cap, cost, rev):
        self.dst = dst
        self.cap = cap
        self.cost = cost
        self.flow = 0
        self.rev = rev

    @property
    def residual(self):
        return self.cap - self.flow


class FlowNetwork:
    def __init__(self):
        self.arcs = []
        self.potential = []

    def add_node(self):
        self.arcs.append([])
        self.potential.append(0)
        return len(self.arcs) - 1

    def add_arc(self, src, dst, *, cap, cost):
        if cost < 0:
            raise ValueError(f"negative arc cost {cost} on ({src}, {dst})")
        forward = Arc(dst, cap, cost, len(self.arcs[dst]))
        backward = Arc(src, 0, -cost, len(self.arcs[src]))
        self.arcs[src].append(forward)
        self.arcs[dst].append(backward)
        return forward

    def _shortest_paths(self, source):
        n = len(self.arcs)
        dist = [INFINITY] * n
        parent = [None] * n
        dist[source] = 0
        heap = [(0, source)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for index, arc in enumerate(self.arcs[u]):
                if arc.residual <= 0:
                    continue
                reduced = arc.cost + self.potential[u] - self.potential[arc.dst]
                candidate = d + reduced
                if candidate < dist[arc.dst]:
                    dist[arc.dst] = candidate
                    parent[arc.dst] = (u, index)
                    heapq.heappush(heap, (candidate, arc.dst))
        return dist, parent

    def _update_potential(self, dist):
        reached = [d for d in dist if d < INFINITY]
        ceiling = max(reached) if reached else 0
        for v, d in enumerate(dist):
            self.potential[v] += d if d < INFINITY else ceiling

    def min_cost_flow(self, source, sink, required):
        """Send `required` units from source to sink; returns (flow, cost)"""
        flow = cost = rounds = 0
        while flow < required:
            dist, parent = self._shortest_paths(source)
            if dist[sink] >= INFINITY:
                break
            self._update_potential(dist)

            push = required - flow
            v = sink
            while v != source:
                u, index = parent[v]
                push = min(push, self.arcs[u][index].residual)
                v = u

            v = sink
            while v != source:
                u, index = parent[v]
                arc = self.arcs[u][index]
                arc.flow += push
                self.arcs[v][arc.rev].flow -= push
                cost += push * arc.cost
                v = u

            flow += push
            rounds += 1
        logger.debug("min-cost flow: %d units, cost %d, %d augmentations", flow, cost, rounds)
        return flow, cost
