"""Core neighborhood of an edge and the bipartite graph between N_x and N_y"""
from src.models.graph_models import BipartiteGraph, CoreNeighborhood
from src.ricci_service.errors import NotAnEdge


def decompose(g, edge):
    x, y = edge
    if not g.has_edge(x, y):
        raise NotAnEdge(x, y)

    gx, gy = g.neighbors(x), g.neighbors(y)
    triangle = gx & gy
    nx = gx - triangle - {y}
    ny = gy - triangle - {x}
    dx, dy = g.dist[x], g.dist[y]
    pentagon = [v for v in range(g.n) if dx[v] == 2 and dy[v] == 2]

    return CoreNeighborhood(
        x=x,
        y=y,
        triangle=tuple(sorted(triangle)),
        nx=tuple(sorted(nx)),
        ny=tuple(sorted(ny)),
        pentagon=tuple(pentagon)
    )


def induced_bipartite(g, cn):
    edges = [(i, j) for i, u in enumerate(cn.nx) for j, v in enumerate(cn.ny) if g.has_edge(u, v)]
    return BipartiteGraph(cn.nx, cn.ny, edges)
