"""Distances, geodesic counts, averages and edge betweenness centrality.

Conventions: averages run over ordered vertex pairs including the diagonal
and divide by ``n**2``.  Betweenness ``g(e)`` is the probability that a
uniformly random geodesic between two uniformly random vertices (ordered,
independent) traverses ``e``; diagonal pairs contribute nothing.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import kernels
from .graph import Edge, Graph, GraphError

#: graphs with more vertices use floating point in :func:`edge_betweenness`
#: unless ``exact=True`` is passed
FLOAT_THRESHOLD = 2000


@dataclass(frozen=True)
class DistanceData:
    """All-pairs distances ``dist[u][v]`` and geodesic counts ``sigma[u][v]``."""

    dist: list[list[int]]
    sigma: list[list[int]]

    @property
    def n(self) -> int:
        return len(self.dist)

    def diameter(self) -> int:
        return max((max(row) for row in self.dist), default=0)

    def laplacian_of_distance(self, graph: Graph, z: int, v: int) -> int:
        """``Δ d(z,·)(v) = Σ_{w~v} (d(z,w) - d(z,v))``."""
        row = self.dist[z]
        dv = row[v]
        return sum(row[w] - dv for w in graph.adjacency[v])


def all_pairs(graph: Graph, backend: str | None = None) -> DistanceData:
    """BFS distances and exact geodesic counts between all vertex pairs.

    Raises :class:`~ricbound.graph.DisconnectedGraphError` naming an
    unreachable pair.
    """
    graph.require_connected()
    indptr, indices = graph.csr()
    dist, sigma = kernels.bfs_counts(graph.n, indptr, indices, backend=backend)
    return DistanceData(dist=dist, sigma=sigma)


def average_distance(graph: Graph, data: DistanceData | None = None) -> Fraction:
    data = data or all_pairs(graph)
    n = graph.n
    return Fraction(sum(map(sum, data.dist)), n * n)


def average_degree(graph: Graph) -> Fraction:
    if graph.n == 0:
        raise GraphError("average degree of the empty graph is undefined")
    return Fraction(2 * graph.m, graph.n)


def laplacian_degree(graph: Graph, data: DistanceData, x: int) -> int:
    """``Deg(x) = Δ d(x,·)(x)``, the degree computed through the Laplacian."""
    return data.laplacian_of_distance(graph, x, x)


class EdgeMeasure(Mapping):
    """Read-only map from canonical edges ``(u, v)``, ``u < v``, to rationals.

    Iteration follows the graph's canonical edge order.
    """

    def __init__(self, graph: Graph, values: Mapping[Edge, Fraction]):
        keys = set(values)
        if keys != set(graph.edges):
            missing = set(graph.edges) - keys
            extra = keys - set(graph.edges)
            raise GraphError(
                f"edge measure keys do not match the edge set "
                f"(missing {sorted(missing)[:3]}, extra {sorted(extra)[:3]})"
            )
        self._edges = graph.edges
        self._values = {e: values[e] for e in graph.edges}

    def __getitem__(self, edge: Edge) -> Fraction:
        u, v = edge
        return self._values[(u, v) if u < v else (v, u)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __repr__(self) -> str:
        return f"EdgeMeasure({len(self)} edges)"

    def total(self):
        return sum(self._values.values(), Fraction(0))

    def to_csv(self) -> str:
        lines = ["u,v,numerator,denominator"]
        for (u, v), q in self._values.items():
            q = Fraction(q)
            lines.append(f"{u},{v},{q.numerator},{q.denominator}")
        return "\n".join(lines) + "\n"

    def to_records(self) -> list[dict]:
        return [{"u": u, "v": v, "value": format_rational(q)} for (u, v), q in self._values.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records())


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def edge_betweenness(
    graph: Graph, data: DistanceData | None = None, exact: bool | None = None
) -> EdgeMeasure:
    """Edge betweenness ``g`` by per-source dependency accumulation.

    For a source ``s`` and a DAG edge ``v -> w`` (``d(s,w) = d(s,v) + 1``) the
    share of ``s``-geodesics through ``(v, w)``, summed over targets, is
    ``sigma_sv / sigma_sw * (1 + delta_s(w))`` with ``delta_s(v)`` the sum of
    those shares over the out-edges of ``v``.  Exact by default; with
    ``exact=False`` (default above :data:`FLOAT_THRESHOLD` vertices) the
    arithmetic is floating point.
    """
    data = data or all_pairs(graph)
    n = graph.n
    if exact is None:
        exact = n <= FLOAT_THRESHOLD
    one = Fraction(1) if exact else 1.0
    adjacency = graph.adjacency
    acc: dict[Edge, Fraction | float] = {e: 0 for e in graph.edges}
    for s in range(n):
        d = data.dist[s]
        sig = data.sigma[s]
        order = sorted(range(n), key=d.__getitem__, reverse=True)
        delta = [0] * n
        for w in order:
            if w == s:
                continue
            share = (one + delta[w]) / sig[w]
            dw = d[w] - 1
            for v in adjacency[w]:
                if d[v] == dw:
                    c = sig[v] * share
                    delta[v] += c
                    acc[(v, w) if v < w else (w, v)] += c
    norm = n * n
    return EdgeMeasure(graph, {e: val / norm for e, val in acc.items()})


def edge_betweenness_naive(graph: Graph) -> EdgeMeasure:
    """Reference ``g`` from explicit enumeration of every geodesic.

    Walks all shortest paths between every ordered pair, counts how many use
    each edge, and averages.  Exponential in the diameter; for small graphs.
    """
    graph.require_connected()
    n = graph.n
    dist = _bfs_distances(graph)
    acc = {e: Fraction(0) for e in graph.edges}
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            paths: list[list[int]] = []
            _walk_geodesics(graph, dist, y, [x], paths)
            for path in paths:
                for a, b in zip(path, path[1:]):
                    acc[(a, b) if a < b else (b, a)] += Fraction(1, len(paths))
    return EdgeMeasure(graph, {e: q / (n * n) for e, q in acc.items()})


def _bfs_distances(graph: Graph) -> list[list[int]]:
    out = []
    for s in range(graph.n):
        d = [-1] * graph.n
        d[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in graph.adjacency[u]:
                    if d[w] < 0:
                        d[w] = d[u] + 1
                        nxt.append(w)
            frontier = nxt
        out.append(d)
    return out


def _walk_geodesics(graph, dist, target, path, out) -> None:
    u = path[-1]
    if u == target:
        out.append(list(path))
        return
    for w in graph.adjacency[u]:
        if dist[w][target] == dist[u][target] - 1:
            path.append(w)
            _walk_geodesics(graph, dist, target, path, out)
            path.pop()
