"""Ollivier Ricci curvature of edges as an exact Lipschitz-function program.

For an edge ``x ~ y``::

    Ric(x, y) = min { Δf(x) - Δf(y) : f 1-Lipschitz, f(x) = 0, f(y) = 1 }

with Δ the unnormalised Laplacian.  ``Δf(x) - Δf(y)`` only reads ``f`` on the
closed balls ``B_1(x) ∪ B_1(y)``, and a function that is 1-Lipschitz for the
graph metric on any vertex subset extends to all of V (McShane), so the
program may be posed on a subset of vertices using full-graph distances.
Common neighbours of ``x`` and ``y`` have zero objective weight, so they can
be dropped too; that smallest support is the default.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels, lp
from .graph import Edge, Graph, GraphError
from .metrics import DistanceData, EdgeMeasure, all_pairs

SUPPORTS = ("core", "ball", "full")
ORACLE_BUDGET = 18


class OracleUnavailable(RuntimeError):
    """The enumeration oracle was asked for a support above its budget."""


def _edge_endpoints(graph: Graph, edge: Sequence[int]) -> tuple[int, int]:
    x, y = int(edge[0]), int(edge[1])
    if not (0 <= x < graph.n and 0 <= y < graph.n) or not graph.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge of the graph")
    return x, y


def objective_weights(graph: Graph, x: int, y: int) -> dict[int, int]:
    """Nonzero coefficients of ``f(z)`` in ``Δf(x) - Δf(y)``."""
    w: dict[int, int] = {}
    for z in graph.adjacency[x]:
        w[z] = w.get(z, 0) + 1
    w[x] = w.get(x, 0) - graph.degree(x)
    for z in graph.adjacency[y]:
        w[z] = w.get(z, 0) - 1
    w[y] = w.get(y, 0) + graph.degree(y)
    return {z: c for z, c in w.items() if c}


@dataclass(frozen=True)
class LipschitzLP:
    """The curvature program of edge ``(x, y)`` posed on ``support``.

    ``support`` lists vertices with ``x`` and ``y`` first; ``dist`` holds the
    full-graph distances between them and ``weights`` the objective
    coefficient of each support vertex.
    """

    x: int
    y: int
    support: tuple[int, ...]
    dist: tuple[tuple[int, ...], ...]
    weights: tuple[int, ...]

    @classmethod
    def build(
        cls, graph: Graph, x: int, y: int, data: DistanceData | None = None, support: str = "core"
    ) -> LipschitzLP:
        x, y = _edge_endpoints(graph, (x, y))
        data = data or all_pairs(graph)
        w = objective_weights(graph, x, y)
        if support == "core":
            rest = sorted(z for z in w if z not in (x, y))
        elif support == "ball":
            rest = sorted((graph.ball(x) | graph.ball(y)) - {x, y})
        elif support == "full":
            rest = [z for z in range(graph.n) if z not in (x, y)]
        else:
            raise ValueError(f"support must be one of {SUPPORTS}, got {support!r}")
        verts = (x, y, *rest)
        dist = tuple(tuple(data.dist[u][v] for v in verts) for u in verts)
        return cls(x, y, verts, dist, tuple(w.get(z, 0) for z in verts))

    def bounds(self) -> tuple[list[int], list[int]]:
        """Range of each support value forced by ``f(x) = 0`` and ``f(y) = 1``."""
        dx, dy = self.dist[0], self.dist[1]
        lo = [max(-dx[i], 1 - dy[i]) for i in range(len(self.support))]
        hi = [min(dx[i], 1 + dy[i]) for i in range(len(self.support))]
        return lo, hi

    def solve(self, backend: str | None = None) -> Fraction:
        """Exact optimum via the simplex on ``t = f - lo >= 0``.

        ``lo`` is itself 1-Lipschitz with ``lo(x) = 0`` and ``lo(y) = 1``, so
        ``t = 0`` is feasible and every right-hand side is nonnegative.
        """
        lo, hi = self.bounds()
        free = range(2, len(self.support))
        const = self.weights[1] + sum(self.weights[i] * lo[i] for i in free)
        cols = {i: j for j, i in enumerate(free)}
        k = len(cols)
        if k == 0:
            return Fraction(const)
        A: list[list[int]] = []
        b: list[int] = []
        for i in free:
            row = [0] * k
            row[cols[i]] = 1
            A.append(row)
            b.append(hi[i] - lo[i])
        for i in free:
            for j in free:
                if i == j:
                    continue
                rhs = self.dist[i][j] - lo[i] + lo[j]
                # implied by t_i <= hi_i - lo_i and t_j >= 0
                if hi[i] - lo[i] <= rhs:
                    continue
                row = [0] * k
                row[cols[i]] = 1
                row[cols[j]] = -1
                A.append(row)
                b.append(rhs)
        c = [self.weights[i] for i in free]
        res = lp.minimize(c, A, b, backend=backend)
        if res.status != "optimal":
            raise ArithmeticError(f"curvature program of edge ({self.x}, {self.y}) is {res.status}")
        return const + res.value


def ollivier_curvature(
    graph: Graph,
    edge: Sequence[int],
    data: DistanceData | None = None,
    support: str = "core",
    backend: str | None = None,
) -> Fraction:
    """Exact Ollivier curvature ``Ric(x, y)`` of an edge (symmetric in x, y)."""
    x, y = _edge_endpoints(graph, edge)
    return LipschitzLP.build(graph, x, y, data, support=support).solve(backend=backend)


def curvature_oracle(
    graph: Graph, edge: Sequence[int], data: DistanceData | None = None, backend: str | None = None
) -> Fraction:
    """Curvature by exhaustive search over integer ``f`` on the two closed balls.

    The constraint system ``f(u) - f(v) <= d(u, v)`` is a difference system
    with integer data, so its optimum is attained at an integer point; on
    ``B_1(x) ∪ B_1(y)`` with ``f(x) = 0``, ``f(y) = 1`` every value lies in
    ``{-1, 0, 1, 2}``.  The objective is read off the Laplacian directly.
    Raises :class:`OracleUnavailable` above :data:`ORACLE_BUDGET` vertices.
    """
    x, y = _edge_endpoints(graph, edge)
    data = data or all_pairs(graph)
    support = [x, y] + sorted((graph.ball(x) | graph.ball(y)) - {x, y})
    if len(support) > ORACLE_BUDGET:
        raise OracleUnavailable(
            f"edge ({x}, {y}) has {len(support)} support vertices, budget is {ORACLE_BUDGET}"
        )
    weights = [_laplacian_gap_of_indicator(graph, x, y, z) for z in support]
    dist = [[data.dist[u][v] for v in support] for u in support]
    lo = [0, 1] + [-1] * (len(support) - 2)
    hi = [0, 1] + [2] * (len(support) - 2)
    best = kernels.oracle_min(lo, hi, weights, dist, backend=backend)
    if best is None:
        raise ArithmeticError(f"no admissible f for edge ({x}, {y})")
    return Fraction(best)


def _laplacian_gap_of_indicator(graph: Graph, x: int, y: int, z: int) -> int:
    # Δ1_z(x) - Δ1_z(y), with Δf(v) = Σ_{w~v} (f(w) - f(v))
    def lap(v: int) -> int:
        fv = 1 if v == z else 0
        return sum((1 if w == z else 0) - fv for w in graph.adjacency[v])

    return lap(x) - lap(y)


def _curvature_chunk(args) -> list[tuple[Edge, Fraction]]:
    graph, data, edges, support, backend = args
    return [(e, ollivier_curvature(graph, e, data, support, backend)) for e in edges]


def curvature_all_edges(
    graph: Graph,
    data: DistanceData | None = None,
    workers: int = 1,
    support: str = "core",
    backend: str | None = None,
) -> EdgeMeasure:
    """Curvature of every edge; ``workers > 1`` spreads edges over processes.

    The result does not depend on ``workers``.
    """
    data = data or all_pairs(graph)
    edges = list(graph.edges)
    if workers is None or workers <= 0:
        workers = os.cpu_count() or 1
    if workers == 1 or len(edges) < 2:
        values = dict(_curvature_chunk((graph, data, edges, support, backend)))
    else:
        size = -(-len(edges) // workers)
        chunks = [edges[i : i + size] for i in range(0, len(edges), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_curvature_chunk, [(graph, data, ch, support, backend) for ch in chunks])
            values = {e: q for part in parts for e, q in part}
    return EdgeMeasure(graph, values)


def average_curvature_weighted(graph: Graph, g: EdgeMeasure, ric: EdgeMeasure) -> Fraction:
    """``Σ g(e) Ric(e) / Σ g(e)``."""
    edges = set(graph.edges)
    if set(g) != edges or set(ric) != edges:
        raise GraphError("edge measures do not match the graph's edge set")
    total = sum((Fraction(g[e]) for e in graph.edges), Fraction(0))
    if total <= 0:
        raise GraphError("betweenness weights sum to zero (graph has no edges)")
    return sum((Fraction(g[e]) * ric[e] for e in graph.edges), Fraction(0)) / total
