"""Equality case of the curvature/distance bound: sharpness, reflections, parallel edges.

Notation for an edge ``x ~ y``: ``V_x^y`` are the vertices strictly closer to
``x`` than to ``y``, ``V^{xy}`` the equidistant ones.  A reflection from ``x``
to ``y`` is a permutation ``phi`` with

    (a) phi(x) = y
    (b) phi fixes V^{xy} pointwise
    (c) phi o phi = id
    (d) the cut E(V_x^y, V_y^x) is exactly {(z, phi(z)) : z in V_x^y}
    (e) phi is a graph automorphism

and a graph is reflective when every edge has one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .curvature import curvature_all_edges, ollivier_curvature
from .graph import Edge, Graph, GraphError
from .metrics import DistanceData, all_pairs


@dataclass(frozen=True)
class SeparationSets:
    side_x: frozenset[int]
    side_y: frozenset[int]
    middle: frozenset[int]


def _require_edge(graph: Graph, x: int, y: int) -> None:
    if not (0 <= x < graph.n and 0 <= y < graph.n) or not graph.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge of the graph")


def separation_sets(graph: Graph, x: int, y: int, data: DistanceData | None = None) -> SeparationSets:
    _require_edge(graph, x, y)
    data = data or all_pairs(graph)
    dx, dy = data.dist[x], data.dist[y]
    side_x, side_y, middle = [], [], []
    for z in range(graph.n):
        if dx[z] < dy[z]:
            side_x.append(z)
        elif dy[z] < dx[z]:
            side_y.append(z)
        else:
            middle.append(z)
    return SeparationSets(frozenset(side_x), frozenset(side_y), frozenset(middle))


@dataclass(frozen=True)
class Reflection:
    edge: Edge
    phi: tuple[int, ...]

    ok = True


@dataclass(frozen=True)
class ReflectionFailure:
    edge: Edge
    reason: str

    ok = False
    phi = None


def verify_reflection(
    graph: Graph, x: int, y: int, phi: Sequence[int], data: DistanceData | None = None
) -> dict[str, bool]:
    """Check each reflection axiom separately; keys ``"a"`` .. ``"e"``."""
    sep = separation_sets(graph, x, y, data)
    n = graph.n
    is_perm = len(phi) == n and sorted(phi) == list(range(n))
    cut = {
        (u, v) if u in sep.side_x else (v, u)
        for u, v in graph.edges
        if (u in sep.side_x and v in sep.side_y) or (v in sep.side_x and u in sep.side_y)
    }
    return {
        "a": phi[x] == y,
        "b": all(phi[z] == z for z in sep.middle),
        "c": is_perm and all(phi[phi[z]] == z for z in range(n)),
        "d": cut == {(z, phi[z]) for z in sep.side_x},
        "e": is_perm and all(graph.has_edge(phi[u], phi[v]) for u, v in graph.edges),
    }


def candidate_reflection(
    graph: Graph, x: int, y: int, data: DistanceData | None = None
) -> Reflection | ReflectionFailure:
    """The only map that could be a reflection from ``x`` to ``y``, verified.

    The axioms leave no freedom.  By (d) every ``z`` in ``V_x^y`` has exactly
    one neighbour in ``V_y^x``, namely ``phi(z)``.  Since phi is an
    automorphism swapping x and y, ``d(x, phi(z)) = d(y, z)``, so phi maps
    ``V_y^x`` into ``V_x^y``, and by (c) it is the inverse of the map just
    described.  (b) fixes the middle.  Hence this candidate fails exactly
    when no reflection exists.
    """
    data = data or all_pairs(graph)
    sep = separation_sets(graph, x, y, data)
    edge = (x, y)
    phi = list(range(graph.n))
    for side, other in ((sep.side_x, sep.side_y), (sep.side_y, sep.side_x)):
        for z in sorted(side):
            partners = [w for w in graph.adjacency[z] if w in other]
            if len(partners) != 1:
                return ReflectionFailure(
                    edge,
                    f"cut not a perfect matching: vertex {z} has {len(partners)} "
                    f"neighbours across the cut",
                )
            phi[z] = partners[0]
    checks = verify_reflection(graph, x, y, phi, data)
    names = {
        "a": "phi(x) != y",
        "b": "middle not fixed",
        "c": "not an involution",
        "d": "cut not a perfect matching",
        "e": "not an automorphism",
    }
    for axiom, ok in checks.items():
        if not ok:
            return ReflectionFailure(edge, f"{names[axiom]} (axiom {axiom})")
    return Reflection(edge, tuple(phi))


@dataclass(frozen=True)
class ReflectivityReport:
    reflective: bool
    per_edge: dict[Edge, Reflection | ReflectionFailure]

    def to_records(self) -> list[dict]:
        out = []
        for (u, v), res in self.per_edge.items():
            rec = {"u": u, "v": v, "status": "ok" if res.ok else "failed"}
            if res.ok:
                rec["phi"] = list(res.phi)
            else:
                rec["reason"] = res.reason
            out.append(rec)
        return out


def is_reflective(
    graph: Graph, data: DistanceData | None = None, stop_early: bool = False
) -> ReflectivityReport:
    """Decide reflectivity edge by edge via :func:`candidate_reflection`."""
    graph.require_connected()
    data = data or all_pairs(graph)
    per_edge: dict[Edge, Reflection | ReflectionFailure] = {}
    for x, y in graph.edges:
        res = candidate_reflection(graph, x, y, data)
        per_edge[(x, y)] = res
        if stop_early and not res.ok:
            break
    return ReflectivityReport(all(r.ok for r in per_edge.values()) and len(per_edge) == graph.m, per_edge)


@dataclass(frozen=True)
class SharpnessResult:
    sharp: bool
    violation: tuple[int, int, int] | None = None
    lhs: int | None = None
    ric: Fraction | None = None


def check_sharpness(
    graph: Graph, data: DistanceData | None = None, ric: Mapping[Edge, Fraction] | None = None
) -> SharpnessResult:
    """Test ``Δd(z,·)(x) - Δd(z,·)(y) = Ric(x, y)`` whenever ``d(z,x) < d(z,y)``.

    Edges are scanned in canonical order, both orientations; the first
    failing triple ``(z, x, y)`` is reported.
    """
    graph.require_connected()
    data = data or all_pairs(graph)
    if ric is None:
        ric = curvature_all_edges(graph, data)
    lap = [[data.laplacian_of_distance(graph, z, v) for v in range(graph.n)] for z in range(graph.n)]
    for u, v in graph.edges:
        r = ric[(u, v)]
        for x, y in ((u, v), (v, u)):
            for z in range(graph.n):
                if data.dist[z][x] < data.dist[z][y]:
                    gap = lap[z][x] - lap[z][y]
                    if gap != r:
                        return SharpnessResult(False, (z, x, y), gap, r)
    return SharpnessResult(True)


def maximum_bipartite_matching(left: Sequence[int], adj: Mapping[int, Sequence[int]]) -> dict[int, int]:
    """Maximum matching by repeated augmenting-path search (Kuhn).

    ``adj[u]`` lists the right vertices joined to left vertex ``u``.
    Returns the matched pairs as ``{left: right}``.
    """
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in adj.get(u, ()):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or augment(match_right[w], seen):
                match_right[w] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return {u: w for w, u in match_right.items()}


@dataclass(frozen=True)
class MatchingCensus:
    edge: Edge
    left: tuple[int, ...]
    right: tuple[int, ...]
    matching: dict[int, int] = field(compare=False)
    perfect: bool
    degrees_equal: bool
    ric: Fraction
    common_ball: int

    @property
    def ric_equals_common_ball(self) -> bool:
        return self.ric == self.common_ball

    @property
    def holds(self) -> bool:
        return self.perfect and self.degrees_equal and self.ric_equals_common_ball


def _ball_difference_matching(graph: Graph, x: int, y: int):
    bx, by = graph.ball(x), graph.ball(y)
    left = tuple(sorted(bx - by))
    right = tuple(sorted(by - bx))
    rset = set(right)
    adj = {u: [w for w in graph.adjacency[u] if w in rset] for u in left}
    return left, right, maximum_bipartite_matching(left, adj)


def matching_census(
    graph: Graph, x: int, y: int, data: DistanceData | None = None, ric: Fraction | None = None
) -> MatchingCensus:
    """Local structure around ``x ~ y`` that every equality graph must have.

    Checks for a perfect matching between ``B_1(x) \\ B_1(y)`` and
    ``B_1(y) \\ B_1(x)`` along edges, ``Deg(x) = Deg(y)``, and
    ``Ric(x, y) = |B_1(x) ∩ B_1(y)|`` (closed balls).
    """
    _require_edge(graph, x, y)
    data = data or all_pairs(graph)
    left, right, matching = _ball_difference_matching(graph, x, y)
    bx, by = graph.ball(x), graph.ball(y)
    if ric is None:
        ric = ollivier_curvature(graph, (x, y), data)
    return MatchingCensus(
        edge=(x, y),
        left=left,
        right=right,
        matching=matching,
        perfect=len(left) == len(right) == len(matching),
        degrees_equal=graph.degree(x) == graph.degree(y),
        ric=ric,
        common_ball=len(bx & by),
    )


def _sides(graph: Graph, x: int, y: int, data: DistanceData) -> tuple[frozenset[int], frozenset[int]]:
    sep = separation_sets(graph, x, y, data)
    return sep.side_x, sep.side_y


def parallel_check(
    graph: Graph, e1: Sequence[int], e2: Sequence[int], data: DistanceData | None = None
) -> bool:
    """``(x, y) ∥ (x', y')``: both separation sides coincide, orientation kept."""
    data = data or all_pairs(graph)
    return _sides(graph, e1[0], e1[1], data) == _sides(graph, e2[0], e2[1], data)


def parallel_neighbors(
    graph: Graph, edge: Sequence[int], xp: int, data: DistanceData | None = None
) -> list[int]:
    """All ``y' ~ x'`` with ``(x, y) ∥ (x', y')``; ``x'`` must lie in ``V_x^y``."""
    x, y = edge
    data = data or all_pairs(graph)
    target = _sides(graph, x, y, data)
    if xp not in target[0]:
        raise GraphError(f"vertex {xp} is not strictly closer to {x} than to {y}")
    return [w for w in graph.adjacency[xp] if _sides(graph, xp, w, data) == target]


def transport_reflection(
    graph: Graph, x: int, y: int, data: DistanceData | None = None
) -> dict[int, int | None]:
    """Map ``V_x^y -> V`` built by carrying ``(x, y)`` along paths inside ``V_x^y``.

    Breadth-first from ``x``: a step ``x_k -> x_{k+1}`` sends the partner
    ``y_k`` to ``psi(x_{k+1})``, where ``psi`` is a perfect matching between
    ``B_1(x_k) \\ B_1(y_k)`` and ``B_1(y_k) \\ B_1(x_k)``.  Vertices that
    cannot be reached this way (no matching, or the step leaves the domain of
    ``psi``) map to None.
    """
    _require_edge(graph, x, y)
    data = data or all_pairs(graph)
    side_x, _ = _sides(graph, x, y, data)
    image: dict[int, int | None] = {z: None for z in side_x}
    image[x] = y
    psi_cache: dict[Edge, dict[int, int] | None] = {}

    def psi(a: int, b: int) -> dict[int, int] | None:
        if (a, b) not in psi_cache:
            left, right, match = _ball_difference_matching(graph, a, b)
            perfect = len(left) == len(right) == len(match)
            psi_cache[(a, b)] = match if perfect else None
        return psi_cache[(a, b)]

    queue = deque([x])
    while queue:
        a = queue.popleft()
        b = image[a]
        match = psi(a, b)
        if match is None:
            continue
        for w in graph.adjacency[a]:
            if w in side_x and image[w] is None and w in match:
                image[w] = match[w]
                queue.append(w)
    return image


@dataclass(frozen=True)
class CrossCheck:
    agree: bool
    detail: str | None = None


def cross_check_reflection_constructions(
    graph: Graph, data: DistanceData | None = None
) -> CrossCheck:
    """Compare the cut-matching reflection with parallel edges and transport.

    For every edge ``(x, y)`` (both orientations) and ``x'`` in ``V_x^y``,
    the unique parallel neighbour of ``x'`` and the transported partner must
    both equal ``phi(x')`` of :func:`candidate_reflection`.
    """
    data = data or all_pairs(graph)
    for u, v in graph.edges:
        for x, y in ((u, v), (v, u)):
            cand = candidate_reflection(graph, x, y, data)
            if not cand.ok:
                return CrossCheck(False, f"edge ({x}, {y}): {cand.reason}")
            moved = transport_reflection(graph, x, y, data)
            for xp in sorted(moved):
                par = parallel_neighbors(graph, (x, y), xp, data)
                if par != [cand.phi[xp]]:
                    return CrossCheck(
                        False, f"edge ({x}, {y}), vertex {xp}: parallel {par} vs phi {cand.phi[xp]}"
                    )
                if moved[xp] != cand.phi[xp]:
                    return CrossCheck(
                        False, f"edge ({x}, {y}), vertex {xp}: transport {moved[xp]} vs phi {cand.phi[xp]}"
                    )
    return CrossCheck(True)
