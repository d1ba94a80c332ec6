"""Immutable simple undirected graphs, Cartesian products and edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input (self-loop, out-of-range endpoint, duplicate, ...)."""


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.u = u
        self.v = v


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Neighbour lists are sorted ascending and edges are stored canonically as
    ``(u, v)`` with ``u < v``, sorted lexicographically.  Instances are
    immutable; build them with :func:`build_graph`.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    _adjsets: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def ball(self, v: int) -> frozenset[int]:
        """Closed ball of radius one around ``v`` (contains ``v``)."""
        return self._adjsets[v] | {v}

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def csr(self) -> tuple[list[int], list[int]]:
        """Compressed adjacency ``(indptr, indices)``."""
        indptr = [0]
        indices: list[int] = []
        for nbrs in self.adjacency:
            indices.extend(nbrs)
            indptr.append(len(indices))
        return indptr, indices

    def is_connected(self) -> bool:
        return self.unreachable_pair() is None

    def unreachable_pair(self) -> Edge | None:
        """Some pair ``(0, v)`` with no connecting path, or None."""
        if self.n <= 1:
            return None
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        for v, ok in enumerate(seen):
            if not ok:
                return (0, v)
        return None

    def require_connected(self) -> None:
        pair = self.unreachable_pair()
        if pair is not None:
            raise DisconnectedGraphError(*pair)

    def canonical_edge(self, u: int, v: int) -> Edge:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return (u, v) if u < v else (v, u)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` plus the new-to-old index map."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_graph(len(old), edges), old


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the canonical :class:`Graph`.

    Pairs may come in either orientation.  Self-loops, endpoints outside
    ``[0, n)`` and repeated pairs (in any orientation) raise
    :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {tuple(pair)!r} is not a pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return Graph(
        n=n,
        adjacency=adjacency,
        edges=tuple(sorted(seen)),
        _adjsets=tuple(frozenset(a) for a in adjacency),
    )


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` gets index ``a * g2.n + b``."""
    n2 = g2.n
    edges: list[Edge] = []
    for a in range(g1.n):
        for u, v in g2.edges:
            edges.append((a * n2 + u, a * n2 + v))
    for u, v in g1.edges:
        for b in range(n2):
            edges.append((u * n2 + b, v * n2 + b))
    return build_graph(g1.n * n2, edges)


def product_of(graphs: Sequence[Graph]) -> Graph:
    """Left-associated Cartesian product of one or more graphs."""
    if not graphs:
        raise GraphError("need at least one factor")
    out = graphs[0]
    for g in graphs[1:]:
        out = cartesian_product(out, g)
    return out


def read_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header followed by ``m`` lines ``"u v"``.

    Blank lines are ignored.  Errors carry 1-based line numbers.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if parts:
            rows.append((lineno, parts))
    if not rows:
        raise EdgeListParseError(1, "missing header 'n m'")
    lineno, header = rows[0]
    n, m = _parse_ints(lineno, header, "header 'n m'")
    if n < 0 or m < 0:
        raise EdgeListParseError(lineno, "negative count in header")
    body = rows[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise EdgeListParseError(at, f"header announces {m} edges, found {len(body)}")
    edges = []
    seen: set[Edge] = set()
    for lineno, parts in body:
        u, v = _parse_ints(lineno, parts, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(lineno, f"endpoint out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise EdgeListParseError(lineno, f"duplicate edge {e}")
        seen.add(e)
        edges.append((u, v))
    return build_graph(n, edges)


def _parse_ints(lineno: int, parts: list[str], what: str) -> tuple[int, int]:
    if len(parts) != 2:
        raise EdgeListParseError(lineno, f"expected {what}, got {' '.join(parts)!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListParseError(lineno, f"expected integers in {what}, got {' '.join(parts)!r}") from None


def write_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
