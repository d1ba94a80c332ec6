"""Backtracking isomorphism search for small graphs (a few dozen vertices).

Candidates are pruned by distance profile (how many vertices sit at each
distance) and by distance consistency with the vertices already mapped.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph
from .metrics import all_pairs

MAX_ORDER = 30


def _profiles(dist: list[list[int]]) -> list[tuple]:
    return [tuple(sorted(Counter(row).items())) for row in dist]


def find_isomorphism(g: Graph, h: Graph, max_order: int = MAX_ORDER) -> list[int] | None:
    """A bijection ``phi`` with ``u ~ v  <=>  phi[u] ~ phi[v]``, or None."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if g.n > max_order:
        raise ValueError(f"isomorphism search limited to {max_order} vertices, got {g.n}")
    if g.n == 0:
        return []
    if not (g.is_connected() and h.is_connected()):
        raise ValueError("isomorphism search expects connected graphs")
    dg, dh = all_pairs(g).dist, all_pairs(h).dist
    pg, ph = _profiles(dg), _profiles(dh)
    if sorted(pg) != sorted(ph):
        return None
    # map vertices in BFS order from a vertex with the rarest profile
    counts = Counter(pg)
    root = min(range(g.n), key=lambda v: (counts[pg[v]], v))
    order = sorted(range(g.n), key=lambda v: (dg[root][v], v))
    phi = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for w in range(h.n):
            if used[w] or ph[w] != pg[u]:
                continue
            if all(dh[w][phi[order[j]]] == dg[u][order[j]] for j in range(i)):
                phi[u] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        phi[u] = -1
        return False

    return list(phi) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
