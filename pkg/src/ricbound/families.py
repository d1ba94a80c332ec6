"""Graph generators: test substrates and the equality-case families.

The equality families are the cocktail party graphs, Johnson graphs, halved
cubes, the Schläfli graph, the Gosset graph and Cartesian products of these.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphError, build_graph


class ResampleBudgetExceeded(RuntimeError):
    def __init__(self, n: int, p: float, attempts: int):
        super().__init__(f"no connected G({n}, {p}) sample after {attempts} attempts")
        self.attempts = attempts


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)


def gen_complete(n: int) -> Graph:
    _check(n >= 1, f"complete graph needs n >= 1, got {n}")
    return build_graph(n, combinations(range(n), 2))


def gen_path(n: int) -> Graph:
    _check(n >= 1, f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    _check(n >= 3, f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_hypercube(n: int) -> Graph:
    """Q_n on n-bit strings; vertex index is the integer value of the string."""
    _check(n >= 1, f"hypercube needs n >= 1, got {n}")
    return build_graph(
        1 << n, [(v, v ^ (1 << b)) for v in range(1 << n) for b in range(n) if not v >> b & 1]
    )


def gen_cocktail_party(n: int) -> Graph:
    """K_{2n} minus the perfect matching {(2i, 2i+1)}.

    ``n = 1`` would be edgeless, so ``n >= 2`` is required; use
    ``gen_complete(2)`` for the K_2 factor.
    """
    _check(n >= 2, f"cocktail party graph needs n >= 2, got {n}")
    return build_graph(2 * n, [(u, v) for u, v in combinations(range(2 * n), 2) if u // 2 != v // 2])


def gen_johnson(n: int, k: int) -> Graph:
    """J(n, k): k-subsets of range(n) (in lexicographic order), adjacent iff they share k-1 elements."""
    _check(1 <= k <= n - 1, f"Johnson graph needs 1 <= k <= n-1, got n={n}, k={k}")
    subsets = [frozenset(s) for s in combinations(range(n), k)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if len(subsets[i] & subsets[j]) == k - 1
    ]
    return build_graph(len(subsets), edges)


def gen_halved_cube(n: int) -> Graph:
    """Even-weight n-bit strings, in increasing numeric order, adjacent at Hamming distance 2."""
    _check(n >= 2, f"halved cube needs n >= 2, got {n}")
    words = [w for w in range(1 << n) if bin(w).count("1") % 2 == 0]
    edges = [
        (i, j)
        for i, j in combinations(range(len(words)), 2)
        if bin(words[i] ^ words[j]).count("1") == 2
    ]
    return build_graph(len(words), edges)


def schlafli_labels() -> list[tuple]:
    """Vertex labels of :func:`gen_schlafli`: ('a', i), ('b', i), ('c', i, j)."""
    return (
        [("a", i) for i in range(6)]
        + [("b", i) for i in range(6)]
        + [("c", i, j) for i, j in combinations(range(6), 2)]
    )


def _lines_meet(p: tuple, q: tuple) -> bool:
    # intersection rule for the 27 lines on a cubic surface
    kinds = p[0] + q[0]
    if kinds in ("aa", "bb"):
        return False
    if kinds in ("ab", "ba"):
        return p[1] != q[1]
    if kinds == "cc":
        return not set(p[1:]) & set(q[1:])
    single, double = (p, q) if p[0] != "c" else (q, p)
    return single[1] in double[1:]


def gen_schlafli() -> Graph:
    """Schläfli graph: complement of the intersection graph of the 27 lines."""
    labels = schlafli_labels()
    edges = [
        (i, j)
        for i, j in combinations(range(len(labels)), 2)
        if not _lines_meet(labels[i], labels[j])
    ]
    return build_graph(len(labels), edges)


def gosset_labels() -> list[tuple[int, frozenset[int]]]:
    """Vertex labels of :func:`gen_gosset`: (sign, 2-subset of range(8))."""
    pairs = [frozenset(s) for s in combinations(range(8), 2)]
    return [(sign, s) for sign in (1, -1) for s in pairs]


def gen_gosset() -> Graph:
    """Gosset graph on two signed copies of the 2-subsets of an 8-set.

    Same sign: adjacent iff the subsets share one element.  Opposite sign:
    adjacent iff the subsets are disjoint.
    """
    labels = gosset_labels()
    edges = []
    for i, j in combinations(range(len(labels)), 2):
        (si, a), (sj, b) = labels[i], labels[j]
        common = len(a & b)
        if (si == sj and common == 1) or (si != sj and common == 0):
            edges.append((i, j))
    return build_graph(len(labels), edges)


def gen_erdos_renyi_connected(
    n: int, p: float, seed: int, max_attempts: int = 1000
) -> Graph:
    """G(n, p) resampled until connected, deterministic in ``seed``."""
    _check(n >= 2, f"G(n, p) needs n >= 2, got {n}")
    _check(0 < p <= 1, f"G(n, p) needs 0 < p <= 1, got {p}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(max_attempts):
        g = build_graph(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            return g
    raise ResampleBudgetExceeded(n, p, max_attempts)


FAMILIES = {
    "complete": (gen_complete, ("n",)),
    "path": (gen_path, ("n",)),
    "cycle": (gen_cycle, ("n",)),
    "hypercube": (gen_hypercube, ("n",)),
    "cocktail-party": (gen_cocktail_party, ("n",)),
    "johnson": (gen_johnson, ("n", "k")),
    "halved-cube": (gen_halved_cube, ("n",)),
    "schlafli": (gen_schlafli, ()),
    "gosset": (gen_gosset, ()),
    "erdos-renyi": (gen_erdos_renyi_connected, ("n", "p", "seed")),
}


def generate(family: str, **params) -> Graph:
    """Dispatch to a generator by family name, passing only the parameters it takes."""
    try:
        fn, names = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    missing = [k for k in names if params.get(k) is None]
    if missing:
        raise GraphError(f"family {family!r} needs parameter(s): {', '.join(missing)}")
    return fn(*(params[k] for k in names))
