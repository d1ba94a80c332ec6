"""Pure-Python hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; selected
by :mod:`ricbound.kernels` when the extension is missing or disabled.
"""

from __future__ import annotations

from collections import deque

BACKEND = "python"


def bfs_counts(n, indptr, indices):
    """All-pairs BFS distances and geodesic counts.

    Returns ``(dist, sigma)`` as lists of lists; unreachable pairs get
    distance -1 and count 0.  Counts are Python integers (unbounded).
    """
    dist = []
    sigma = []
    for s in range(n):
        d = [-1] * n
        c = [0] * n
        d[s] = 0
        c[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = d[u] + 1
            cu = c[u]
            for i in range(indptr[u], indptr[u + 1]):
                w = indices[i]
                if d[w] < 0:
                    d[w] = du
                    queue.append(w)
                if d[w] == du:
                    c[w] += cu
        dist.append(d)
        sigma.append(c)
    return dist, sigma


def simplex_bland(tab, m, k):
    """Fraction-free primal simplex with Bland's rule, in place.

    ``tab`` holds ``m + 1`` rows of ``k + 1`` integers: constraint rows
    ``[a_i | b_i]`` with ``b_i >= 0`` and the objective row ``[c | 0]`` last;
    the problem is ``min c.t  s.t.  A t <= b, t >= 0``.  All entries share a
    positive common denominator ``D`` (initially 1), so the represented
    tableau is ``tab / D``; divisions below are exact (Bareiss).

    Returns ``(status, D, basic, nonbasic, pivots)`` where status is 0 for
    optimal and 1 for unbounded.  Variable labels: ``0..k-1`` structural,
    ``k..k+m-1`` slacks.
    """
    basic = list(range(k, k + m))
    nonbasic = list(range(k))
    D = 1
    pivots = 0
    obj = tab[m]
    while True:
        # entering: smallest label with negative reduced cost
        s = -1
        best = -1
        for j in range(k):
            if obj[j] < 0 and (s < 0 or nonbasic[j] < best):
                s = j
                best = nonbasic[j]
        if s < 0:
            return 0, D, basic, nonbasic, pivots
        # leaving: min ratio b_i / a_is over a_is > 0, ties by smallest label
        r = -1
        for i in range(m):
            a = tab[i][s]
            if a > 0:
                if r < 0:
                    r = i
                    continue
                lhs = tab[i][k] * tab[r][s]
                rhs = tab[r][k] * a
                if lhs < rhs or (lhs == rhs and basic[i] < basic[r]):
                    r = i
        if r < 0:
            return 1, D, basic, nonbasic, pivots
        prow = tab[r]
        p = prow[s]
        for i in range(m + 1):
            if i == r:
                continue
            row = tab[i]
            f = row[s]
            if f == 0:
                for j in range(k + 1):
                    if j != s:
                        row[j] = row[j] * p // D
            else:
                for j in range(k + 1):
                    if j != s:
                        row[j] = (row[j] * p - f * prow[j]) // D
            row[s] = -f
        prow[s] = D
        D = p
        basic[r], nonbasic[s] = nonbasic[s], basic[r]
        pivots += 1


def oracle_min(lo, hi, weights, dist):
    """Exhaustive minimum of ``sum(weights[i] * f[i])`` over integer ``f``.

    ``lo[i] <= f[i] <= hi[i]`` and ``f[i] - f[j] <= dist[i][j]`` for all
    pairs.  Plain depth-first enumeration; a branch is cut only when it
    violates a constraint or cannot beat the incumbent.  Returns None when
    the system is infeasible.
    """
    n = len(lo)
    # rest[i]: smallest possible contribution of variables i..n-1
    rest = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        w = weights[i]
        rest[i] = rest[i + 1] + min(w * lo[i], w * hi[i])
    f = [0] * n
    best = [None]

    def descend(i, acc):
        if i == n:
            if best[0] is None or acc < best[0]:
                best[0] = acc
            return
        if best[0] is not None and acc + rest[i] >= best[0]:
            return
        di = dist[i]
        w = weights[i]
        for v in range(lo[i], hi[i] + 1):
            ok = True
            for j in range(i):
                diff = v - f[j]
                if diff > di[j] or -diff > di[j]:
                    ok = False
                    break
            if ok:
                f[i] = v
                descend(i + 1, acc + w * v)

    descend(0, 0)
    return best[0]
