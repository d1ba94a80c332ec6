import random
from fractions import Fraction
from itertools import combinations

import pytest
from scipy.optimize import linprog

from ricbound.lp import minimize


def _solve_square(M, r):
    # exact Gaussian elimination; None when singular
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(M, r)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col] / A[col][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return [A[i][n] / A[i][i] for i in range(n)]


def vertex_enumeration(c, A, b):
    """Exact optimum of a bounded LP by trying every basis."""
    k = len(c)
    rows = [list(r) for r in A] + [[-int(i == j) for j in range(k)] for i in range(k)]
    rhs = list(b) + [0] * k
    best = None
    for idx in combinations(range(len(rows)), k):
        x = _solve_square([rows[i] for i in idx], [rhs[i] for i in idx])
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(row, x)) <= r for row, r in zip(rows, rhs)):
            val = sum(Fraction(ci) * v for ci, v in zip(c, x))
            best = val if best is None or val < best else best
    return best


def _random_bounded(rng, k, m):
    A = [[rng.randint(-3, 4) for _ in range(k)] for _ in range(m)]
    b = [rng.randint(0, 6) for _ in range(m)]
    # box keeps the problem bounded
    for i in range(k):
        A.append([int(i == j) for j in range(k)])
        b.append(rng.randint(1, 5))
    c = [rng.randint(-4, 4) for _ in range(k)]
    return c, A, b


@pytest.mark.parametrize("seed", range(60))
def test_matches_vertex_enumeration(seed, backend):
    rng = random.Random(seed)
    c, A, b = _random_bounded(rng, rng.randint(1, 3), rng.randint(0, 4))
    res = minimize(c, A, b, backend=backend)
    assert res.status == "optimal"
    assert res.value == vertex_enumeration(c, A, b)
    x = res.x
    assert all(v >= 0 for v in x)
    assert all(sum(a * v for a, v in zip(row, x)) <= r for row, r in zip(A, b))
    assert sum(ci * v for ci, v in zip(c, x)) == res.value


@pytest.mark.parametrize("seed", range(20))
def test_matches_highs(seed):
    rng = random.Random(100 + seed)
    c, A, b = _random_bounded(rng, rng.randint(3, 8), rng.randint(3, 12))
    res = minimize(c, A, b)
    ref = linprog(c, A_ub=A, b_ub=b, bounds=[(0, None)] * len(c), method="highs")
    assert ref.status == 0
    assert float(res.value) == pytest.approx(ref.fun, abs=1e-9)


def test_rational_input():
    # min -x - y  s.t.  x/2 + y/3 <= 1, x <= 3/2
    res = minimize([-1, -1], [[Fraction(1, 2), Fraction(1, 3)], [1, 0]], [1, Fraction(3, 2)])
    assert res.value == -3
    res = minimize([Fraction(-1, 3), 0], [[1, 0]], [2])
    assert res.value == Fraction(-2, 3)


def test_unbounded():
    assert minimize([-1, 0], [[0, 1]], [1]).status == "unbounded"


def test_empty_constraints():
    assert minimize([1, 2], [], []).value == 0


def test_degenerate_cycling_example():
    # Beale's classic cycling instance (as a minimisation); Bland's rule terminates
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    b = [0, 0, 1]
    assert minimize(c, A, b).value == Fraction(-1, 20)


def test_rejects_negative_rhs():
    with pytest.raises(ValueError, match="infeasible"):
        minimize([1], [[1]], [-1])
    with pytest.raises(ValueError, match="entries"):
        minimize([1, 1], [[1]], [1])
