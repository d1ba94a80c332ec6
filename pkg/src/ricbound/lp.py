"""Exact linear programming by fraction-free pivoting.

Only origin-feasible problems are handled: ``min c.x`` subject to
``A x <= b`` and ``x >= 0`` with ``b >= 0``, so the slack basis is a feasible
start and no phase one is needed.  Rational inputs are scaled row by row to
integers; the pivoting itself runs on integers with a common denominator
(see :func:`ricbound._pykernels.simplex_bland`) and Bland's rule prevents
cycling on the heavily degenerate Lipschitz programs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernels

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None
    x: tuple[Fraction, ...] | None
    pivots: int


def _integer_row(values: Sequence[Number]) -> list[int]:
    if all(type(v) is int for v in values):
        return list(values)
    fr = [Fraction(v) for v in values]
    scale = lcm(1, *(q.denominator for q in fr))
    return [int(q * scale) for q in fr]


def minimize(
    c: Sequence[Number],
    A: Sequence[Sequence[Number]],
    b: Sequence[Number],
    backend: str | None = None,
) -> LPResult:
    """Solve ``min c.x  s.t.  A x <= b, x >= 0`` exactly; requires ``b >= 0``.

    Returns an :class:`LPResult` with status ``"optimal"`` (value and an
    optimal vertex ``x``) or ``"unbounded"``.
    """
    k = len(c)
    m = len(A)
    if len(b) != m:
        raise ValueError(f"A has {m} rows but b has {len(b)} entries")
    tab: list[list[int]] = []
    for i, (row, rhs) in enumerate(zip(A, b)):
        if len(row) != k:
            raise ValueError(f"row {i} has {len(row)} entries, expected {k}")
        if rhs < 0:
            raise ValueError(f"b[{i}] = {rhs} < 0: origin is infeasible")
        tab.append(_integer_row(list(row) + [rhs]))
    cf = [Fraction(v) for v in c]
    cscale = lcm(1, *(q.denominator for q in cf))
    tab.append([int(q * cscale) for q in cf] + [0])

    status, D, basic, _, pivots = kernels.simplex_bland(tab, m, k, backend=backend)
    if status == 1:
        return LPResult("unbounded", None, None, pivots)
    x = [Fraction(0)] * k
    for i, label in enumerate(basic):
        if label < k:
            x[label] = Fraction(tab[i][k], D)
    value = Fraction(-tab[m][k], D * cscale)
    return LPResult("optimal", value, tuple(x), pivots)
