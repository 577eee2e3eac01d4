"""Exact rational linear programming.

Two-phase tableau simplex with Bland's rule, so it terminates on degenerate
problems.  The tableau is kept integral with integer-preserving pivoting:
it stores D * B^{-1} [A | b] for the current basis B with D = +-det(B), and
every pivot division is exact.  No value is ever rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None


def _integral_row(row: Sequence, rhs) -> list[int]:
    vals = [Fraction(x) for x in row] + [Fraction(rhs)]
    den = math.lcm(*(v.denominator for v in vals))
    return [int(v * den) for v in vals]


class _Tableau:
    """Rows are [coefficients..., rhs]; ``z`` is the reduced-cost row, same scale."""

    def __init__(self, rows: list[list[int]], basis: list[int], D: int = 1):
        self.rows = rows
        self.basis = basis
        self.D = D
        self.z: list[int] = []

    def set_cost(self, cost: Sequence[int]) -> None:
        """Load integer costs; store D * (c_j - c_B B^{-1} a_j) and -D * value."""
        width = len(self.rows[0]) if self.rows else len(cost) + 1
        z = [self.D * c for c in cost] + [0] * (width - len(cost))
        for i, bj in enumerate(self.basis):
            cb = cost[bj] if bj < len(cost) else 0
            if cb:
                z = [zj - cb * t for zj, t in zip(z, self.rows[i])]
        self.z = z

    def pivot(self, r: int, c: int) -> None:
        rows, D = self.rows, self.D
        prow = rows[r]
        p = prow[c]
        for i in range(len(rows)):
            if i != r:
                rows[i] = _combine(rows[i], prow, p, rows[i][c], D)
        self.z = _combine(self.z, prow, p, self.z[c], D)
        self.D = p
        self.basis[r] = c
        if self.D < 0:
            self.rows = [[-x for x in row] for row in self.rows]
            self.z = [-x for x in self.z]
            self.D = -self.D

    def run(self, allowed: Sequence[int]) -> str:
        """Minimise the loaded cost over columns in ``allowed`` (Bland's rule)."""
        allowed = sorted(allowed)
        while True:
            basic = set(self.basis)
            entering = next((j for j in allowed if j not in basic and self.z[j] < 0), None)
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    # Compare b_i / a_i exactly, ties by smallest basic index.
                    if best is None:
                        best = i
                        continue
                    bi, ai = row[-1], a
                    bb, ab = self.rows[best][-1], self.rows[best][entering]
                    lhs, rhs = bi * ab, bb * ai
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                        best = i
            if best is None:
                return UNBOUNDED
            self.pivot(best, entering)


def _combine(row: list[int], prow: list[int], p: int, f: int, D: int) -> list[int]:
    # Exact: every entry is a minor of the original system (Bareiss identity).
    if not f:
        return row if p == D else [p * x // D for x in row]
    return [(p * x - f * y) // D for x, y in zip(row, prow)]


def solve_standard(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Minimise c.x subject to A x = b, x >= 0, exactly."""
    n = len(c)
    m = len(A)
    cost_fr = [Fraction(x) for x in c]
    cden = math.lcm(*(x.denominator for x in cost_fr)) if cost_fr else 1
    cost = [int(x * cden) for x in cost_fr]
    if m == 0:
        if any(x < 0 for x in cost):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, [Fraction(0)] * n, Fraction(0))

    rows = []
    for i in range(m):
        if len(A[i]) != n:
            raise ValueError("constraint row length does not match objective")
        row = _integral_row(A[i], b[i])
        if row[-1] < 0:
            row = [-x for x in row]
        # Artificial variables n..n+m-1.
        rows.append(row[:-1] + [1 if k == i else 0 for k in range(m)] + [row[-1]])
    tab = _Tableau(rows, list(range(n, n + m)))
    tab.set_cost([0] * n + [1] * m)
    tab.run(range(n + m))
    if any(tab.rows[i][-1] != 0 for i in range(m) if tab.basis[i] >= n):
        return LPResult(INFEASIBLE)

    # Drive zero-level artificials out of the basis; drop redundant rows.
    keep = []
    for i in range(m):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    tab = _Tableau([tab.rows[i][:n] + [tab.rows[i][-1]] for i in keep],
                   [tab.basis[i] for i in keep], tab.D)
    if not tab.rows:
        if any(x < 0 for x in cost):
            return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, [Fraction(0)] * n, Fraction(0))
    tab.set_cost(cost)
    if tab.run(range(n)) == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, j in enumerate(tab.basis):
        x[j] = Fraction(tab.rows[i][-1], tab.D)
    return LPResult(OPTIMAL, x, sum(ci * xi for ci, xi in zip(cost_fr, x)))


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Some x >= 0 with A x = b, or None if there is none."""
    n = len(A[0]) if A else 0
    res = solve_standard([0] * n, A, b)
    return res.x if res.status == OPTIMAL else None


def maximize(c: Sequence, A_ub: Sequence[Sequence] = (), b_ub: Sequence = (),
             A_eq: Sequence[Sequence] = (), b_eq: Sequence = (),
             free: Sequence[bool] | None = None) -> LPResult:
    """Maximise c.x subject to A_ub x <= b_ub and A_eq x = b_eq.

    Variables are nonnegative unless flagged in ``free``; free variables are
    split into positive and negative parts internally.
    """
    n = len(c)
    free = list(free) if free is not None else [False] * n
    neg_idx = [k for k in range(n) if free[k]]
    n_ub = len(A_ub)

    def expand(row, slack=None):
        out = list(row)
        out += [-row[k] for k in neg_idx]
        out += [1 if s == slack else 0 for s in range(n_ub)]
        return out

    rows = [expand(r, s) for s, r in enumerate(A_ub)] + [expand(r) for r in A_eq]
    rhs = list(b_ub) + list(b_eq)
    cost = [-Fraction(x) for x in c] + [Fraction(c[k]) for k in neg_idx] + [0] * n_ub
    res = solve_standard(cost, rows, rhs)
    if res.status != OPTIMAL:
        return LPResult(res.status)
    z = res.x
    x = list(z[:n])
    for t, k in enumerate(neg_idx):
        x[k] -= z[n + t]
    return LPResult(OPTIMAL, x, -res.value)
