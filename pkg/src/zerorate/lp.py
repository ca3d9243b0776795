"""Exact rational simplex for the fractional-coloring covering LP.

Solves  min sum(x_I)  s.t.  sum_{I containing v} x_I >= 1,  x >= 0
restricted to a supplied pool of independent-set columns, entirely in
Fraction arithmetic (two-phase tableau, Bland's rule, so it terminates and
is deterministic). Returns the optimal primal weights and the dual vertex
weights; the caller certifies global optimality by exact pricing.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def solve_cover_lp(columns: list[int], n: int) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Exact optimum of the restricted covering LP.

    ``columns`` are vertex bitsets (independent sets). Every vertex must be
    covered by at least one column. Returns (value, x per column, y per vertex).
    """
    k = len(columns)
    covered = 0
    for col in columns:
        covered |= col
    if covered != (1 << n) - 1:
        raise ValueError("column pool does not cover every vertex")

    # tableau columns: k set-variables, n surplus, n artificial, rhs
    art0 = k + n
    width = k + 2 * n + 1
    rows: list[list[Fraction]] = []
    for v in range(n):
        row = [ZERO] * width
        for j, col in enumerate(columns):
            if col >> v & 1:
                row[j] = ONE
        row[k + v] = -ONE
        row[art0 + v] = ONE
        row[-1] = ONE
        rows.append(row)
    basis = [art0 + v for v in range(n)]

    # reduced-cost rows maintained through pivots:
    # phase 1 minimizes the artificial sum, phase 2 the true objective
    obj1 = [ZERO] * width
    for j in range(art0, art0 + n):
        obj1[j] = ONE
    for v in range(n):
        for j in range(width):
            obj1[j] -= rows[v][j]
    obj2 = [ZERO] * width
    for j in range(k):
        obj2[j] = ONE

    def pivot(r: int, c: int) -> None:
        piv = rows[r][c]
        inv = ONE / piv
        rows[r] = [a * inv for a in rows[r]]
        prow = rows[r]
        for other in range(n):
            if other == r:
                continue
            f = rows[other][c]
            if f:
                rows[other] = [a - f * b for a, b in zip(rows[other], prow)]
        for obj in (obj1, obj2):
            f = obj[c]
            if f:
                for j in range(width):
                    obj[j] -= f * prow[j]
        basis[r] = c

    def run_phase(obj: list[Fraction], allowed: int) -> None:
        # Bland's rule: smallest eligible entering column, smallest basis
        # variable on ratio ties; finite by anti-cycling
        while True:
            enter = -1
            for j in range(allowed):
                if obj[j] < ZERO:
                    enter = j
                    break
            if enter < 0:
                return
            leave = -1
            best_ratio = None
            for r in range(n):
                a = rows[r][enter]
                if a > ZERO:
                    ratio = rows[r][-1] / a
                    if best_ratio is None or ratio < best_ratio or (
                        ratio == best_ratio and basis[r] < basis[leave]
                    ):
                        best_ratio = ratio
                        leave = r
            if leave < 0:
                raise ArithmeticError("covering LP is bounded; unbounded pivot indicates a bug")
            pivot(leave, enter)

    run_phase(obj1, art0 + n)
    phase1_value = -obj1[-1]
    if phase1_value != ZERO:
        raise ValueError("restricted covering LP infeasible despite coverage check")

    # drive any zero-level artificials out of the basis when possible
    for r in range(n):
        if basis[r] >= art0:
            for j in range(art0):
                if rows[r][j] != ZERO:
                    pivot(r, j)
                    break

    run_phase(obj2, art0)

    value = -obj2[-1]
    x = [ZERO] * k
    for r in range(n):
        if basis[r] < k:
            x[basis[r]] = rows[r][-1]
    # dual weights read off the artificial columns: reduced cost there is -y_v
    y = [-obj2[art0 + v] for v in range(n)]
    return value, x, y
