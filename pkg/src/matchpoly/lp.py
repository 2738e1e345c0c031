"""Exact rational linear programming.

A dense two-phase simplex over fractions.Fraction with Bland's rule, which
guarantees termination. Problems here are tiny (tens of variables, at most a
few dozen rows), so a full tableau is the simplest correct choice.

Standard form: minimize c.x subject to A x = b, x >= 0.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [x / piv for x in T[row]]
    prow = T[row]
    for r in range(len(T)):
        if r != row and T[r][col] != 0:
            f = T[r][col]
            T[r] = [x - f * y for x, y in zip(T[r], prow)]
    basis[row] = col


def _solve_with_bland(T, basis, cost):
    """Minimize cost over the tableau. Returns the optimal value.

    T holds m rows of [A | b] with an identity embedded at the basis columns.
    cost is the full objective row (length n); the reduced-cost row is derived.
    """
    m = len(T)
    n = len(T[0]) - 1
    # reduced costs: z[j] = cost[j] - sum_i cost[basis[i]] * T[i][j]
    while True:
        zrow = list(cost)
        obj = Fraction(0)
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0:
                row = T[i]
                obj += cb * row[n]
                for j in range(n):
                    if row[j] != 0:
                        zrow[j] -= cb * row[j]
        enter = next((j for j in range(n) if zrow[j] < 0), None)
        if enter is None:
            return obj
        # Bland ratio test: smallest ratio, ties by smallest basis variable index
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][n] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise ArithmeticError("unbounded LP (not expected for these problems)")
        _pivot(T, basis, best[1], enter)


def solve_eq_lp(A, b, c):
    """min c.x s.t. A x = b, x >= 0 over exact rationals.

    Returns (status, value, x) where x is a list of Fractions (None when
    infeasible).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    T = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]] + [Fraction(b[i])]
        if row[-1] < 0:
            row = [-v for v in row]
        T.append(row)
    # phase 1: artificial variables n..n+m-1
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T[i] = T[i][:-1] + art + [T[i][-1]]
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(1)] * m
    val = _solve_with_bland(T, basis, cost1)
    if val != 0:
        return INFEASIBLE, None, None
    # drive leftover artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)
    rows, keep_basis = [], []
    for i in range(m):
        if basis[i] >= n:
            # redundant all-zero row
            continue
        rows.append(T[i][:n] + [T[i][-1]])
        keep_basis.append(basis[i])
    cost2 = [Fraction(v) for v in c]
    val = _solve_with_bland(rows, keep_basis, cost2)
    x = [Fraction(0)] * n
    for i, bi in enumerate(keep_basis):
        x[bi] = rows[i][-1]
    return OPTIMAL, val, x


def feasible_eq(A, b) -> bool:
    """Is {x >= 0 : A x = b} nonempty?"""
    status, _, _ = solve_eq_lp(A, b, [0] * (len(A[0]) if A else 0))
    return status == OPTIMAL
