"""Small exact linear algebra helpers.

Determinants are taken of matrices whose entries are either Gaussian
rationals or truncated series; both support +, -, * so one Laplace
expansion serves both.  Everything here is sized for the tiny systems of
this engine (at most 4x4), so no pivot-growth cleverness is needed.
"""

from __future__ import annotations

from .rational import ZERO


def det(matrix):
    """Determinant by Laplace expansion along the first row."""
    m = len(matrix)
    for row in matrix:
        if len(row) != m:
            raise ValueError("determinant of a non-square matrix")
    if m == 1:
        return matrix[0][0]
    if m == 2:
        (a, b), (c, d) = matrix
        return a * d - b * c
    total = None
    for j in range(m):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


det_scalar = det  # alias used where entries are known to be scalars


def solve_series(jac, rhs, order):
    """Solve jac * x = rhs over the truncated-series ring by Cramer's rule.

    The determinant must have a nonzero constant term; it is inverted as a
    series at the given order.
    """
    m = len(jac)
    d = det(jac)
    inv_d = d.invert(order)
    out = []
    for i in range(m):
        col_replaced = [[rhs[r] if c == i else jac[r][c] for c in range(m)]
                        for r in range(m)]
        out.append((det(col_replaced) * inv_d).jet(order))
    return out


def solve_scalar(matrix, rhs):
    """Solve a square system over Gaussian rationals by Gaussian elimination."""
    m = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(m):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][m] for r in range(m)]


def symmetric_inertia(matrix):
    """(negative, zero, positive) inertia of a real symmetric rational matrix.

    Computed by exact congruence pivoting: diagonal pivots when available,
    otherwise the standard row/column addition trick to manufacture one.
    Entries are Gaussian rationals with zero imaginary part.
    """
    m = len(matrix)
    a = [[matrix[i][j] for j in range(m)] for i in range(m)]
    for row in a:
        for x in row:
            if not x.is_real():
                raise ValueError("inertia of a non-real matrix")
    neg = pos = zero = 0
    idx = list(range(m))
    while idx:
        k = next((r for r in idx if not a[r][r].is_zero()), None)
        if k is None:
            pair = next(((r, c) for r in idx for c in idx
                         if r != c and not a[r][c].is_zero()), None)
            if pair is None:
                zero += len(idx)
                break
            r, c = pair
            # with an all-zero active diagonal, row/col addition puts
            # 2*a[r][c] != 0 on the diagonal
            for t in range(m):
                a[r][t] = a[r][t] + a[c][t]
            for t in range(m):
                a[t][r] = a[t][r] + a[t][c]
            k = r
        piv = a[k][k]
        if piv.re > 0:
            pos += 1
        else:
            neg += 1
        inv = piv.inverse()
        idx.remove(k)
        for r in idx:
            if a[r][k].is_zero():
                continue
            f = a[r][k] * inv
            for c in idx:
                a[r][c] = a[r][c] - f * a[k][c]
            a[r][k] = ZERO
            a[k][r] = ZERO
    return neg, zero, pos
