"""Exact integer and rational matrix algebra.

Everything here runs on plain Python ints and fractions.Fraction, so there
is no overflow and no rounding.  Matrices are lists of lists in row-major
order and are never mutated by the public functions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def copy_matrix(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in a]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    if len(a[0]) != len(b):
        raise ValueError("matmul: inner dimensions disagree")
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in zip(*a)] if a else []


def dims(a: Sequence[Sequence[int]]) -> tuple[int, int]:
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    return m, n


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    m, n = dims(a)
    if m != n:
        raise ValueError("det: matrix not square")
    if m == 0:
        return 1
    w = copy_matrix(a)
    sign = 1
    prev = 1
    for k in range(m - 1):
        if w[k][k] == 0:
            for i in range(k + 1, m):
                if w[i][k] != 0:
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) // prev
            w[i][k] = 0
        prev = w[k][k]
    return sign * w[m - 1][m - 1]


def rank_rational(a: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    if not a:
        return 0
    w = [[Fraction(x) for x in row] for row in a]
    m, n = len(w), len(w[0])
    rank = 0
    col = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if w[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        w[rank], w[pivot] = w[pivot], w[rank]
        pv = w[rank][col]
        w[rank] = [x / pv for x in w[rank]]
        for i in range(m):
            if i != rank and w[i][col] != 0:
                f = w[i][col]
                w[i] = [x - f * y for x, y in zip(w[i], w[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def invert_unimodular(a: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of an integer matrix with determinant +-1.

    Exact Gauss-Jordan over Fraction; the result is integral by
    unimodularity and is returned as an int matrix.
    """
    m, n = dims(a)
    if m != n:
        raise ValueError("invert_unimodular: matrix not square")
    w = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if w[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            raise ValueError("invert_unimodular: matrix is singular")
        w[col], w[pivot] = w[pivot], w[col]
        pv = w[col][col]
        w[col] = [x / pv for x in w[col]]
        for i in range(n):
            if i != col and w[i][col] != 0:
                f = w[i][col]
                w[i] = [x - f * y for x, y in zip(w[i], w[col])]
    inv = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            v = w[i][j]
            if v.denominator != 1:
                raise ValueError("invert_unimodular: inverse is not integral")
            row.append(int(v))
        inv.append(row)
    return inv


def _min_abs_pivot(w: Matrix, t: int, m: int, n: int) -> tuple[int, int] | None:
    """Nonzero entry of minimal absolute value in w[t:, t:].

    Ties are broken by smallest (row, column), which keeps the whole
    reduction deterministic.
    """
    best = None
    best_abs = None
    for i in range(t, m):
        for j in range(t, n):
            v = w[i][j]
            if v != 0:
                av = -v if v < 0 else v
                if best_abs is None or av < best_abs:
                    best, best_abs = (i, j), av
                    if av == 1:
                        return best
    return best


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form S of an integer matrix with transforms.

    Returns (u, s, v) with u * a * v == s, |det u| == |det v| == 1, s
    diagonal with nonnegative entries and s[i][i] dividing s[i+1][i+1].
    Pivots are chosen by minimal absolute value, ties by position, so the
    output is deterministic.
    """
    m, n = dims(a)
    w = copy_matrix(a)
    u = identity(m)
    v = identity(n)
    t = 0
    while t < min(m, n):
        pos = _min_abs_pivot(w, t, m, n)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            w[t], w[pi] = w[pi], w[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for row in w:
                row[t], row[pj] = row[pj], row[t]
            for row in v:
                row[t], row[pj] = row[pj], row[t]
        # Clear column t then row t; a failed divisibility re-enters the loop
        # with a strictly smaller pivot, so this terminates.
        dirty = False
        piv = w[t][t]
        for i in range(t + 1, m):
            if w[i][t] != 0:
                q = w[i][t] // piv
                if q:
                    for j in range(t, n):
                        w[i][j] -= q * w[t][j]
                    for j in range(m):
                        u[i][j] -= q * u[t][j]
                if w[i][t] != 0:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, n):
            if w[t][j] != 0:
                q = w[t][j] // piv
                if q:
                    for i in range(t, m):
                        w[i][j] -= q * w[i][t]
                    for i in range(n):
                        v[i][j] -= q * v[i][t]
                if w[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # Divisibility sweep: pivot must divide every remaining entry.
        fixed = False
        for i in range(t + 1, m):
            if fixed:
                break
            for j in range(t + 1, n):
                if w[i][j] % piv != 0:
                    for jj in range(t, n):
                        w[t][jj] += w[i][jj]
                    for jj in range(m):
                        u[t][jj] += u[i][jj]
                    fixed = True
                    break
        if fixed:
            continue
        t += 1
    # Normalize signs, then enforce the divisibility chain on the diagonal.
    r = min(m, n)
    for i in range(r):
        if w[i][i] < 0:
            for j in range(n):
                v[j][i] = -v[j][i]
            w[i][i] = -w[i][i]
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a1, a2 = w[i][i], w[i + 1][i + 1]
            if a2 == 0 and a1 != 0:
                continue
            if a1 == 0 and a2 != 0:
                # Move the nonzero entry forward.
                w[i][i], w[i + 1][i + 1] = a2, 0
                u[i], u[i + 1] = u[i + 1], u[i]
                for row in v:
                    row[i], row[i + 1] = row[i + 1], row[i]
                changed = True
                continue
            if a1 != 0 and a2 % a1 != 0:
                g = gcd(a1, a2)
                lc = a1 // g * a2
                # 2x2 block surgery: diag(a1, a2) -> diag(g, lcm).
                # With a1 = g*p, a2 = g*q, gcd(p, q) = 1, pick x, y with
                # x*p + y*q = 1; the transforms below are unimodular.
                p, q = a1 // g, a2 // g
                x, y = _bezout(p, q)
                # Row ops on (u, w), col ops on (w, v), realized directly on
                # the 2x2 diagonal block and the transform matrices.
                # New block: [[g, 0], [0, lc]]
                # U' rows: r_i' = x*r_i + y*r_{i+1}; r_{i+1}' = -q*r_i + p*r_{i+1}
                for jj in range(m):
                    ui, ui1 = u[i][jj], u[i + 1][jj]
                    u[i][jj] = x * ui + y * ui1
                    u[i + 1][jj] = -q * ui + p * ui1
                # V' cols: c_i' = c_i + y*q*c_{i+1} ... derived from
                # [[x, y],[-q, p]] * diag(a1,a2) * [[1, -y*a2/g],[1, x*a1/g]]
                for row in v:
                    vi, vi1 = row[i], row[i + 1]
                    row[i] = vi + vi1
                    row[i + 1] = -y * q * vi + x * p * vi1
                w[i][i], w[i + 1][i + 1] = g, lc
                changed = True
    return u, w, v


def _bezout(p: int, q: int) -> tuple[int, int]:
    """x, y with x*p + y*q == gcd(p, q)."""
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    return old_s, old_t


def snf_diagonal(a: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form (the invariant factors)."""
    _, s, _ = smith_normal_form(a)
    m, n = dims(s)
    return [s[i][i] for i in range(min(m, n)) if s[i][i] != 0]


def rank_int(a: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix (equals the rational rank)."""
    return rank_rational(a)
