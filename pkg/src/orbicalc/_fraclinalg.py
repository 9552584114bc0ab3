"""Tiny exact linear algebra over Fractions (dense, desk scale)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def mat(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0])
    out = zeros(n, m)
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            for j in range(m):
                row[j] += a * Bt[j]
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, c: Fraction) -> Matrix:
    return [[c * x for x in row] for row in A]


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return all(ra == rb for ra, rb in zip(A, B))


def mat_rank(A: Matrix) -> int:
    rows = [list(r) for r in A]
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(n_cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def trace(A: Matrix) -> Fraction:
    return sum(A[i][i] for i in range(len(A)))


def column_space_basis(A: Matrix) -> list[list[Fraction]]:
    """Basis of the column space, as a list of column vectors."""
    rows = [list(r) for r in A]
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    work = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, m) if work[r][c] != 0), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][c]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(m):
            if r != rank and work[r][c] != 0:
                f = work[r][c]
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        pivots.append(c)
        rank += 1
    return [[rows[i][c] for i in range(m)] for c in pivots]
