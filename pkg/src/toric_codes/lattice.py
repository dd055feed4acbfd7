"""Exact integer linear algebra for small matrices.

Matrices are sequences of rows of Python ints.  Everything here is exact:
ranks go through Fractions, kernels through unimodular column operations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def shape(a: Matrix) -> tuple[int, int]:
    rows = len(a)
    return rows, (len(a[0]) if rows else 0)


def rank(a: Matrix) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = shape(m)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def matmul(a: Matrix, b: Matrix) -> list[list[int]]:
    _, k = shape(a)
    kb, cols = shape(b)
    if k != kb:
        raise ValueError("inner dimensions differ")
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(cols)]
            for i in range(len(a))]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def integer_kernel(a: Matrix, ncols: int | None = None) -> list[tuple[int, ...]]:
    """A lattice basis of ``{u in Z^m : a u = 0}``.

    Column-reduces ``[a; I]`` with unimodular operations until the top block
    is in column echelon form; the bottom parts of the zero top columns form
    a basis of the kernel lattice.
    """
    rows, cols = shape(a)
    if ncols is not None:
        cols = ncols
    # work on columns: top part (len rows) + bottom part (identity)
    work = [[a[i][j] for i in range(rows)] + [int(k == j) for k in range(cols)]
            for j in range(cols)]
    pivot = 0
    for r in range(rows):
        while True:
            nz = [j for j in range(pivot, cols) if work[j][r] != 0]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(work[j][r]))
            work[pivot], work[j] = work[j], work[pivot]
            done = True
            for k in range(pivot + 1, cols):
                if work[k][r]:
                    q = work[k][r] // work[pivot][r]
                    work[k] = [x - q * y for x, y in zip(work[k], work[pivot])]
                    if work[k][r]:
                        done = False
            if done:
                pivot += 1
                break
        if pivot == cols:
            break
    return [tuple(col[rows:]) for col in work[pivot:]]


def lawrence_lift(a: Matrix, ncols: int | None = None) -> list[list[int]]:
    """``[[A, 0], [I, I]]`` for a k x n matrix ``A``.

    ``ncols`` gives n when ``A`` has no rows.
    """
    k, n = shape(a)
    if ncols is not None:
        if k and ncols != n:
            raise ValueError("ncols disagrees with the matrix")
        n = ncols
    top = [list(row) + [0] * n for row in a]
    bottom = [[int(i == j) for j in range(n)] + [int(i == j) for j in range(n)]
              for i in range(n)]
    return top + bottom
