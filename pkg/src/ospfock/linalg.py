"""Fraction-free exact linear algebra over the integers."""

from __future__ import annotations

from math import gcd
from typing import Sequence


def _rref_fraction_free(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Fraction-free Gauss-Jordan elimination (Bareiss update on every row).

    Returns ``(matrix, pivot_columns, d)``; each pivot entry equals ``d`` and
    every other entry of a pivot column is zero.
    """
    A = [list(r) for r in rows]
    m = len(A)
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(m):
            if i == r:
                continue
            aic = A[i][c]
            row_i = A[i]
            row_r = A[r]
            for j in range(ncols):
                num = piv * row_i[j] - aic * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss step must divide exactly"
                row_i[j] = q
        pivots.append(c)
        prev = piv
        r += 1
    # rows of earlier pivots still carry older pivot values; rescale to d
    d = prev
    for i, c in enumerate(pivots):
        a = A[i][c]
        if a != d:
            A[i] = [x * d // a if (x * d) % a == 0 else None for x in A[i]]
            if None in A[i]:  # pragma: no cover - never hit for exact minors
                raise ArithmeticError("inexact pivot rescaling")
    return A[:r], pivots, d


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Integer basis of ``{x : rows @ x = 0}``, each vector primitive (gcd 1)."""
    rows = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    R, pivots, d = _rref_fraction_free(rows, ncols)
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        x = [0] * ncols
        x[j] = d
        for i, c in enumerate(pivots):
            x[c] = -R[i][j]
        g = 0
        for v in x:
            g = gcd(g, v)
        if g > 1:
            x = [v // g for v in x]
        lead = next(v for v in x if v)
        if lead < 0:
            x = [-v for v in x]
        basis.append(x)
    return basis


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    rows = [list(map(int, r)) for r in rows if any(r)]
    if not rows:
        return 0
    return len(_rref_fraction_free(rows, ncols)[1])
