"""Exact integer rank by fraction-free (Bareiss) elimination."""

from __future__ import annotations


def bareiss_rank(M: list[list[int]]) -> int:
    if not M or not M[0]:
        return 0
    A = [list(r) for r in M]
    nrows, ncols = len(A), len(A[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
        if r == nrows:
            break
    return r
