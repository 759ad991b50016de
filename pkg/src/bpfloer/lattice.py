"""Row-style Hermite normal form over the integers and reduction modulo a lattice."""

from __future__ import annotations


def hermite_normal_form(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Return the nonzero rows of the row HNF of ``rows``.

    Pivots are positive and strictly increase to the right; entries above a
    pivot are reduced into ``[0, pivot)``.
    """
    A = [list(r) for r in rows]
    for r in A:
        assert len(r) == ncols
    out: list[list[int]] = []
    top = 0
    for j in range(ncols):
        live = [i for i in range(top, len(A)) if A[i][j] != 0]
        if not live:
            continue
        # Euclid on column j among the remaining rows.
        while True:
            live = [i for i in range(top, len(A)) if A[i][j] != 0]
            piv = min(live, key=lambda i: abs(A[i][j]))
            A[top], A[piv] = A[piv], A[top]
            done = True
            for i in range(top + 1, len(A)):
                if A[i][j]:
                    q = A[i][j] // A[top][j]
                    A[i] = [x - q * y for x, y in zip(A[i], A[top])]
                    if A[i][j]:
                        done = False
            if done:
                break
        if A[top][j] < 0:
            A[top] = [-x for x in A[top]]
        for i in range(top):
            q = A[i][j] // A[top][j]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[top])]
        top += 1
    for r in A[:top]:
        out.append(r)
    return out


def pivots(hnf: list[list[int]]) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in hnf]


def reduce_mod(v, hnf: list[list[int]], piv: list[int] | None = None) -> tuple[int, ...]:
    """Canonical representative of ``v`` modulo the row span of ``hnf``."""
    if piv is None:
        piv = pivots(hnf)
    v = list(v)
    for row, j in zip(hnf, piv):
        q = v[j] // row[j]
        if q:
            for jj in range(j, len(v)):
                v[jj] -= q * row[jj]
    return tuple(v)
