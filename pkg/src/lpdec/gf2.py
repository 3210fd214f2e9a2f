"""Dense GF(2) linear algebra on numpy ``uint8`` arrays.

A bit matrix is any 2-D array with entries in {0, 1}; every function here
returns ``uint8`` arrays and never mutates its input.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

BitMatrix = np.ndarray


def as_bitmatrix(M) -> np.ndarray:
    """Validate ``M`` and return it as a 2-D ``uint8`` array."""
    A = np.asarray(M)
    if A.ndim != 2:
        raise ValueError(f"bit matrix must be 2-D, got shape {A.shape}")
    if A.shape[1] < 1:
        raise ValueError("bit matrix needs at least one column")
    if A.size and not np.all((A == 0) | (A == 1)):
        raise ValueError("bit matrix entries must be 0 or 1")
    return A.astype(np.uint8, copy=True)


def row_reduce(M, pivot_column_order: Iterable[int] | None = None):
    """Gauss-Jordan elimination over GF(2) with a prescribed pivot order.

    Columns are tried greedily in ``pivot_column_order``; a column with no
    usable 1 among the not-yet-pivoted rows is skipped.  Each accepted pivot
    ``(r, c)`` ends up as a unit column ``c`` with its 1 in row ``r``, pivot
    rows being stacked from the top in acceptance order.

    Returns ``(reduced, pivots)`` with ``pivots`` a list of ``(row, col)``.
    """
    R = as_bitmatrix(M)
    m, n = R.shape
    order = list(range(n)) if pivot_column_order is None else [int(c) for c in pivot_column_order]
    if len(set(order)) != len(order):
        raise ValueError("pivot_column_order contains duplicates")
    if any(c < 0 or c >= n for c in order):
        raise ValueError("pivot column out of range")

    pivots: list[tuple[int, int]] = []
    row = 0
    for col in order:
        if row == m:
            break
        hits = np.flatnonzero(R[row:, col])
        if hits.size == 0:
            continue
        found = row + int(hits[0])
        if found != row:
            R[[row, found]] = R[[found, row]]
        others = np.flatnonzero(R[:, col])
        others = others[others != row]
        if others.size:
            R[others] ^= R[row]
        pivots.append((row, col))
        row += 1
    return R, pivots


def rank(M) -> int:
    return len(row_reduce(M)[1])


def null_space(M) -> np.ndarray:
    """Basis of the right null space over GF(2), one basis vector per row.

    Basis vector ``t`` has a 1 in the ``t``-th free (non-pivot) column and
    zeros in the other free columns.
    """
    R, pivots = row_reduce(M)
    n = R.shape[1]
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(n) if c not in pivot_cols]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, c in pivots:
            basis[t, c] = R[r, f]
    return basis


def matmul(A, B) -> np.ndarray:
    """Matrix (or matrix-vector) product reduced mod 2."""
    return (np.asarray(A, dtype=np.int64) @ np.asarray(B, dtype=np.int64) % 2).astype(np.uint8)


def syndrome(H, x) -> np.ndarray:
    return matmul(H, np.asarray(x).reshape(-1))


def remove_zero_rows(M) -> np.ndarray:
    A = as_bitmatrix(M)
    return A[A.any(axis=1)]


def same_row_space(A, B) -> bool:
    """True when two bit matrices with equal column count span the same space."""
    A = remove_zero_rows(A)
    B = remove_zero_rows(B)
    ra = rank(A) if A.shape[0] else 0
    rb = rank(B) if B.shape[0] else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(np.vstack([A, B])) == ra


def row_degrees(H) -> list[int]:
    return [int(d) for d in np.asarray(H).sum(axis=1)]


def unit_columns(H, cols: Sequence[int]) -> bool:
    """Whether each listed column of ``H`` has exactly one 1."""
    H = np.asarray(H)
    return all(int(H[:, c].sum()) == 1 for c in cols)
