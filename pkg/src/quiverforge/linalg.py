"""Exact dense Gaussian elimination over a coefficient field.

Matrices are lists of rows of :class:`~quiverforge.fields.Scalar`.  All
routines are deterministic: pivots are chosen left to right, rows in input
order.
"""
from __future__ import annotations

from .fields import Field, Scalar


def rref(rows: list[list[Scalar]], field: Field) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot column list)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: list[list[Scalar]], field: Field) -> int:
    return len(rref(rows, field)[0])


def reduce_vector(vec: list[Scalar], echelon: list[list[Scalar]],
                  pivots: list[int]) -> list[Scalar]:
    """Subtract echelon rows so the pivot coordinates of vec become zero."""
    out = list(vec)
    for row, c in zip(echelon, pivots):
        f = out[c]
        if f:
            out = [a - f * b for a, b in zip(out, row)]
    return out


def solve(rows: list[list[Scalar]], rhs: list[Scalar], field: Field):
    """One solution x of A^T x = rhs viewing `rows` as spanning vectors.

    Concretely: find coefficients c_i with sum_i c_i * rows[i] == rhs, or
    None when rhs is not in the row span.
    """
    n = len(rows)
    if n == 0:
        return [] if not any(rhs) else None
    ncols = len(rows[0])
    # augment each row with indicator coordinates to track coefficients
    aug = [list(rows[i]) + [field.one if j == i else field.zero for j in range(n)]
           for i in range(n)]
    ech, pivots = rref(aug, field)
    main = [c for c in pivots if c < ncols]
    target = list(rhs) + [field.zero] * n
    red = reduce_vector(target, ech, pivots)
    if any(red[:ncols]):
        return None
    # the tracked tail now holds -coefficients
    return [-red[ncols + i] for i in range(n)]


def nullspace(rows: list[list[Scalar]], field: Field) -> list[list[Scalar]]:
    """Basis of {x : A x = 0} where rows are the rows of A."""
    if not rows:
        return []
    ncols = len(rows[0])
    ech, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for row, pc in zip(ech, pivots):
            vec[pc] = -row[fc]
        basis.append(vec)
    return basis
