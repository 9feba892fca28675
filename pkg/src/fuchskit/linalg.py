"""Small exact linear algebra over Q: reduced row echelon form and null
spaces.  Matrices are lists of lists of rationals; sizes stay modest
(hundreds of rows), so plain Gaussian elimination with exact arithmetic is
enough."""

from __future__ import annotations

from .qnum import ONE, ZERO, qq


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    mat = [[qq(v) for v in row] for row in rows]
    pivots = []
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    return mat, pivots


def nullspace(rows, ncols=None):
    """Basis of the right null space of the matrix, one vector per free
    column, in echelon order (free variable set to 1)."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        rows = [[ZERO] * ncols]
    mat, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for i, p in enumerate(pivots):
            vec[p] = -mat[i][f]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """One solution of A x = b, or None when inconsistent."""
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    mat, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = mat[i][ncols]
    return x
