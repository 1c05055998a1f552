"""Small exact linear algebra helpers (row echelon, rank, kernels).

Matrices are lists of lists of field scalars (Fractions or FpElements,
never mixed).  Everything here works over any exact field because scalar
division is exact; nothing is sized for large dense systems.
"""

from __future__ import annotations

__all__ = ["row_echelon", "matrix_rank", "kernel_basis"]


def row_echelon(rows, one):
    """Reduced row echelon form.

    Returns (rref_rows, pivot_columns).  ``one`` is the field's multiplicative
    identity, needed to normalize pivots without guessing the scalar type.
    Input rows are not mutated.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = one / rows[r][c]
        rows[r] = [inv * v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def matrix_rank(rows, one) -> int:
    return len(row_echelon(rows, one)[1])


def kernel_basis(rows, one, zero):
    """Basis for the right kernel of the matrix, one vector per free column.

    Vectors come out with a 1 in their free coordinate and pivot coordinates
    filled in from the reduced echelon form, so the basis is canonical for a
    fixed row span.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = row_echelon(rows, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for r, c in enumerate(pivots):
            vec[c] = -rref[r][f]
        basis.append(vec)
    return basis
