"""Deterministic Gaussian elimination over a finite field.

Matrices are numpy int arrays of encoded field elements; elimination always
picks the first nonzero pivot, so ranks and kernels are bit-stable.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


def row_echelon(ctx: FieldCtx, M, reduced: bool = False):
    """Row echelon form (optionally reduced) and the list of pivot columns."""
    A = np.array(M, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = ctx.inv(int(A[r, col]))
        A[r] = ctx.vmul(A[r], inv)
        below = A[r + 1:, col]
        mask = below != 0
        if mask.any():
            rows = np.nonzero(mask)[0] + r + 1
            A[rows] = ctx.vsub(A[rows], ctx.vmul(A[rows, col][:, None], A[r][None, :]))
        if reduced and r > 0:
            above = A[:r, col]
            mask = above != 0
            if mask.any():
                rows = np.nonzero(mask)[0]
                A[rows] = ctx.vsub(A[rows], ctx.vmul(A[rows, col][:, None], A[r][None, :]))
        pivots.append(col)
        r += 1
    return A, pivots


def rank(ctx: FieldCtx, M) -> int:
    _, pivots = row_echelon(ctx, M)
    return len(pivots)


def nullspace(ctx: FieldCtx, M):
    """Rows form a basis of {x : M x = 0}; empty (0, ncols) array if trivial."""
    A = np.asarray(M, dtype=np.int64)
    ncols = A.shape[1]
    R, pivots = row_echelon(ctx, A, reduced=True)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = ctx.neg(int(R[row, fc]))
    return basis


def matmul(ctx: FieldCtx, A, B):
    """Field matrix product of A (r x m) and B (m x c)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        col = A[:, k]
        if not col.any():
            continue
        out = ctx.vadd(out, ctx.vmul(col[:, None], B[k][None, :]))
    return out
