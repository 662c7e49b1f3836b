"""Dense exact linear algebra over F_q.

Matrices are 2-D ``uint8`` numpy arrays of field element indices; the field
is passed alongside.  Elimination and products run through the table
kernels in :mod:`grssub.kernels`.
"""
from __future__ import annotations

import numpy as np

from . import kernels
from .smallfield import SmallField


def as_matrix(A, field: SmallField | None = None):
    A = np.asarray(A, dtype=np.uint8)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {A.shape}")
    if field is not None and A.size and int(A.max()) >= field.q:
        raise ValueError(f"matrix entry {int(A.max())} is not an element of F_{field.q}")
    return A


def mat_mul(A, B, field: SmallField):
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch: {A.shape} x {B.shape}")
    return kernels.matmul(
        np.ascontiguousarray(A), np.ascontiguousarray(B), field.add_table, field.mul_table
    )


def rref(A, field: SmallField):
    """Reduced row echelon form and the list of pivot columns.

    Pivots are chosen as the first nonzero entry, scanning columns left to
    right and rows top to bottom, so the output is canonical.
    """
    A = np.ascontiguousarray(as_matrix(A))
    R, pivots = kernels.rref(A, field.add_table, field.mul_table, field.inv_table, field.neg_table)
    return R, [int(c) for c in pivots]


def rank(A, field: SmallField) -> int:
    return len(rref(A, field)[1])


def row_basis(A, field: SmallField):
    """RREF with the zero rows dropped."""
    R, piv = rref(A, field)
    return R[: len(piv)]


def left_kernel_basis(M, field: SmallField):
    """RREF basis K of {x : x M = 0}; shape ``(rows(M) - rank(M), rows(M))``."""
    M = as_matrix(M)
    a = M.shape[0]
    R, piv = rref(M.T, field)
    free = [c for c in range(a) if c not in set(piv)]
    K = np.zeros((len(free), a), dtype=np.uint8)
    for r, f in enumerate(free):
        K[r, f] = 1
        for i, c in enumerate(piv):
            K[r, c] = field.neg(R[i, f])
    return row_basis(K, field) if len(free) else K


def row_space_equal(A, B, field: SmallField) -> bool:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[1]:
        raise ValueError(f"column counts differ: {A.shape[1]} vs {B.shape[1]}")
    return np.array_equal(row_basis(A, field), row_basis(B, field))


def format_matrix(A) -> str:
    """One row per line, entries separated by single spaces."""
    return "\n".join(" ".join(str(int(x)) for x in row) for row in np.asarray(A))


def parse_matrix(text: str, cols: int | None = None):
    rows = [[int(tok) for tok in line.split()] for line in text.strip().splitlines() if line.strip()]
    if not rows:
        return np.zeros((0, cols or 0), dtype=np.uint8)
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix text")
    return np.array(rows, dtype=np.uint8)
