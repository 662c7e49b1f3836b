"""Table-driven finite-field kernels.

Every kernel works on integer arrays of element indices together with the
field's addition and multiplication tables, so one implementation serves
F_q and (in the oracle) F_Q alike.  Each kernel exists twice: a numba
``@njit`` loop nest and a vectorised numpy fallback.  The module-level names
(:func:`rref`, :func:`matmul`, :func:`span`, :func:`min_weight`) dispatch to
one or the other according to :data:`grssub._accel.USE_NUMBA`.
"""
from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

# --------------------------------------------------------------------------
# numpy fallbacks


def rref_numpy(A, add, mul, inv, neg):
    R = np.array(A, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = mul[inv[R[r, c]], R[r]]
        factors = neg[R[:, c]]
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            R[hit] = add[R[hit], mul[factors[hit, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


def matmul_numpy(A, B, add, mul):
    C = np.zeros((A.shape[0], B.shape[1]), dtype=A.dtype)
    for l in range(A.shape[1]):
        C = add[C, mul[A[:, l, None], B[None, l, :]]]
    return C


def span_numpy(G, add, mul, q):
    k, n = G.shape
    out = np.zeros((1, n), dtype=G.dtype)
    scalars = np.arange(q, dtype=G.dtype)
    for r in range(k):
        shifts = mul[scalars[:, None], G[r][None, :]]  # (q, n)
        out = add[out[None, :, :], shifts[:, None, :]].reshape(-1, n)
    return out


def min_weight_numpy(words):
    w = np.count_nonzero(words, axis=1)
    w = w[w > 0]
    return int(w.min()) if w.size else 0


# --------------------------------------------------------------------------
# numba kernels


@njit
def _rref_nb(R, add, mul, inv, neg):
    rows, cols = R.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = R[r, j]
                R[r, j] = R[piv, j]
                R[piv, j] = tmp
        s = inv[R[r, c]]
        for j in range(c, cols):
            R[r, j] = mul[s, R[r, j]]
        for i in range(rows):
            if i != r and R[i, c] != 0:
                f = neg[R[i, c]]
                for j in range(c, cols):
                    R[i, j] = add[R[i, j], mul[f, R[r, j]]]
        pivots[r] = c
        r += 1
    return pivots[:r]


def rref_numba(A, add, mul, inv, neg):
    R = np.array(A, copy=True)
    if R.size == 0:
        return R, np.zeros(0, dtype=np.int64)
    pivots = _rref_nb(R, add, mul, inv, neg)
    return R, pivots


@njit
def _matmul_nb(A, B, add, mul, C):
    n, inner = A.shape
    cols = B.shape[1]
    for i in range(n):
        for l in range(inner):
            a = A[i, l]
            if a == 0:
                continue
            for j in range(cols):
                C[i, j] = add[C[i, j], mul[a, B[l, j]]]


def matmul_numba(A, B, add, mul):
    C = np.zeros((A.shape[0], B.shape[1]), dtype=A.dtype)
    if C.size and A.shape[1]:
        _matmul_nb(A, B, add, mul, C)
    return C


@njit
def _span_nb(G, add, mul, q, out):
    k, n = G.shape
    size = 1
    for r in range(k):
        for a in range(1, q):
            base = a * size
            for j in range(n):
                s = mul[a, G[r, j]]
                for idx in range(size):
                    out[base + idx, j] = add[out[idx, j], s]
        size *= q


def span_numba(G, add, mul, q):
    k, n = G.shape
    out = np.zeros((q**k, n), dtype=G.dtype)
    if k and n:
        _span_nb(G, add, mul, q, out)
    return out


@njit
def _min_weight_nb(words):
    best = 0
    n = words.shape[1]
    for i in range(words.shape[0]):
        w = 0
        for j in range(n):
            if words[i, j] != 0:
                w += 1
                if best and w >= best:
                    break
        if w and (best == 0 or w < best):
            best = w
    return best


def min_weight_numba(words):
    if words.size == 0:
        return 0
    return int(_min_weight_nb(words))


NUMPY_KERNELS = {
    "rref": rref_numpy,
    "matmul": matmul_numpy,
    "span": span_numpy,
    "min_weight": min_weight_numpy,
}
NUMBA_KERNELS = {
    "rref": rref_numba,
    "matmul": matmul_numba,
    "span": span_numba,
    "min_weight": min_weight_numba,
}
ACTIVE = "numba" if USE_NUMBA else "numpy"
_KERNELS = NUMBA_KERNELS if USE_NUMBA else NUMPY_KERNELS

rref = _KERNELS["rref"]
matmul = _KERNELS["matmul"]
span = _KERNELS["span"]
min_weight = _KERNELS["min_weight"]
