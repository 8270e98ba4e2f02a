"""Hot loops for elimination over GF(p).

Two interchangeable implementations are kept side by side: a numba kernel and
a vectorised numpy one.  Setting ``SCHURKIT_NO_NUMBA=1`` forces the numpy path.
"""
import os

import numpy as np

USE_NUMBA = os.environ.get("SCHURKIT_NO_NUMBA", "0") not in ("1", "true", "yes")

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def inverse_table(p):
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def rref_numpy(M, p, inv):
    """Reduce M (int64, entries in [0,p)) in place; return pivot columns."""
    m, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv], c:] = M[[piv, r], c:]
        f = inv[M[r, c]]
        if f != 1:
            M[r, c:] = (M[r, c:] * f) % p
        col = M[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            M[rows, c:] = (M[rows, c:] - np.outer(col[rows], M[r, c:])) % p
        pivots.append(c)
        r += 1
    return np.array(pivots, dtype=np.int64)


def _rref_loops(M, p, inv):
    m, n = M.shape
    pivots = np.empty(min(m, n), np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                t = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = t
        f = inv[M[r, c]]
        if f != 1:
            for j in range(c, n):
                M[r, j] = (M[r, j] * f) % p
        for i in range(m):
            if i != r:
                g = M[i, c]
                if g != 0:
                    for j in range(c, n):
                        M[i, j] = (M[i, j] - g * M[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


if USE_NUMBA:
    rref_numba = njit(cache=True)(_rref_loops)
    rref_inplace = rref_numba
else:
    rref_numba = None
    rref_inplace = rref_numpy


def matmul_mod(A, B, p):
    """Exact product mod p through float64 BLAS when it cannot overflow."""
    k = A.shape[1]
    if k == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if k * (p - 1) ** 2 < 2**52:
        C = A.astype(np.float64) @ B.astype(np.float64)
        return np.rint(C).astype(np.int64) % p
    if k * (p - 1) ** 2 < 2**63:
        return (A @ B) % p
    return ((A.astype(object) @ B.astype(object)) % p).astype(np.int64)
