"""Exact linear algebra over the prime field GF(p).

Matrices are plain ``numpy.int64`` arrays holding residues in ``[0, p)``.
Pivoting is deterministic (first nonzero entry in each column), so every
result is reproducible.
"""
from functools import lru_cache

import numpy as np

from . import _kernels


class ResourceGuardError(RuntimeError):
    """Raised when a computation would exceed the configured size budget."""


DEFAULT_BUDGET = 4 * 10**8
_budget = [DEFAULT_BUDGET]


def set_budget(entries):
    """Largest matrix (in entries) any elimination may touch."""
    if entries <= 0:
        raise ValueError("budget must be positive")
    _budget[0] = int(entries)


def get_budget():
    return _budget[0]


@lru_cache(maxsize=None)
def _inv(p):
    return _kernels.inverse_table(p)


def as_fp(M, p):
    return np.asarray(M, dtype=np.int64) % p


def zeros(m, n):
    return np.zeros((m, n), dtype=np.int64)


def identity(n):
    return np.eye(n, dtype=np.int64)


def rref(M, p, budget=None):
    """Return (R, pivots): reduced row echelon form and pivot columns."""
    R = np.array(M, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    budget = _budget[0] if budget is None else budget
    if R.size > budget:
        raise ResourceGuardError(f"matrix of size {R.shape} exceeds budget {budget}")
    if R.size == 0:
        return R, np.zeros(0, dtype=np.int64)
    R = np.ascontiguousarray(R)
    piv = _kernels.rref_inplace(R, p, _inv(p))
    return R, np.asarray(piv, dtype=np.int64)


def rank(M, p):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def nullspace(M, p):
    """Columns form a basis of {x : M x = 0}."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return identity(n)
    R, piv = rref(M, p)
    free = np.setdiff1d(np.arange(n), piv)
    N = zeros(n, len(free))
    for k, f in enumerate(free):
        N[f, k] = 1
        N[piv, k] = (-R[: len(piv), f]) % p
    return N


def row_basis(M, p):
    """Nonzero rows of the reduced echelon form, with their pivot columns."""
    R, piv = rref(M, p)
    return R[: len(piv)], piv


def image(M, p):
    """Columns of M at pivot positions: a basis of the column space."""
    M = np.asarray(M, dtype=np.int64) % p
    if M.shape[1] == 0 or M.shape[0] == 0:
        return zeros(M.shape[0], 0)
    _, piv = rref(M, p)
    return M[:, piv]


def reduced_colspace(M, p):
    """Basis B of the column space with B[rows] = identity; returns (B, rows)."""
    M = np.asarray(M, dtype=np.int64)
    m = M.shape[0]
    if M.size == 0:
        return zeros(m, 0), np.zeros(0, dtype=np.int64)
    R, piv = row_basis(M.T, p)
    return np.ascontiguousarray(R.T), piv


def solve(M, b, p):
    """Some x with M x = b, or None when the system is inconsistent."""
    M = np.asarray(M, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vec = b.ndim == 1
    m, n = M.shape
    B = b.reshape(m, 1) if vec else b.reshape(m, -1)
    if m == 0:
        X = zeros(n, B.shape[1])
        return X[:, 0] if vec else X
    R, piv = rref(np.hstack([M, B]), p)
    if len(piv) and piv[-1] >= n:
        return None
    X = zeros(n, B.shape[1])
    X[piv] = R[: len(piv), n:]
    return X[:, 0] if vec else X


def inverse(M, p):
    n = M.shape[0]
    X = solve(M, identity(n), p)
    if X is None or rank(M, p) < n:
        raise ValueError("matrix is singular")
    return X


def matmul(A, B, p):
    return _kernels.matmul_mod(np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64), p)


def kron(A, B, p):
    return np.kron(A, B) % p


def direct_sum(*Ms):
    rows = sum(M.shape[0] for M in Ms)
    cols = sum(M.shape[1] for M in Ms)
    out = zeros(rows, cols)
    r = c = 0
    for M in Ms:
        out[r : r + M.shape[0], c : c + M.shape[1]] = M
        r += M.shape[0]
        c += M.shape[1]
    return out


def in_span(B, v, p):
    if B.shape[1] == 0:
        return not np.any(np.asarray(v) % p)
    return rank(np.column_stack([B, v]), p) == rank(B, p)


class RowReducer:
    """Incrementally maintained row-reduced basis of a growing row space."""

    def __init__(self, ncols, p):
        self.p = p
        self.ncols = ncols
        self.rows = zeros(0, ncols)

    def add(self, M):
        M = np.asarray(M, dtype=np.int64).reshape(-1, self.ncols)
        if M.shape[0] == 0:
            return
        self.rows, _ = row_basis(np.vstack([self.rows, M]), self.p)

    @property
    def rank(self):
        return self.rows.shape[0]

    def nullspace(self):
        return nullspace(self.rows, self.p)


class SparseFp:
    """Sparse matrix over GF(p) stored as per-column coordinate lists."""

    def __init__(self, shape, p, columns=None):
        self.shape = tuple(shape)
        self.p = p
        self.columns = columns if columns is not None else [dict() for _ in range(shape[1])]

    @classmethod
    def from_dense(cls, M, p):
        M = np.asarray(M, dtype=np.int64) % p
        cols = []
        for j in range(M.shape[1]):
            nz = np.flatnonzero(M[:, j])
            cols.append({int(i): int(M[i, j]) for i in nz})
        return cls(M.shape, p, cols)

    def to_dense(self):
        D = zeros(*self.shape)
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                D[i, j] = v
        return D

    def transpose(self):
        cols = [dict() for _ in range(self.shape[0])]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                cols[i][j] = v
        return SparseFp((self.shape[1], self.shape[0]), self.p, cols)

    def _echelon(self):
        """Gaussian elimination on the rows; returns {pivot: row dict}."""
        p = self.p
        pivrows = {}
        for row in self.transpose().columns:
            r = dict(row)
            while r:
                c = min(r)
                if c not in pivrows:
                    inv = pow(r[c], p - 2, p)
                    pivrows[c] = {k: (v * inv) % p for k, v in r.items()}
                    break
                f = r[c]
                for k, v in pivrows[c].items():
                    nv = (r.get(k, 0) - f * v) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        return pivrows

    def rank(self):
        return len(self._echelon())

    def nullspace(self):
        p = self.p
        piv = self._echelon()
        # back-substitute to reduced form
        for c in sorted(piv, reverse=True):
            for c2 in piv:
                if c2 < c and c in piv[c2]:
                    f = piv[c2][c]
                    row = piv[c2]
                    for k, v in piv[c].items():
                        nv = (row.get(k, 0) - f * v) % p
                        if nv:
                            row[k] = nv
                        else:
                            row.pop(k, None)
        n = self.shape[1]
        free = [j for j in range(n) if j not in piv]
        N = zeros(n, len(free))
        for k, f in enumerate(free):
            N[f, k] = 1
            for c, row in piv.items():
                if f in row:
                    N[c, k] = (-row[f]) % p
        return N
