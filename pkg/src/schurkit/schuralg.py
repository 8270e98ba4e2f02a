"""The Schur algebra S(n, d) over GF(p), realised as Sigma_d-invariant operators on V^{(x)d}.

A basis element is an orbit of pairs (I, J) of words in [n]^d.  It is stored as
the n x n matrix counting positions k with (I_k, J_k) = (a, b).  The element
maps the weight wt(J) to the weight wt(I): its right weight is wt(J) (column
sums) and its left weight wt(I) (row sums).
"""
import math
import os
import struct
from functools import lru_cache
from itertools import product
from pathlib import Path

import numpy as np

from . import exactla as la
from .combinatorics import compositions, is_dominant

MAGIC = b"SCHK1"
_REC = np.dtype([("a", "<u4"), ("b", "<u4"), ("c", "<u4"), ("coef", "<u2")])


def cache_dir():
    return Path(os.environ.get("SCHURKIT_CACHE", ".schurkit-cache"))


def _matrices(n, d):
    """All n x n non-negative integer matrices of total d, deterministic order."""
    return [np.array(c, dtype=np.int64).reshape(n, n) for c in compositions(d, n * n)]


class SchurAlgebra:
    """Structure-constant model of S(n, d) or of a weight-truncated corner of it.

    ``weights`` lists the compositions whose idempotents sum to the unit.  For
    the full algebra these are all compositions of d into n parts.
    """

    def __init__(self, n, d, p, mats, weights, triples, parent=None, parent_index=None):
        self.n, self.d, self.p = n, d, p
        self.mats = mats
        self.dim = len(mats)
        self.weights = list(weights)
        self.weight_index = {w: i for i, w in enumerate(self.weights)}
        self.parent = parent
        self.parent_index = parent_index
        self.left = np.array([self.weight_index[tuple(int(x) for x in m.sum(1))] for m in mats], dtype=np.int64)
        self.right = np.array([self.weight_index[tuple(int(x) for x in m.sum(0))] for m in mats], dtype=np.int64)
        self.index = {m.tobytes(): i for i, m in enumerate(mats)}
        ta, tb, tc, tv = triples
        order = np.lexsort((tc, tb, ta))
        self.ta, self.tb, self.tc, self.tv = ta[order], tb[order], tc[order], tv[order]
        self._a_start = np.searchsorted(self.ta, np.arange(self.dim + 1))
        self.idempotents = [self.index[np.diag(w).astype(np.int64).tobytes()] for w in self.weights]
        self.transpose_perm = np.array([self.index[m.T.copy().tobytes()] for m in mats], dtype=np.int64)
        # basis elements of e_psi A e_chi, grouped
        self._pieces = {}
        for b in range(self.dim):
            self._pieces.setdefault((int(self.left[b]), int(self.right[b])), []).append(b)
        self._pieces = {k: np.array(v, dtype=np.int64) for k, v in self._pieces.items()}
        self._local = np.zeros(self.dim, dtype=np.int64)
        for arr in self._pieces.values():
            self._local[arr] = np.arange(len(arr))
        self._lmul_cache = {}
        self._rmul_cache = {}
        self._b_order = None
        self._chevalley = None

    def __repr__(self):
        kind = "S" if self.parent is None else "corner of S"
        return f"<{kind}({self.n},{self.d}) over GF({self.p}), dim {self.dim}>"

    # basic data
    def piece(self, psi, chi):
        """Basis indices of e_psi A e_chi (weight indices)."""
        return self._pieces.get((psi, chi), np.zeros(0, dtype=np.int64))

    def local_index(self, b):
        return int(self._local[b])

    def rep(self, b):
        """Lexicographically least pair (I, J) in the orbit."""
        m = self.mats[b]
        pairs = [(a, c) for a in range(self.n) for c in range(self.n) for _ in range(m[a, c])]
        return tuple(x for x, _ in pairs), tuple(y for _, y in pairs)

    def basis_index(self, mat):
        return self.index[np.asarray(mat, dtype=np.int64).tobytes()]

    def unit(self):
        u = np.zeros(self.dim, dtype=np.int64)
        u[self.idempotents] = 1
        return u

    def basis_vector(self, b):
        v = np.zeros(self.dim, dtype=np.int64)
        v[b] = 1
        return v

    def transpose_elt(self, b):
        return int(self.transpose_perm[b])

    def transpose_vec(self, x):
        y = np.zeros(self.dim, dtype=np.int64)
        y[self.transpose_perm] = x
        return y

    # multiplication
    def mul(self, x, y):
        """Product of two elements given as coefficient vectors."""
        w = (x[self.ta] * y[self.tb] % self.p) * self.tv
        out = np.bincount(self.tc, weights=w.astype(np.float64), minlength=self.dim)
        return np.rint(out).astype(np.int64) % self.p

    def mul_basis(self, a, b):
        s, e = self._a_start[a], self._a_start[a + 1]
        sel = self.tb[s:e] == b
        out = np.zeros(self.dim, dtype=np.int64)
        np.add.at(out, self.tc[s:e][sel], self.tv[s:e][sel])
        return out % self.p

    def left_mult_block(self, c, chi):
        """Matrix of x -> c x from e_{r(c)} A e_chi to e_{l(c)} A e_chi (local indices)."""
        key = (c, chi)
        M = self._lmul_cache.get(key)
        if M is None:
            src = self.piece(int(self.right[c]), chi)
            dst = self.piece(int(self.left[c]), chi)
            M = np.zeros((len(dst), len(src)), dtype=np.int64)
            s, e = self._a_start[c], self._a_start[c + 1]
            tb, tc, tv = self.tb[s:e], self.tc[s:e], self.tv[s:e]
            sel = self.right[tb] == chi
            np.add.at(M, (self._local[tc[sel]], self._local[tb[sel]]), tv[sel])
            M %= self.p
            self._lmul_cache[key] = M
        return M

    def right_mult_block(self, a, psi):
        """Matrix of x -> x a from e_psi A e_{l(a)} to e_psi A e_{r(a)} (local indices)."""
        key = (a, psi)
        M = self._rmul_cache.get(key)
        if M is None:
            if self._b_order is None:
                self._b_order = np.argsort(self.tb, kind="stable")
                self._b_start = np.searchsorted(self.tb[self._b_order], np.arange(self.dim + 1))
            src = self.piece(psi, int(self.left[a]))
            dst = self.piece(psi, int(self.right[a]))
            M = np.zeros((len(dst), len(src)), dtype=np.int64)
            rows = self._b_order[self._b_start[a] : self._b_start[a + 1]]
            ta, tc, tv = self.ta[rows], self.tc[rows], self.tv[rows]
            sel = self.left[ta] == psi
            np.add.at(M, (self._local[tc[sel]], self._local[ta[sel]]), tv[sel])
            M %= self.p
            self._rmul_cache[key] = M
        return M

    def power(self, x, k):
        result = self.unit()
        base = x.copy()
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    # generators
    def chevalley_generators(self):
        """Basis elements diag + a E_(c,c+-1): divided powers of the root elements."""
        if self._chevalley is None:
            gens = []
            for b, m in enumerate(self.mats):
                off = m - np.diag(np.diag(m))
                nz = np.argwhere(off)
                if len(nz) == 1 and abs(int(nz[0][0]) - int(nz[0][1])) == 1:
                    gens.append(b)
            self._chevalley = np.array(gens, dtype=np.int64)
        return self._chevalley

    def corner(self, weights):
        """The algebra e A e for e the sum of the idempotents of ``weights``."""
        weights = [tuple(w) for w in weights]
        wi = {self.weights.index(w) for w in weights}
        keep = np.array([b for b in range(self.dim) if self.left[b] in wi and self.right[b] in wi], dtype=np.int64)
        new = -np.ones(self.dim, dtype=np.int64)
        new[keep] = np.arange(len(keep))
        sel = (new[self.ta] >= 0) & (new[self.tb] >= 0)
        triples = (new[self.ta[sel]], new[self.tb[sel]], new[self.tc[sel]], self.tv[sel])
        return SchurAlgebra(self.n, self.d, self.p, [self.mats[b] for b in keep], weights, triples,
                            parent=self, parent_index=keep)

    def dominant_corner(self):
        return self.corner([w for w in self.weights if is_dominant(w)])

    def element_from_parent(self, x):
        return x[self.parent_index].copy()

    def weight_idempotents(self):
        return list(zip(self.weights, self.idempotents))


def _structure_constants(n, d, p, mats):
    """c_ab^c = #{K : (I_c, K) in orbit a, (K, J_c) in orbit b}."""
    dim = len(mats)
    base = d + 1
    pw = base ** np.arange(n * n, dtype=np.int64)
    keys = np.array([int((m.reshape(-1) * pw).sum()) for m in mats], dtype=np.int64)
    order = np.argsort(keys)
    skeys = keys[order]
    allK = np.array(list(product(range(n), repeat=d)), dtype=np.int64).reshape(-1, d)
    reps_I = np.zeros((dim, d), dtype=np.int64)
    reps_J = np.zeros((dim, d), dtype=np.int64)
    for c, m in enumerate(mats):
        pairs = [(a, b) for a in range(n) for b in range(n) for _ in range(m[a, b])]
        reps_I[c] = [x for x, _ in pairs]
        reps_J[c] = [y for _, y in pairs]
    chunk = max(1, 2_000_000 // max(1, len(allK) * d))
    codes = []
    for s in range(0, dim, chunk):
        I = reps_I[s : s + chunk, None, :]
        J = reps_J[s : s + chunk, None, :]
        K = allK[None, :, :]
        ka = pw[n * I + K].sum(-1)
        kb = pw[n * K + J].sum(-1)
        a = order[np.searchsorted(skeys, ka)]
        b = order[np.searchsorted(skeys, kb)]
        c = np.broadcast_to(np.arange(s, min(s + chunk, dim))[:, None], a.shape)
        codes.append(((a * dim + b) * dim + c).reshape(-1))
    codes = np.concatenate(codes)
    uniq, counts = np.unique(codes, return_counts=True)
    coef = counts % p
    sel = coef != 0
    uniq, coef = uniq[sel], coef[sel]
    c = uniq % dim
    ab = uniq // dim
    return ab // dim, ab % dim, c, coef.astype(np.int64)


def _cache_path(n, d, p):
    return cache_dir() / f"schur_n{n}_d{d}_p{p}.bin"


def _write_cache(path, n, d, p, dim, triples):
    path.parent.mkdir(parents=True, exist_ok=True)
    rec = np.empty(len(triples[0]), dtype=_REC)
    rec["a"], rec["b"], rec["c"], rec["coef"] = triples
    tmp = path.with_suffix(".tmp")
    with open(tmp, "wb") as fh:
        fh.write(MAGIC + struct.pack("<4I", n, d, p, dim))
        fh.write(rec.tobytes())
    os.replace(tmp, path)


def _read_cache(path, n, d, p, dim):
    try:
        raw = path.read_bytes()
    except OSError:
        return None
    head = len(MAGIC) + 16
    if raw[: len(MAGIC)] != MAGIC or struct.unpack("<4I", raw[len(MAGIC):head]) != (n, d, p, dim):
        return None
    rec = np.frombuffer(raw[head:], dtype=_REC)
    return tuple(rec[f].astype(np.int64) for f in ("a", "b", "c", "coef"))


@lru_cache(maxsize=None)
def build_schur_algebra(n, d, p, use_cache=True):
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if n**d > 10**6:
        raise la.ResourceGuardError(f"n^d = {n**d} exceeds the 10^6 guard")
    mats = _matrices(n, d)
    dim = len(mats)
    assert dim == math.comb(n * n + d - 1, d)
    triples = None
    path = _cache_path(n, d, p)
    if use_cache:
        triples = _read_cache(path, n, d, p, dim)
    if triples is None:
        triples = _structure_constants(n, d, p, mats)
        if use_cache:
            try:
                _write_cache(path, n, d, p, dim, triples)
            except OSError:
                pass
    return SchurAlgebra(n, d, p, mats, compositions(d, n), triples)


def weight_idempotents(A):
    return A.weight_idempotents()


def transpose_elt(A, b):
    return A.transpose_elt(b)


def truncation_idempotent(A_m, n):
    """Sum of weight idempotents for weights supported on the first n coordinates."""
    if n >= A_m.n:
        raise ValueError("need n < m")
    e = np.zeros(A_m.dim, dtype=np.int64)
    for w, b in A_m.weight_idempotents():
        if all(x == 0 for x in w[n:]):
            e[b] = 1
    return e


def embed_matrix(mat, m):
    out = np.zeros((m, m), dtype=np.int64)
    k = mat.shape[0]
    out[:k, :k] = mat
    return out


def truncation_map(A_m, A_n):
    """Basis index in A_m of each basis element of A_n (zero-padded matrices)."""
    return np.array([A_m.basis_index(embed_matrix(m, A_m.n)) for m in A_n.mats], dtype=np.int64)


def weight_embedding(A_m, A_n):
    return np.array([A_m.weight_index[w + (0,) * (A_m.n - A_n.n)] for w in A_n.weights], dtype=np.int64)


def verify_truncation(A_m, A_n):
    """Check eA_me is spanned by the padded basis of A_n with equal structure constants."""
    e = truncation_idempotent(A_m, A_n.n)
    emb = truncation_map(A_m, A_n)
    idem = np.flatnonzero(e)
    inside = [b for b in range(A_m.dim) if A_m.left[b] in A_m.left[idem] and A_m.right[b] in A_m.left[idem]]
    if sorted(inside) != sorted(emb.tolist()):
        return False
    back = -np.ones(A_m.dim, dtype=np.int64)
    back[emb] = np.arange(A_n.dim)
    sel = (back[A_m.ta] >= 0) & (back[A_m.tb] >= 0)
    mine = set(zip(back[A_m.ta[sel]].tolist(), back[A_m.tb[sel]].tolist(), back[A_m.tc[sel]].tolist(), A_m.tv[sel].tolist()))
    theirs = set(zip(A_n.ta.tolist(), A_n.tb.tolist(), A_n.tc.tolist(), A_n.tv.tolist()))
    return mine == theirs


def word_key_powers(n, d):
    return (d + 1) ** np.arange(n * n, dtype=np.int64)


def pair_keys(n, d, rows, cols):
    """Orbit key of every pair (I, J) with I in ``rows`` and J in ``cols`` (word arrays)."""
    pw = word_key_powers(n, d)
    return pw[n * rows[:, None, :] + cols[None, :, :]].sum(-1)


def orbit_key(A, b):
    return int((A.mats[b].reshape(-1) * word_key_powers(A.n, A.d)).sum())


@lru_cache(maxsize=8)
def _all_pair_keys(n, d):
    words = np.array(list(product(range(n), repeat=d)), dtype=np.int64).reshape(-1, d)
    return pair_keys(n, d, words, words)


def operator_matrix(A, b):
    """The operator of basis element b on V^{(x)d}, words in lexicographic order."""
    hit = _all_pair_keys(A.n, A.d) == orbit_key(A, b)
    return la.SparseFp.from_dense(hit.astype(np.int64), A.p)
