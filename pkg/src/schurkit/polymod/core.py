"""Weight-graded modules over Schur algebras, maps between them, Hom spaces and complexes.

A module M over an algebra A stores one dimension per weight of A.  The action
of a basis element b is the block M_{r(b)} -> M_{l(b)}; blocks are produced on
demand by a closure and cached.
"""
import hashlib
import itertools

import numpy as np

from .. import exactla as la
from ..characters import SymPolynomial


class AModule:
    def __init__(self, algebra, dims, block_fn, label=None):
        self.algebra = algebra
        self.p = algebra.p
        self.dims = np.asarray(dims, dtype=np.int64)
        assert len(self.dims) == len(algebra.weights)
        self._block_fn = block_fn
        self._blocks = {}
        self.label = label

    def __repr__(self):
        return f"<AModule {self.label or ''} dim {self.dim} over {self.algebra}>"

    @property
    def dim(self):
        return int(self.dims.sum())

    def offsets(self):
        return np.concatenate([[0], np.cumsum(self.dims)])

    def block(self, b):
        B = self._blocks.get(b)
        if B is None:
            A = self.algebra
            l, r = int(A.left[b]), int(A.right[b])
            if self.dims[l] == 0 or self.dims[r] == 0:
                B = la.zeros(self.dims[l], self.dims[r])
            else:
                B = np.asarray(self._block_fn(b), dtype=np.int64) % self.p
                assert B.shape == (self.dims[l], self.dims[r]), (B.shape, self.label)
            self._blocks[b] = B
        return B

    def act_piece(self, x, psi, chi):
        """Matrix of an element supported on e_psi A e_chi, as a map M_chi -> M_psi."""
        out = la.zeros(self.dims[psi], self.dims[chi])
        if out.size == 0:
            return out
        for b in self.algebra.piece(psi, chi):
            c = x[b] % self.p
            if c:
                out = out + c * self.block(b)
        return out % self.p

    def full_action(self, b):
        """dim x dim matrix of basis element b."""
        A = self.algebra
        off = self.offsets()
        l, r = int(A.left[b]), int(A.right[b])
        M = la.zeros(self.dim, self.dim)
        M[off[l] : off[l + 1], off[r] : off[r + 1]] = self.block(b)
        return M

    def character(self):
        return weight_character(self)

    def nonzero_weights(self):
        return [w for w in range(len(self.dims)) if self.dims[w]]


def weight_character(M):
    A = M.algebra
    return SymPolynomial(A.n, {A.weights[w]: int(M.dims[w]) for w in range(len(A.weights)) if M.dims[w]})


class ModuleMap:
    """Equivariant map given by one matrix per weight (target x source)."""

    def __init__(self, source, target, blocks):
        self.source, self.target = source, target
        self.p = source.p
        self.blocks = [np.asarray(B, dtype=np.int64) % self.p for B in blocks]
        for w, B in enumerate(self.blocks):
            assert B.shape == (target.dims[w], source.dims[w]), (w, B.shape)

    def __repr__(self):
        return f"<ModuleMap {self.source.label} -> {self.target.label}>"

    def compose(self, other):
        """self o other."""
        return ModuleMap(other.source, self.target,
                         [la.matmul(B, C, self.p) for B, C in zip(self.blocks, other.blocks)])

    def __add__(self, other):
        return ModuleMap(self.source, self.target, [B + C for B, C in zip(self.blocks, other.blocks)])

    def scale(self, c):
        return ModuleMap(self.source, self.target, [B * c for B in self.blocks])

    def is_zero(self):
        return all(not B.any() for B in self.blocks)

    def rank(self):
        return sum(la.rank(B, self.p) for B in self.blocks if B.size)

    def is_iso(self):
        return all(B.shape[0] == B.shape[1] and la.rank(B, self.p) == B.shape[0] for B in self.blocks)

    def flat(self):
        return np.concatenate([B.reshape(-1) for B in self.blocks]) if self.blocks else la.zeros(0, 0)

    def dual(self):
        return ModuleMap(dual(self.target), dual(self.source), [B.T.copy() for B in self.blocks])

    def check_equivariant(self, elements=None):
        A = self.source.algebra
        elements = range(A.dim) if elements is None else elements
        for b in elements:
            l, r = int(A.left[b]), int(A.right[b])
            lhs = la.matmul(self.blocks[l], self.source.block(b), self.p)
            rhs = la.matmul(self.target.block(b), self.blocks[r], self.p)
            if not np.array_equal(lhs, rhs):
                return False
        return True


def zero_map(M, N):
    return ModuleMap(M, N, [la.zeros(N.dims[w], M.dims[w]) for w in range(len(M.dims))])


def identity_map(M):
    return ModuleMap(M, M, [la.identity(k) for k in M.dims])


def map_from_flat(M, N, vec):
    blocks, pos = [], 0
    for w in range(len(M.dims)):
        k = N.dims[w] * M.dims[w]
        blocks.append(np.asarray(vec[pos : pos + k]).reshape(N.dims[w], M.dims[w]))
        pos += k
    return ModuleMap(M, N, blocks)


# constructions ------------------------------------------------------------

def _cols(x, m):
    x = np.asarray(x, dtype=np.int64)
    if x.size == 0:
        return la.zeros(m, 0)
    return x.reshape(m, -1)


def explicit_module(algebra, dims, blocks, label=None):
    """Module from a dict {basis index: block}; missing blocks are zero."""
    return AModule(algebra, dims, lambda b: blocks.get(b, la.zeros(dims[algebra.left[b]], dims[algebra.right[b]])), label)


def submodule(M, spans, label=None):
    """Submodule spanned (weight by weight) by the columns of ``spans``.

    Returns (S, inclusion).  The basis of S_w is the reduced column echelon
    basis of the span, so coordinates of a vector are its entries at the pivot rows.
    """
    p = M.p
    bases, pivs = [], []
    for w in range(len(M.dims)):
        B, piv = la.reduced_colspace(_cols(spans[w], M.dims[w]), p)
        bases.append(B)
        pivs.append(piv)
    A = M.algebra
    dims = [B.shape[1] for B in bases]

    def block_fn(b):
        l, r = int(A.left[b]), int(A.right[b])
        return la.matmul(M.block(b), bases[r], p)[pivs[l]]

    S = AModule(A, dims, block_fn, label)
    S.ambient_basis = bases
    S.ambient_pivots = pivs
    return S, ModuleMap(S, M, bases)


def sub_coords(S, w, vecs):
    """Coordinates in S (a result of ``submodule``) of ambient vectors in S_w."""
    return np.asarray(vecs)[S.ambient_pivots[w]]


def quotient(M, spans, label=None):
    """M / K with K spanned by ``spans``; returns (Q, projection, lifts)."""
    p = M.p
    projs, lifts = [], []
    for w in range(len(M.dims)):
        m = int(M.dims[w])
        K = _cols(spans[w], m)
        if K.shape[1]:
            R, piv = la.row_basis(K.T, p)
        else:
            R, piv = la.zeros(0, m), np.zeros(0, dtype=np.int64)
        comp = np.setdiff1d(np.arange(m), piv)
        proj = la.zeros(len(comp), m)
        proj[:, comp] = la.identity(len(comp))
        if len(piv):
            proj[:, piv] = (-R[:, comp].T) % p
        lift = la.zeros(m, len(comp))
        lift[comp, np.arange(len(comp))] = 1
        projs.append(proj)
        lifts.append(lift)
    A = M.algebra
    dims = [P.shape[0] for P in projs]

    def block_fn(b):
        l, r = int(A.left[b]), int(A.right[b])
        return la.matmul(projs[l], la.matmul(M.block(b), lifts[r], p), p)

    Q = AModule(A, dims, block_fn, label)
    Q.lifts = lifts
    return Q, ModuleMap(M, Q, projs)


def kernel(f, label=None):
    spans = [la.nullspace(B, f.p) if B.shape[1] else la.zeros(0, 0) for B in f.blocks]
    spans = [S if S.shape[0] == f.source.dims[w] else la.zeros(f.source.dims[w], 0) for w, S in enumerate(spans)]
    return submodule(f.source, spans, label)


def image(f, label=None):
    return submodule(f.target, [la.image(B, f.p) if B.size else la.zeros(B.shape[0], 0) for B in f.blocks], label)


def cokernel(f, label=None):
    return quotient(f.target, [la.image(B, f.p) if B.size else la.zeros(B.shape[0], 0) for B in f.blocks], label)


def corestrict(f, S):
    """f, whose image lies in the submodule S of its target, as a map into S."""
    return ModuleMap(f.source, S, [sub_coords(S, w, B) for w, B in enumerate(f.blocks)])


def restrict_map(f, S):
    """f precomposed with the inclusion of the submodule S of its source."""
    return ModuleMap(S, f.target, [la.matmul(B, S.ambient_basis[w], f.p) for w, B in enumerate(f.blocks)])


def induced_on_quotients(f, Qs, Qt, proj_t):
    """Map Qs -> Qt induced by f, for quotients with recorded lifts."""
    return ModuleMap(Qs, Qt, [la.matmul(proj_t.blocks[w], la.matmul(f.blocks[w], Qs.lifts[w], f.p), f.p)
                              for w in range(len(f.blocks))])


def direct_sum(mods, label=None):
    A = mods[0].algebra
    p = mods[0].p
    dims = sum(M.dims for M in mods)

    def block_fn(b):
        return la.direct_sum(*[M.block(b) for M in mods])

    S = AModule(A, dims, block_fn, label)
    incs, projs = [], []
    for k, M in enumerate(mods):
        ib, pb = [], []
        for w in range(len(dims)):
            before = sum(int(N.dims[w]) for N in mods[:k])
            I = la.zeros(dims[w], M.dims[w])
            I[before : before + M.dims[w]] = la.identity(M.dims[w])
            ib.append(I)
            pb.append(I.T.copy())
        incs.append(ModuleMap(M, S, ib))
        projs.append(ModuleMap(S, M, pb))
    return S, incs, projs


def dual(M, label=None):
    """Kuhn dual: the linear dual with the action twisted by the transpose."""
    A = M.algebra
    D = AModule(A, M.dims, lambda b: M.block(A.transpose_elt(b)).T, label or f"{M.label}#")
    return D


def restrict(M, C, basis_map, weight_map, label=None):
    """Module over C obtained through an embedding of C's basis into M's algebra."""
    dims = [M.dims[weight_map[w]] for w in range(len(C.weights))]
    return AModule(C, dims, lambda c: M.block(int(basis_map[c])), label or M.label)


def restrict_to_corner(M, C):
    parent = C.parent
    wmap = [parent.weight_index[w] for w in C.weights]
    return restrict(M, C, C.parent_index, wmap)


def generated_submodule(M, gens):
    """Submodule generated by weight vectors ``gens`` = [(weight index, vector)]."""
    A = M.algebra
    spans = [[] for _ in range(len(M.dims))]
    for w, v in gens:
        for psi in range(len(M.dims)):
            for b in A.piece(psi, w):
                spans[psi].append(la.matmul(M.block(b), np.asarray(v).reshape(-1, 1), M.p))
    spans = [np.hstack(s) if s else la.zeros(M.dims[w], 0) for w, s in enumerate(spans)]
    return submodule(M, spans)


# Hom spaces ---------------------------------------------------------------

def _generators(A):
    if A.parent is None and A.n > 1:
        return A.chevalley_generators()
    idem = set(A.idempotents)
    return np.array([b for b in range(A.dim) if b not in idem], dtype=np.int64)


def hom_space(M, N, verify=True):
    """Basis of Hom_A(M, N) as a list of ModuleMaps."""
    A = M.algebra
    p = M.p
    nw = len(A.weights)
    sizes = [int(N.dims[w] * M.dims[w]) for w in range(nw)]
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    U = int(offs[-1])
    if U == 0:
        return []
    red = la.RowReducer(U, p)
    pending, pending_rows = [], 0
    for g in _generators(A):
        l, r = int(A.left[g]), int(A.right[g])
        if sizes[l] == 0 and sizes[r] == 0:
            continue
        rows = int(N.dims[l] * M.dims[r])
        if rows == 0:
            continue
        E = la.zeros(rows, U)
        if sizes[l]:
            E[:, offs[l] : offs[l + 1]] = np.kron(la.identity(N.dims[l]), M.block(g).T)
        if sizes[r]:
            E[:, offs[r] : offs[r + 1]] = (E[:, offs[r] : offs[r + 1]] - np.kron(N.block(g), la.identity(M.dims[r]))) % p
        if not E.any():
            continue
        pending.append(E)
        pending_rows += rows
        if pending_rows >= max(U, 256):
            red.add(np.vstack(pending))
            pending, pending_rows = [], 0
    if pending:
        red.add(np.vstack(pending))
    null = red.nullspace()
    maps = [map_from_flat(M, N, null[:, k]) for k in range(null.shape[1])]
    if verify:
        check = range(A.dim) if M.dim <= 200 and N.dim <= 200 else np.random.default_rng(0).choice(A.dim, min(A.dim, 200), replace=False)
        for f in maps:
            if not f.check_equivariant(check):
                raise AssertionError("generating set failed to cut out the Hom space")
    return maps


def hom_dim(M, N):
    return len(hom_space(M, N, verify=False))


def _combinations(maps, p, limit, rng):
    h = len(maps)
    if p**h - 1 <= limit:
        for coeffs in itertools.product(range(p), repeat=h):
            if any(coeffs):
                yield coeffs
    else:
        for _ in range(limit):
            yield tuple(rng.integers(0, p, h))


def find_iso(M, N, limit=4096, seed=0):
    """An isomorphism M -> N, or None.  Exhaustive when p^dim Hom is small."""
    if M.dim != N.dim or not np.array_equal(M.dims, N.dims):
        return None
    H = hom_space(M, N)
    if not H:
        return None if M.dim else zero_map(M, N)
    rng = np.random.default_rng(seed)
    for coeffs in _combinations(H, M.p, limit, rng):
        f = None
        for c, g in zip(coeffs, H):
            if c:
                f = g.scale(c) if f is None else f + g.scale(c)
        if f is not None and f.is_iso():
            return f
    return None


def iso_test(M, N):
    return find_iso(M, N) is not None


def find_split_injection(M, N, limit=4096, seed=0):
    """Maps (i: M -> N, r: N -> M) with r o i = id, or None."""
    into = hom_space(M, N)
    back = hom_space(N, M)
    if not into or not back:
        return None
    p = M.p
    ident = identity_map(M).flat()
    rng = np.random.default_rng(seed)
    for coeffs in _combinations(into, p, limit, rng):
        i = None
        for c, g in zip(coeffs, into):
            if c:
                i = g.scale(c) if i is None else i + g.scale(c)
        if i is None:
            continue
        comps = np.column_stack([g.compose(i).flat() for g in back])
        x = la.solve(comps, ident, p)
        if x is not None:
            r = None
            for c, g in zip(x, back):
                r = g.scale(int(c)) if r is None else r + g.scale(int(c))
            return i, r
    return None


# complexes ----------------------------------------------------------------

class Complex:
    """Cochain complex C^start -> C^{start+1} -> ... of modules."""

    def __init__(self, modules, maps, start=0, label=None):
        assert len(maps) == len(modules) - 1
        self.modules = list(modules)
        self.maps = list(maps)
        self.start = start
        self.label = label

    def degrees(self):
        return range(self.start, self.start + len(self.modules))

    def check_d2(self):
        return all(g.compose(f).is_zero() for f, g in zip(self.maps, self.maps[1:]))

    def check_maps(self, elements=None):
        return all(f.check_equivariant(elements) for f in self.maps)

    def cohomology(self, t):
        k = t - self.start
        if k < 0 or k >= len(self.modules):
            raise IndexError("degree outside the complex")
        C = self.modules[k]
        if k < len(self.maps):
            Z, zinc = kernel(self.maps[k])
        else:
            Z, zinc = submodule(C, [la.identity(C.dims[w]) for w in range(len(C.dims))])
        if k > 0:
            prev = self.maps[k - 1]
            spans = [sub_coords(Z, w, la.image(B, C.p) if B.size else la.zeros(B.shape[0], 0)) for w, B in enumerate(prev.blocks)]
        else:
            spans = [la.zeros(Z.dims[w], 0) for w in range(len(Z.dims))]
        H, _ = quotient(Z, spans, label=f"H^{t}")
        return H

    def cohomology_dims(self):
        return {t: self.cohomology(t).dim for t in self.degrees()}


def hom_complex_dims(P, complex_):
    """Cohomology dimensions of Hom_A(P, C^*) for a cochain complex C^*."""
    homs = [hom_space(P, C, verify=False) for C in complex_.modules]
    mats = []
    for k, f in enumerate(complex_.maps):
        src, dst = homs[k], homs[k + 1]
        if not src or not dst:
            mats.append(la.zeros(len(dst), len(src)))
            continue
        D = np.column_stack([g.flat() for g in dst])
        imgs = np.column_stack([f.compose(g).flat() for g in src])
        X = la.solve(D, imgs, P.p)
        assert X is not None
        mats.append(X)
    out = {}
    for k, t in enumerate(complex_.degrees()):
        n = len(homs[k])
        r_out = la.rank(mats[k], P.p) if k < len(mats) and mats[k].size else 0
        r_in = la.rank(mats[k - 1], P.p) if k > 0 and mats[k - 1].size else 0
        out[t] = n - r_out - r_in
    return out


# debug dumps --------------------------------------------------------------

def _digest(mats):
    h = hashlib.sha256()
    for B in mats:
        B = np.ascontiguousarray(B, dtype=np.int64)
        h.update(np.array(B.shape, dtype=np.int64).tobytes())
        h.update(B.tobytes())
    return h.hexdigest()[:16]


def module_dump(M, full=False):
    """JSON-ready summary of M; the digest covers the generator blocks in the stored basis."""
    A = M.algebra
    gens = [int(b) for b in _generators(A)]
    blocks = [M.block(b) for b in gens]
    out = {
        "label": M.label,
        "algebra": {"n": A.n, "d": A.d, "p": A.p},
        "dim": int(M.dim),
        "dims": {",".join(map(str, A.weights[w])): int(M.dims[w]) for w in range(len(A.weights)) if M.dims[w]},
        "character": M.character().to_json(),
        "digest": _digest(blocks),
    }
    if full:
        out["blocks"] = {str(b): B.tolist() for b, B in zip(gens, blocks) if B.size}
    return out


def map_dump(f, full=False):
    out = {
        "source": f.source.label,
        "target": f.target.label,
        "rank": int(f.rank()),
        "digest": _digest(f.blocks),
    }
    if full:
        out["blocks"] = [B.tolist() for B in f.blocks]
    return out
