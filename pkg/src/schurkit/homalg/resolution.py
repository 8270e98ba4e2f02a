"""Minimal projective resolutions and Ext dimensions.

Indecomposable projectives are produced as C*eps for primitive idempotents
eps, found inside e_chi C e_chi (chi the highest weight of a simple module) by
lifting an element that acts as 1 on that simple and as 0 on the others.
Ext groups of modules over a Schur algebra are computed over its corner
indexed by dominant weights, which is Morita equivalent to the full algebra.
"""
import numpy as np

from .. import exactla as la
from ..combinatorics import conjugate, enum_lambda
from ..polymod import core
from ..polymod.functors import projective_module, simple_modules


def highest_weight(lam, n):
    c = conjugate(lam)
    return c + (0,) * (n - len(c))


class Projectives:
    """Primitive idempotents eps_lam and the modules P_lam = C eps_lam of an algebra C."""

    def __init__(self, C, simples):
        self.C = C
        self.p = C.p
        self.simples = simples
        self.labels = list(simples)
        self.top = {lam: C.weight_index[highest_weight(lam, C.n)] for lam in self.labels}
        self.eps = {}
        self.modules = {}
        for lam in self.labels:
            self.eps[lam] = self._idempotent(lam)
            self.modules[lam] = self._module(lam)

    def _idempotent(self, lam):
        C, p = self.C, self.p
        chi = self.top[lam]
        E = C.piece(chi, chi)
        rows, rhs = [], []
        for mu, L in self.simples.items():
            k = int(L.dims[chi])
            if k == 0:
                continue
            rows.append(np.column_stack([L.block(b).reshape(-1) for b in E]))
            target = la.identity(k) if mu == lam else la.zeros(k, k)
            rhs.append(target.reshape(-1))
        coeffs = la.solve(np.vstack(rows), np.concatenate(rhs), p)
        if coeffs is None:
            raise AssertionError(f"no element separating the simple {lam}")
        x = np.zeros(C.dim, dtype=np.int64)
        x[E] = coeffs
        N = 1
        while N < len(E) + 1:
            N *= p
        eps = C.power(x, N)
        if not np.array_equal(C.mul(eps, eps), eps) or not eps.any():
            raise AssertionError(f"idempotent lifting failed for {lam}")
        return eps

    def _module(self, lam):
        C = self.C
        chi = self.top[lam]
        eps_local = self.eps[lam][C.piece(chi, chi)]
        Pchi = projective_module(C, chi)
        spans = []
        for psi in range(len(C.weights)):
            cols = [C.left_mult_block(b, chi) @ eps_local for b in C.piece(psi, chi)]
            spans.append(np.column_stack(cols) % self.p if cols else la.zeros(Pchi.dims[psi], 0))
        P, _ = core.submodule(Pchi, spans, label=f"P{lam}")
        P.chi = chi
        return P

    def element(self, lam, psi, coords):
        """Algebra element (global vector) of P_lam's weight-psi vector with given coordinates."""
        C = self.C
        P = self.modules[lam]
        local = la.matmul(P.ambient_basis[psi], np.asarray(coords).reshape(-1, 1), self.p)[:, 0]
        x = np.zeros(C.dim, dtype=np.int64)
        x[C.piece(psi, self.top[lam])] = local
        return x

    def eps_space(self, lam, N):
        """Basis (reduced, with pivots) of eps_lam N inside N_chi."""
        chi = self.top[lam]
        img = N.act_piece(self.eps[lam], chi, chi)
        return la.reduced_colspace(img, self.p)


def _generated(K, chi, v):
    """Spans of C v, one matrix per weight."""
    C = K.algebra
    out = []
    for psi in range(len(C.weights)):
        cols = [K.block(b) @ v for b in C.piece(psi, chi)]
        out.append(np.column_stack(cols) % K.p if cols and K.dims[psi] else la.zeros(K.dims[psi], 0))
    return out


def _span_dims(spans_list, K):
    dims = []
    for psi in range(len(K.dims)):
        mats = [s[psi] for s in spans_list if s[psi].shape[1]]
        dims.append(la.rank(np.hstack(mats), K.p) if mats else 0)
    return np.array(dims, dtype=np.int64)


def minimal_generators(K, proj):
    """eps-vectors [(lam, v)] generating K, irredundant (hence a projective cover)."""
    p = K.p
    gens, spans = [], []
    current = [la.zeros(K.dims[psi], 0) for psi in range(len(K.dims))]
    for lam in proj.labels:
        chi = proj.top[lam]
        if K.dims[chi] == 0:
            continue
        B, _ = proj.eps_space(lam, K)
        for k in range(B.shape[1]):
            v = B[:, k]
            if la.in_span(current[chi], v, p):
                continue
            sp = _generated(K, chi, v)
            gens.append((lam, v))
            spans.append(sp)
            current = [np.hstack([current[psi], sp[psi]]) for psi in range(len(K.dims))]
            current = [la.image(c, p) if c.shape[1] else c for c in current]
        if all(current[psi].shape[1] == K.dims[psi] for psi in range(len(K.dims))):
            break
    if not np.array_equal(_span_dims(spans, K), K.dims):
        raise AssertionError("eps-vectors failed to generate the module")
    k = 0
    while k < len(gens):
        others = spans[:k] + spans[k + 1 :]
        if np.array_equal(_span_dims(others, K), K.dims):
            del gens[k], spans[k]
        else:
            k += 1
    return gens


class Resolution:
    """Minimal projective resolution P_* -> M over the algebra of ``proj``."""

    def __init__(self, M, proj, length, budget=None):
        self.M = M
        self.proj = proj
        self.p = M.p
        self.gens = []      # per degree: list of labels
        self.terms = []     # per degree: AModule (direct sum of P_lam)
        self.images = []    # per degree: list of boundary images in the previous term (or in M)
        self.maps = []      # per degree: ModuleMap P_r -> P_{r-1} (or -> M for r = 0)
        self.kernels = []
        K, kinc = M, core.identity_map(M)
        target = M
        for r in range(length + 1):
            gens = minimal_generators(K, proj) if K.dim else []
            labels = [lam for lam, _ in gens]
            mods = [proj.modules[lam] for lam in labels]
            if mods:
                P, _, _ = core.direct_sum(mods, label=f"P_{r}")
            else:
                P = core.AModule(M.algebra, np.zeros(len(M.dims), dtype=np.int64), None, label=f"P_{r}")
            if P.dim * max(1, P.dim) > (budget or la.get_budget()):
                raise la.ResourceGuardError(f"resolution term of dimension {P.dim} exceeds the budget")
            amb = [kinc.blocks[chi] @ v % self.p for (lam, v), chi in zip(gens, [proj.top[l] for l in labels])]
            d = self._boundary(P, labels, amb, target)
            self.gens.append(labels)
            self.terms.append(P)
            self.images.append(amb)
            self.maps.append(d)
            if r == length:
                break
            Kn, inc = core.kernel(d)
            self.kernels.append(Kn)
            K, kinc, target = Kn, inc, P

    def _boundary(self, P, labels, vecs, target):
        C = P.algebra
        blocks = []
        for psi in range(len(C.weights)):
            cols = []
            for lam, v in zip(labels, vecs):
                Plam = self.proj.modules[lam]
                chi = self.proj.top[lam]
                if Plam.dims[psi] == 0:
                    continue
                G = np.column_stack([target.block(b) @ v for b in C.piece(psi, chi)]) % self.p
                cols.append(la.matmul(G, Plam.ambient_basis[psi], self.p))
            blocks.append(np.hstack(cols) if cols else la.zeros(target.dims[psi], 0))
        return core.ModuleMap(P, target, blocks)

    def component(self, r, g, h):
        """Algebra element y with (boundary of generator g of P_r) = sum_h y_gh * h."""
        proj = self.proj
        lam_g = self.gens[r][g]
        chi = proj.top[lam_g]
        v = self.images[r][g]
        start = sum(int(proj.modules[l].dims[chi]) for l in self.gens[r - 1][:h])
        lam_h = self.gens[r - 1][h]
        k = int(proj.modules[lam_h].dims[chi])
        return proj.element(lam_h, chi, v[start : start + k])


def hom_cochain(res, N, qmax):
    """Matrices of the cochain complex Hom(P_q, N), q = 0..qmax+1."""
    proj, p = res.proj, res.p
    spaces = {lam: proj.eps_space(lam, N) for lam in proj.labels}
    dims = [sum(spaces[l][0].shape[1] for l in res.gens[q]) for q in range(len(res.gens))]
    deltas = [None]
    for r in range(1, len(res.gens)):
        D = la.zeros(dims[r], dims[r - 1])
        ro = 0
        for g, lam_g in enumerate(res.gens[r]):
            Bg, pg = spaces[lam_g]
            co = 0
            for h, lam_h in enumerate(res.gens[r - 1]):
                Bh, _ = spaces[lam_h]
                if Bg.shape[1] and Bh.shape[1]:
                    y = res.component(r, g, h)
                    act = N.act_piece(y, proj.top[lam_g], proj.top[lam_h])
                    D[ro : ro + Bg.shape[1], co : co + Bh.shape[1]] = la.matmul(act, Bh, p)[pg]
                co += Bh.shape[1]
            ro += Bg.shape[1]
        deltas.append(D)
    return dims, deltas


def ext_from_resolution(res, N, qmax):
    dims, deltas = hom_cochain(res, N, qmax)
    p = res.p
    ranks = [0] + [la.rank(D, p) if D.size else 0 for D in deltas[1:]]
    out = {}
    for q in range(qmax + 1):
        r_out = ranks[q + 1] if q + 1 < len(ranks) else 0
        out[q] = dims[q] - r_out - ranks[q]
    return out


# per-algebra caches ---------------------------------------------------------

_ctx = {}


class ExtContext:
    """Dominant corner of a Schur algebra with its projectives and a resolution cache."""

    def __init__(self, A, corner=True):
        self.A = A
        self.C = A.dominant_corner() if corner and A.parent is None else A
        simples = simple_modules(A)
        if self.C is A:
            self.simples = simples
        else:
            self.simples = {lam: core.restrict_to_corner(L, self.C) for lam, L in simples.items()}
        self.proj = Projectives(self.C, self.simples)
        self._res = {}

    def lower(self, M):
        return M if self.C is M.algebra else core.restrict_to_corner(M, self.C)

    def resolution(self, M, length):
        key = id(M)
        got = self._res.get(key)
        if got is None or got[0] is not M or len(got[1].gens) < length + 1:
            got = (M, Resolution(self.lower(M), self.proj, length))
            self._res[key] = got
        return got[1]


def context(A, corner=True):
    key = (id(A), corner)
    ctx = _ctx.get(key)
    if ctx is None or ctx.A is not A:
        ctx = ExtContext(A, corner)
        _ctx[key] = ctx
    return ctx


def ext_dims(M, N, qmax):
    """dim Ext^q_A(M, N) for q = 0..qmax, from a minimal projective resolution of M."""
    ctx = context(M.algebra)
    res = ctx.resolution(M, qmax + 1)
    return ext_from_resolution(res, ctx.lower(N), qmax)
