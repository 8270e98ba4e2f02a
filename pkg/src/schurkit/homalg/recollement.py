"""Truncation functors between S(m,d) and S(n,d) = e S(m,d) e, n < m.

jstar restricts to the idempotent truncation; jlowerstar is Hom over the small
algebra out of e A_m; jshriek is A_m e tensored over the small algebra.
"""
import numpy as np

from .. import exactla as la
from ..polymod import core
from ..polymod.core import AModule, ModuleMap, Complex
from ..polymod.functors import tensor_power_module
from ..schuralg import truncation_map, weight_embedding
from .resolution import Resolution, context, ext_dims


class Truncation:
    """Index bookkeeping for the pair (A_m, A_n)."""

    def __init__(self, A_m, A_n):
        if A_m.d != A_n.d or A_m.p != A_n.p or A_n.n >= A_m.n:
            raise ValueError("need S(m,d) and S(n,d) with n < m over the same field")
        self.A_m, self.A_n = A_m, A_n
        self.basis = truncation_map(A_m, A_n)
        self.wts = weight_embedding(A_m, A_n)
        self.gens = core._generators(A_n)


_truncations = {}


def truncation(A_m, A_n):
    key = (id(A_m), id(A_n))
    T = _truncations.get(key)
    if T is None or T.A_m is not A_m or T.A_n is not A_n:
        T = Truncation(A_m, A_n)
        _truncations[key] = T
    return T


def _check_over(M, A):
    if M.algebra is not A:
        raise ValueError(f"module {M.label} is not over {A}")


def jstar(A_m, A_n, M):
    """e M with the action of e A_m e = A_n."""
    _check_over(M, A_m)
    T = truncation(A_m, A_n)
    return core.restrict(M, A_n, T.basis, T.wts, label=f"j*{M.label}")


def jlowerstar(A_m, A_n, N):
    """Hom_{A_n}(e A_m, N) with (a f)(x) = f(x a).

    In weight psi an element is a family f(x) in N_alpha for x in e_alpha A_m e_psi,
    alpha running over the weights of A_n.  Solutions are stored as reduced column bases.
    """
    _check_over(N, A_n)
    T = truncation(A_m, A_n)
    p = A_m.p
    nw_n = len(A_n.weights)
    shapes, bases, pivots = [], [], []
    for psi in range(len(A_m.weights)):
        ks = [len(A_m.piece(int(T.wts[a]), psi)) for a in range(nw_n)]
        sizes = [int(N.dims[a]) * k for a, k in enumerate(ks)]
        offs = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
        U = int(offs[-1])
        shapes.append((ks, offs))
        if U == 0:
            bases.append(la.zeros(0, 0))
            pivots.append(np.zeros(0, dtype=np.int64))
            continue
        red = la.RowReducer(U, p)
        for c in T.gens:
            beta, alpha = int(A_n.left[c]), int(A_n.right[c])
            if N.dims[beta] == 0 or ks[alpha] == 0:
                continue
            E = la.zeros(int(N.dims[beta]) * ks[alpha], U)
            if sizes[beta]:
                L = A_m.left_mult_block(int(T.basis[c]), psi)
                E[:, offs[beta] : offs[beta + 1]] = np.kron(la.identity(N.dims[beta]), L.T)
            if sizes[alpha]:
                E[:, offs[alpha] : offs[alpha + 1]] = (E[:, offs[alpha] : offs[alpha + 1]]
                                                       - np.kron(N.block(c), la.identity(ks[alpha]))) % p
            red.add(E)
        Z = red.nullspace()
        B, piv = la.reduced_colspace(Z, p)
        bases.append(B)
        pivots.append(piv)

    def block_fn(a):
        src, dst = int(A_m.right[a]), int(A_m.left[a])
        Bs = bases[src]
        ks_src, offs_src = shapes[src]
        ks_dst, offs_dst = shapes[dst]
        h = Bs.shape[1]
        out = la.zeros(int(offs_dst[-1]), h)
        for al in range(nw_n):
            if N.dims[al] == 0 or ks_dst[al] == 0 or ks_src[al] == 0:
                continue
            R = A_m.right_mult_block(a, int(T.wts[al]))  # x in e_al A e_dst -> x a in e_al A e_src
            F = Bs[offs_src[al] : offs_src[al + 1]].T.reshape(h, int(N.dims[al]), ks_src[al])
            G = np.einsum("hnk,kj->hnj", F, R) % p
            out[offs_dst[al] : offs_dst[al + 1]] = G.reshape(h, -1).T
        return out[pivots[dst]]

    J = AModule(A_m, [B.shape[1] for B in bases], block_fn, label=f"j_*{N.label}")
    J.hom_bases, J.hom_pivots, J.hom_shapes = bases, pivots, shapes
    J.inner = N
    return J


def jlowerstar_map(f, J_src, J_dst):
    """j_*(f) = composition with f, between the modules jlowerstar(f.source), jlowerstar(f.target)."""
    N, N2 = J_src.inner, J_dst.inner
    assert f.source is N and f.target is N2
    p = f.p
    blocks = []
    for psi, B in enumerate(J_src.hom_bases):
        ks, offs = J_src.hom_shapes[psi]
        _, offs2 = J_dst.hom_shapes[psi]
        h = B.shape[1]
        img = la.zeros(int(offs2[-1]), h)
        for al, k in enumerate(ks):
            if k == 0 or N.dims[al] == 0 or N2.dims[al] == 0:
                continue
            F = B[offs[al] : offs[al + 1]].T.reshape(h, int(N.dims[al]), k)
            G = np.einsum("mn,hnk->hmk", f.blocks[al], F) % p
            img[offs2[al] : offs2[al + 1]] = G.reshape(h, -1).T
        blocks.append(img[J_dst.hom_pivots[psi]])
    return ModuleMap(J_src, J_dst, blocks)


def jshriek(A_m, A_n, N):
    """A_m e (x)_{A_n} N, the free module on N modulo x c (x) v - x (x) c v."""
    _check_over(N, A_n)
    T = truncation(A_m, A_n)
    p = A_m.p
    nw_n = len(A_n.weights)
    layout = []
    for psi in range(len(A_m.weights)):
        ks = [len(A_m.piece(psi, int(T.wts[a]))) for a in range(nw_n)]
        sizes = [k * int(N.dims[a]) for a, k in enumerate(ks)]
        layout.append((ks, np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)))

    def free_block(a):
        return la.direct_sum(*[np.kron(A_m.left_mult_block(a, int(T.wts[al])), la.identity(N.dims[al]))
                               for al in range(nw_n)])

    G = AModule(A_m, [int(offs[-1]) for _, offs in layout], free_block, label="free")
    spans = []
    for psi, (ks, offs) in enumerate(layout):
        cols = []
        for c in T.gens:
            beta, alpha = int(A_n.left[c]), int(A_n.right[c])
            if ks[beta] == 0 or N.dims[alpha] == 0:
                continue
            Rel = la.zeros(int(offs[-1]), ks[beta] * int(N.dims[alpha]))
            if ks[alpha]:
                R = A_m.right_mult_block(int(T.basis[c]), psi)  # e_psi A e_beta -> e_psi A e_alpha
                Rel[offs[alpha] : offs[alpha + 1]] = np.kron(R, la.identity(N.dims[alpha]))
            if N.dims[beta]:
                Rel[offs[beta] : offs[beta + 1]] = (Rel[offs[beta] : offs[beta + 1]]
                                                    - np.kron(la.identity(ks[beta]), N.block(c))) % p
            cols.append(Rel)
        spans.append(np.hstack(cols) if cols else la.zeros(int(offs[-1]), 0))
    Q, _ = core.quotient(G, spans, label=f"j!{N.label}")
    return Q


def adjunction_dims(A_m, A_n, M, N):
    """(dim Hom(j_! N, M), dim Hom(N, j^* M), dim Hom(M, j_* N), dim Hom(j^* M, N))."""
    return (core.hom_dim(jshriek(A_m, A_n, N), M), core.hom_dim(N, jstar(A_m, A_n, M)),
            core.hom_dim(M, jlowerstar(A_m, A_n, N)), core.hom_dim(jstar(A_m, A_n, M), N))


def injective_resolution(N, length):
    """Dual of a minimal projective resolution of the Kuhn dual of N: I^0 -> ... -> I^length."""
    A = N.algebra
    ctx = context(A, corner=False)
    res = Resolution(core.dual(N), ctx.proj, length)
    mods = [core.dual(P, label=f"I^{r}") for r, P in enumerate(res.terms)]
    maps = [ModuleMap(mods[r], mods[r + 1], [B.T.copy() for B in res.maps[r + 1].blocks])
            for r in range(length)]
    return Complex(mods, maps, label=f"I({N.label})")


def rj_complex(A_m, A_n, N, qmax):
    """j_* applied to an injective resolution of N, through degree qmax + 1."""
    inj = injective_resolution(N, qmax + 1)
    J = [jlowerstar(A_m, A_n, I) for I in inj.modules]
    maps = [jlowerstar_map(f, J[r], J[r + 1]) for r, f in enumerate(inj.maps)]
    return Complex(J, maps, label=f"Rj_*{N.label}")


def r_jlowerstar_cohomology(A_m, A_n, N, qmax):
    """H^q(Rj_* N) for q = 0..qmax, as modules over A_m."""
    C = rj_complex(A_m, A_n, N, qmax)
    return [C.cohomology(q) for q in range(qmax + 1)]


def ext_adjunction_sides(A_m, A_n, N, qmax):
    """(dim Ext^q_{A_n}(j^* V^{(x)d}, N), dim H^q Hom_{A_m}(V^{(x)d}, Rj_* N)) for q <= qmax."""
    V = tensor_power_module(A_m)
    lhs = ext_dims(jstar(A_m, A_n, V), N, qmax)
    C = rj_complex(A_m, A_n, N, qmax)
    full = core.hom_complex_dims(V, C)
    rhs = {q: full[q] for q in range(qmax + 1)}
    return lhs, rhs


def ext_adjunction_check(A_m, A_n, N, qmax):
    if A_m.n > 3 or A_m.d > 3:
        raise la.ResourceGuardError("the projective side is only built up to S(3,3)")
    lhs, rhs = ext_adjunction_sides(A_m, A_n, N, qmax)
    return lhs == rhs
