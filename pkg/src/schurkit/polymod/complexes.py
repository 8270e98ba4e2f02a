"""Complexes of forms: Koszul kernels, truncated de Rham, the double complex R and
the spliced dual-Koszul/Koszul complex L."""
import numpy as np

from .. import exactla as la
from . import core
from .core import Complex, ModuleMap
from .functors import _check_hook, forms


def _check_range(A, i):
    _check_hook(A, i)


def build_K(A, i):
    """S_i -> S_{i+1} -> ... -> S_{n-1}, differentials induced by d."""
    _check_range(A, i)
    f = forms(A)
    n = A.n
    mods = [f.S(j)[0] for j in range(i, n)]
    maps = [f.d_S(j) for j in range(i, n - 1)]
    return Complex(mods, maps, label=f"K_{i},{n}")


def build_M(A, i):
    """Omega^{i+1} -> ... -> Omega^n via d."""
    _check_range(A, i)
    f = forms(A)
    n = A.n
    mods = [f.omega[j] for j in range(i + 1, n + 1)]
    maps = [f.d[j] for j in range(i + 1, n)]
    return Complex(mods, maps, label=f"M_{i},{n}")


def beta_map(A_m, n):
    """Omega^{n-1} -> S_{n-1}: kappa onto S_{n-2} followed by d."""
    f = forms(A_m)
    S_prev, inc_prev = f.S(n - 2)
    proj = core.corestrict(f.kappa[n - 1], S_prev)
    return f.d_S(n - 2).compose(proj)


def build_Mprime(A_m, n, i):
    """Omega^{i+1} -> ... -> Omega^{n-1} -> S_{n-1} over the bigger algebra A_m."""
    if A_m.d != A_m.p or not 0 <= i <= n - 1 or n >= A_m.n or n < 1:
        raise ValueError("need d = p, n < m and 0 <= i <= n-1")
    f = forms(A_m)
    mods = [f.omega[j] for j in range(i + 1, n)] + [f.S(n - 1)[0]]
    maps = [f.d[j] for j in range(i + 1, n - 1)]
    if i < n - 1:
        if n < 2:
            raise ValueError("n too small")
        maps.append(beta_map(A_m, n))
    return Complex(mods, maps, label=f"M'_{i},{n}")


def _r_positions(n, i):
    return [(r, s) for s in range(n - i) for r in range(n) if r - s <= i]


def build_R(A, i):
    """Total complex of R^{r,s} = Omega^{i+s-r} (0<=r<=n-1, 0<=s<=n-i-1, r-s<=i), D = kappa + d."""
    _check_range(A, i)
    f = forms(A)
    n, p = A.n, A.p
    cells = _r_positions(n, i)
    top = max(r + s for r, s in cells)
    by_deg = [[c for c in cells if sum(c) == t] for t in range(top + 1)]
    mods, incs, projs = [], [], []
    for group in by_deg:
        S, inc, pr = core.direct_sum([f.omega[i + s - r] for r, s in group], label="Tot")
        mods.append(S)
        incs.append(inc)
        projs.append(pr)
    maps = []
    for t in range(top):
        D = core.zero_map(mods[t], mods[t + 1])
        for a, (r, s) in enumerate(by_deg[t]):
            deg = i + s - r
            for b, (r2, s2) in enumerate(by_deg[t + 1]):
                if (r2, s2) == (r + 1, s) and deg > 0:
                    piece = f.kappa[deg]
                elif (r2, s2) == (r, s + 1):
                    piece = f.d[deg]
                else:
                    continue
                D = D + incs[t + 1][b].compose(piece.compose(projs[t][a]))
        maps.append(ModuleMap(D.source, D.target, [B % p for B in D.blocks]))
    return Complex(mods, maps, label=f"R_{i},{n}")


def alpha_map(A):
    """(Omega^{n-1})# -> Omega^{n-1}: kappa# into (Omega^n)#, an isomorphism with Omega^n, then kappa."""
    f = forms(A)
    n = A.n
    top, below = f.omega[n], f.omega[n - 1]
    top_dual, below_dual = core.dual(top), core.dual(below)
    kappa_dual = ModuleMap(below_dual, top_dual, [B.T.copy() for B in f.kappa[n].blocks])
    iso = core.find_iso(top_dual, top)
    if iso is None:
        raise AssertionError("top forms are not self-dual")
    return below_dual, f.kappa[n].compose(iso.compose(kappa_dual))


def build_L(A, i):
    """(Omega^{i+1})# -> ... -> (Omega^{n-1})# -> Omega^{n-1} -> ... -> Omega^0."""
    _check_range(A, i)
    f = forms(A)
    n = A.n
    mods, maps = [], []
    duals = {j: core.dual(f.omega[j]) for j in range(i + 1, n - 1)}
    if i + 1 <= n - 1:
        last_dual, alpha = alpha_map(A)
        duals[n - 1] = last_dual
        for j in range(i + 1, n):
            mods.append(duals[j])
            if j < n - 1:
                maps.append(ModuleMap(duals[j], duals[j + 1], [B.T.copy() for B in f.kappa[j + 1].blocks]))
        maps.append(alpha)
    for j in range(n - 1, -1, -1):
        mods.append(f.omega[j])
        if j > 0:
            maps.append(f.kappa[j])
    return Complex(mods, maps, label=f"L_{i},{n}")


def complex_cohomology(C):
    return [C.cohomology(t) for t in C.degrees()]


def check_complex(C, elements=None):
    return C.check_d2() and C.check_maps(elements)
