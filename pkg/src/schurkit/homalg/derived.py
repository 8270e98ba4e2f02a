"""Ext groups with explicit cocycle bases, Yoneda composition by lifting chain maps,
and the derived Schur functor dimensions."""
import numpy as np

from .. import exactla as la
from ..polymod.functors import tensor_power_module
from .resolution import context, ext_dims, hom_cochain


def rs_dims(F, qmax):
    """dim Ext^q(V^{(x)d}, F), q = 0..qmax."""
    return ext_dims(tensor_power_module(F.algebra), F, qmax)


class ExtGroup:
    """Ext^q(M, N) as cocycles in Hom(P_q, N) modulo coboundaries, with chosen representatives."""

    def __init__(self, M, N, q, length=None):
        self.ctx = context(M.algebra)
        self.q = q
        self.res = self.ctx.resolution(M, max(q + 1, length or 0))
        self.N = self.ctx.lower(N)
        p = self.p = self.res.p
        dims, deltas = hom_cochain(self.res, self.N, q)
        D_out = deltas[q + 1]
        Z = la.nullspace(D_out, p) if D_out.size else la.identity(dims[q])
        if Z.shape[0] != dims[q]:
            Z = la.identity(dims[q])
        Bd = la.image(deltas[q], p) if q > 0 and deltas[q].size else la.zeros(dims[q], 0)
        reps, current = [], Bd
        for k in range(Z.shape[1]):
            v = Z[:, k]
            if not la.in_span(current, v, p):
                reps.append(v)
                current = np.column_stack([current, v])
        self.boundaries = Bd
        self.reps = reps

    @property
    def dim(self):
        return len(self.reps)

    def coords(self, v):
        """Coordinates of the class of the cocycle v in the basis of representatives."""
        if not self.reps:
            return np.zeros(0, dtype=np.int64)
        basis = np.column_stack([self.boundaries] + self.reps)
        x = la.solve(basis, np.asarray(v) % self.p, self.p)
        if x is None:
            raise AssertionError("vector is not a cocycle")
        return x[self.boundaries.shape[1]:]

    def values(self, v):
        """Images of the generators of P_q under the cochain v."""
        proj = self.res.proj
        out, pos = [], 0
        for lam in self.res.gens[self.q]:
            B, _ = proj.eps_space(lam, self.N)
            k = B.shape[1]
            out.append(la.matmul(B, np.asarray(v[pos : pos + k]).reshape(-1, 1), self.p)[:, 0])
            pos += k
        return out

    def cochain(self, values):
        proj = self.res.proj
        parts = []
        for lam, val in zip(self.res.gens[self.q], values):
            _, piv = proj.eps_space(lam, self.N)
            parts.append(np.asarray(val)[piv])
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)




def _cover(res_dst, k, lam, target):
    """An element u of eps_lam P_k(dst) with boundary (or augmentation) equal to target."""
    proj, p = res_dst.proj, res_dst.p
    chi = proj.top[lam]
    u = la.solve(res_dst.maps[k].blocks[chi], target, p)
    if u is None:
        raise AssertionError("chain map lifting failed")
    return la.matmul(res_dst.terms[k].act_piece(proj.eps[lam], chi, chi), u.reshape(-1, 1), p)[:, 0]


def compose(x_group, x, y_group, y):
    """Yoneda product y o x for x in Ext^a(M1, M2) and y in Ext^b(M2, M3).

    x is lifted to a chain map P_{a+k}(M1) -> P_k(M2), k = 0..b, then composed with y.
    Returns the values of the composite on the generators of P_{a+b}(M1).
    """
    a, b = x_group.q, y_group.q
    res1, res2 = x_group.res, y_group.res
    if len(res1.gens) < a + b + 1:
        raise ValueError("source resolution too short for the product degree")
    p = res1.p
    values = [_cover(res2, 0, lam, v) for lam, v in zip(res1.gens[a], x_group.values(x))]
    for k in range(1, b + 1):
        prev = res2._boundary(res1.terms[a + k - 1], res1.gens[a + k - 1], values, res2.terms[k - 1])
        values = []
        for g, lam in enumerate(res1.gens[a + k]):
            chi = res1.proj.top[lam]
            target = la.matmul(prev.blocks[chi], res1.images[a + k][g].reshape(-1, 1), p)[:, 0]
            values.append(_cover(res2, k, lam, target))
    Y = res2._boundary(res2.terms[b], res2.gens[b], y_group.values(y), y_group.N)
    return [la.matmul(Y.blocks[res1.proj.top[lam]], v.reshape(-1, 1), p)[:, 0]
            for lam, v in zip(res1.gens[a + b], values)]


class ProductTable:
    """Structure constants of Ext^a(M1, M2) x Ext^b(M2, M3) -> Ext^{a+b}(M1, M3)."""

    def __init__(self, M1, M2, M3, a, b):
        self.z_group = ExtGroup(M1, M3, a + b)
        self.x_group = ExtGroup(M1, M2, a, length=a + b + 1)
        self.y_group = ExtGroup(M2, M3, b)
        assert self.x_group.res is self.z_group.res
        self.table = np.zeros((self.x_group.dim, self.y_group.dim, self.z_group.dim), dtype=np.int64)
        for s, x in enumerate(self.x_group.reps):
            for t, y in enumerate(self.y_group.reps):
                vals = compose(self.x_group, x, self.y_group, y)
                self.table[s, t] = self.z_group.coords(self.z_group.cochain(vals))

    def is_zero(self):
        return not self.table.any()


def ext_yoneda_product(M, qmax):
    """{(a, b): structure constants of Ext^a(M,M) x Ext^b(M,M) -> Ext^{a+b}(M,M)}, a + b <= qmax."""
    out = {}
    for a in range(qmax + 1):
        for b in range(qmax + 1 - a):
            out[(a, b)] = ProductTable(M, M, M, a, b).table
    return out


def power_order(M, degree, qmax):
    """Smallest k with x^k = 0 for the generator x of a one-dimensional Ext^degree(M, M).

    Returns 1 when Ext^degree vanishes and None when x^k stays nonzero for all k * degree <= qmax.
    """
    groups = {t: ExtGroup(M, M, t, length=qmax + 1) for t in range(degree, qmax + 1, degree)}
    gx = groups[degree]
    if gx.dim == 0:
        return 1
    if gx.dim != 1:
        raise ValueError("expected a one-dimensional Ext group")
    x = gx.reps[0]
    power, k = x, 1
    while (k + 1) * degree <= qmax:
        target = groups[(k + 1) * degree]
        power = target.cochain(compose(groups[k * degree], power, gx, x))
        k += 1
        if not target.coords(power).any():
            return k
    return None
