"""Concrete modules: tensor powers, symmetric/exterior slot quotients, the de Rham and
Koszul differentials, hook modules, costandard, standard and simple modules."""
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .. import exactla as la
from ..combinatorics import conjugate, enum_lambda
from ..schuralg import orbit_key, pair_keys
from . import core
from .core import AModule, ModuleMap


def _words_of_weight(w):
    """Words with content w, lexicographic order."""
    letters = [v for v, k in enumerate(w) for _ in range(k)]
    return np.array(sorted(set(permutations(letters))), dtype=np.int64).reshape(-1, sum(w))


@lru_cache(maxsize=None)
def _weight_words(weights):
    return [_words_of_weight(w) for w in weights]


class _WordAction:
    """Blocks of the V^{(x)d} action between weight spaces, shared per algebra."""

    def __init__(self, A):
        self.A = A
        self.words = _weight_words(tuple(A.weights))
        self._keys = {}

    def keys(self, l, r):
        K = self._keys.get((l, r))
        if K is None:
            K = pair_keys(self.A.n, self.A.d, self.words[l], self.words[r])
            self._keys[(l, r)] = K
        return K

    def block(self, b):
        A = self.A
        return (self.keys(int(A.left[b]), int(A.right[b])) == orbit_key(A, b)).astype(np.int64)


_word_actions = {}


def word_action(A):
    wa = _word_actions.get(id(A))
    if wa is None or wa.A is not A:
        wa = _WordAction(A)
        _word_actions[id(A)] = wa
    return wa


def tensor_power_module(A):
    wa = word_action(A)
    return AModule(A, [len(w) for w in wa.words], wa.block, label="V^d")


def _canonical(word, groups):
    """Canonical form of a word in a tensor product of S^a / Lambda^b factors."""
    out, sign, pos = [], 1, 0
    for size, kind in groups:
        part = list(word[pos : pos + size])
        pos += size
        if kind == "alt":
            if len(set(part)) < size:
                return None, 0
            inv = sum(1 for a in range(size) for b in range(a + 1, size) if part[a] > part[b])
            sign *= -1 if inv % 2 else 1
        out.extend(sorted(part))
    return tuple(out), sign


def slot_quotient(A, groups, label=None):
    """Quotient of V^{(x)d} by symmetrising / antisymmetrising consecutive slot groups."""
    p = A.p
    wa = word_action(A)
    projs, lifts, bases = [], [], []
    for words in wa.words:
        canon = [_canonical(tuple(w), groups) for w in words]
        basis = sorted({c for c, s in canon if c is not None})
        idx = {c: k for k, c in enumerate(basis)}
        word_idx = {tuple(w): k for k, w in enumerate(words)}
        P = la.zeros(len(basis), len(words))
        for j, (c, s) in enumerate(canon):
            if c is not None:
                P[idx[c], j] = s % p
        projs.append(P)
        lifts.append(np.array([word_idx[c] for c in basis], dtype=np.int64))
        bases.append(basis)

    def block_fn(b):
        l, r = int(A.left[b]), int(A.right[b])
        return la.matmul(projs[l], wa.block(b)[:, lifts[r]], p)

    Q = AModule(A, [len(B) for B in bases], block_fn, label)
    Q.word_basis = bases
    Q.word_proj = projs
    return Q


# differential forms ---------------------------------------------------------

def omega_module(A, i):
    """Omega^i = S^{d-i} (x) Lambda^i, with basis indexed per weight by the wedge subset."""
    d = A.d
    if not 0 <= i <= d:
        raise ValueError("form degree out of range")
    Q = slot_quotient(A, [(d - i, "sym"), (i, "alt")], label=f"Omega^{i}")
    Q.subsets = [[tuple(w[d - i :]) for w in basis] for basis in Q.word_basis]
    Q.form_degree = i
    return Q


def _sign_before(T, v):
    return -1 if sum(1 for t in T if t < v) % 2 else 1


def de_rham_block(chi, src, dst, p):
    """Matrix of d on the weight chi, for wedge-subset bases src -> dst."""
    idx = {T: k for k, T in enumerate(dst)}
    M = la.zeros(len(dst), len(src))
    for j, T in enumerate(src):
        for v in range(len(chi)):
            if v in T:
                continue
            a_v = chi[v]  # exponent of x_v in the symmetric part
            if a_v == 0:
                continue
            U = tuple(sorted(T + (v,)))
            M[idx[U], j] = (M[idx[U], j] + a_v * _sign_before(T, v)) % p
    return M


def koszul_block(chi, src, dst, p):
    idx = {T: k for k, T in enumerate(dst)}
    M = la.zeros(len(dst), len(src))
    for j, T in enumerate(src):
        for k, t in enumerate(T):
            U = T[:k] + T[k + 1 :]
            M[idx[U], j] = (M[idx[U], j] + (-1 if k % 2 else 1)) % p
    return M


def omega_complex_modules(A):
    return [omega_module(A, i) for i in range(A.d + 1)]


def de_rham(Om_i, Om_j):
    A = Om_i.algebra
    return ModuleMap(Om_i, Om_j, [de_rham_block(A.weights[w], Om_i.subsets[w], Om_j.subsets[w], A.p)
                                  for w in range(len(A.weights))])


def koszul(Om_i, Om_j):
    A = Om_i.algebra
    return ModuleMap(Om_i, Om_j, [koszul_block(A.weights[w], Om_i.subsets[w], Om_j.subsets[w], A.p)
                                  for w in range(len(A.weights))])


class Forms:
    """The modules Omega^0..Omega^d with d and kappa, plus the hook modules built from them."""

    def __init__(self, A):
        self.A = A
        self.omega = omega_complex_modules(A)
        self.d = [de_rham(self.omega[i], self.omega[i + 1]) for i in range(A.d)]
        self.kappa = [None] + [koszul(self.omega[i], self.omega[i - 1]) for i in range(1, A.d + 1)]
        self._S, self._F = {}, {}

    def S(self, i):
        """(S_i, inclusion into Omega^i): the kernel of kappa."""
        if i not in self._S:
            if i == 0:
                S, inc = core.submodule(self.omega[0], [la.identity(k) for k in self.omega[0].dims])
            else:
                S, inc = core.kernel(self.kappa[i])
            S.label = f"S{i}"
            self._S[i] = (S, inc)
        return self._S[i]

    def d_on_S(self, i):
        """d restricted to S_i, as a map into Omega^{i+1}."""
        S, inc = self.S(i)
        return self.d[i].compose(inc)

    def d_S(self, i):
        """d as a map S_i -> S_{i+1}."""
        return core.corestrict(self.d_on_S(i), self.S(i + 1)[0])

    def F(self, i):
        if i not in self._F:
            S, inc = self.S(i)
            F, finc = core.kernel(self.d_on_S(i))
            F.label = f"F{i}"
            self._F[i] = (F, inc.compose(finc))
        return self._F[i]

    def W(self, i):
        W = core.dual(self.S(i)[0])
        W.label = f"W{i}"
        return W


_forms = {}


def forms(A):
    f = _forms.get(id(A))
    if f is None or f.A is not A:
        f = Forms(A)
        _forms[id(A)] = f
    return f


def _check_hook(A, i):
    if not 0 <= i <= A.n - 1 or A.d != A.p:
        raise ValueError(f"hook index {i} needs 0 <= i <= n-1 and d = p")


def hook_costandard(A, i):
    _check_hook(A, i)
    return forms(A).S(i)[0]


def hook_simple(A, i):
    _check_hook(A, i)
    return forms(A).F(i)[0]


def hook_standard(A, i):
    _check_hook(A, i)
    return forms(A).W(i)


def hook_module(A, kind, i):
    return {"S": hook_costandard, "F": hook_simple, "W": hook_standard}[kind](A, i)


def simple_dim_sym(p, i):
    """Multilinear weight space of F_i for GL_p, from d and kappa on subsets of [p]."""
    if not 0 <= i <= p - 1:
        raise ValueError("hook index out of range")
    chi = (1,) * p
    sub = [list(combinations(range(p), j)) for j in range(p + 1)]
    if i == 0:
        S = la.identity(1)
    else:
        S = la.nullspace(koszul_block(chi, sub[i], sub[i - 1], p), p)
    d = de_rham_block(chi, sub[i], sub[i + 1], p)
    return S.shape[1] - la.rank(la.matmul(d, S, p), p)


# general labels -------------------------------------------------------------

def general_costandard(A, lam):
    """Image of the row exterior powers in the column symmetric powers of lam."""
    lam = tuple(lam)
    if sum(lam) != A.d or (lam and lam[0] > A.n):
        raise ValueError(f"{lam} is not in Lambda({A.d},{A.n})")
    cols = conjugate(lam)
    T = slot_quotient(A, [(c, "sym") for c in cols], label=f"T{lam}")
    index = [{c: k for k, c in enumerate(basis)} for basis in T.word_basis]
    # slot of cell (row j, column c) in column-major order
    slot, pos = {}, 0
    for c, h in enumerate(cols):
        for j in range(h):
            slot[(j, c)] = pos
            pos += 1
    groups = [(c, "sym") for c in cols]
    spans = [dict() for _ in A.weights]
    perms = [list(permutations(range(r))) for r in lam]
    signs = [[(-1) ** sum(1 for a in range(len(s)) for b in range(a + 1, len(s)) if s[a] > s[b]) for s in ps] for ps in perms]
    for rows in product(*[list(combinations(range(A.n), r)) for r in lam]):
        content = [0] * A.n
        for R in rows:
            for v in R:
                content[v] += 1
        w = A.weight_index[tuple(content)]
        vec = spans[w].setdefault(rows, la.zeros(T.dims[w], 1))
        for choice in product(*[range(len(ps)) for ps in perms]):
            word = [0] * A.d
            sgn = 1
            for j, k in enumerate(choice):
                s = perms[j][k]
                sgn *= signs[j][k]
                for c in range(lam[j]):
                    word[slot[(j, c)]] = rows[j][s[c]]
            canon, _ = _canonical(tuple(word), groups)
            vec[index[w][canon], 0] += sgn
    mats = [np.hstack(list(s.values())) % A.p if s else la.zeros(T.dims[w], 0) for w, s in enumerate(spans)]
    S, _ = core.submodule(T, mats, label=f"S{lam}")
    return S


def general_standard(A, lam):
    W = core.dual(general_costandard(A, lam))
    W.label = f"W{lam}"
    return W


def simple_general(A, lam):
    """Image of the (unique up to scalar) nonzero map from the standard to the costandard module."""
    S = general_costandard(A, lam)
    W = core.dual(S)
    H = core.hom_space(W, S)
    if len(H) != 1:
        raise AssertionError(f"expected a one-dimensional Hom(W, S) for {lam}, got {len(H)}")
    F, _ = core.image(H[0], label=f"F{lam}")
    return F


_simples = {}


def simple_modules(A):
    """All simple modules F_lam, lam in Lambda(d, n), keyed by lam."""
    key = id(A)
    got = _simples.get(key)
    if got is None or got[0] is not A:
        got = (A, {lam: simple_general(A, lam) for lam in enum_lambda(A.d, A.n)})
        _simples[key] = got
    return got[1]


# regular modules ------------------------------------------------------------

def regular_module(A):
    """A as a left module; weight space psi is e_psi A."""
    nw = len(A.weights)
    dims = [sum(len(A.piece(psi, chi)) for chi in range(nw)) for psi in range(nw)]

    def block_fn(c):
        return la.direct_sum(*[A.left_mult_block(c, chi) for chi in range(nw)])

    return AModule(A, dims, block_fn, label="A")


def dual_regular(A):
    D = core.dual(regular_module(A))
    D.label = "A#"
    return D


def projective_module(A, chi):
    """A e_chi."""
    nw = len(A.weights)
    return AModule(A, [len(A.piece(psi, chi)) for psi in range(nw)],
                   lambda c: A.left_mult_block(c, chi), label=f"Ae{A.weights[chi]}")


def kuhn_dual(M):
    return core.dual(M)
