"""Integer (Laurent) polynomial characters, Schur polynomials and skew LR expansions."""
from functools import lru_cache
from itertools import combinations_with_replacement, combinations

from .combinatorics import conjugate, hat, _normalize


class LaurentCharacter:
    """Finite integer combination of monomials x^e, exponents possibly negative."""

    allow_negative = True

    def __init__(self, n_vars, terms=None):
        self.n_vars = n_vars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n_vars:
                raise ValueError("exponent length does not match n_vars")
            if not self.allow_negative and min(e, default=0) < 0:
                raise ValueError("negative exponent in a polynomial")
            c = clean.get(e, 0) + int(c)
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self.terms = clean

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls(len(exp), {tuple(exp): coef})

    def _new(self, terms):
        cls = type(self)
        if not cls.allow_negative and any(min(e, default=0) < 0 for e in terms):
            cls = LaurentCharacter
        return cls(self.n_vars, terms)

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return self._new(t)

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({e: c * other for e, c in self.terms.items()})
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return self._new(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentCharacter):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def inverted(self):
        """Substitute x_i -> 1/x_i."""
        return LaurentCharacter(self.n_vars, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def twist(self, k):
        """Multiply by det^k = (x_1 ... x_n)^k."""
        return LaurentCharacter(self.n_vars, {tuple(x + k for x in e): c for e, c in self.terms.items()})

    def at_ones(self):
        return sum(self.terms.values())

    def is_symmetric(self):
        for i in range(self.n_vars - 1):
            for e, c in self.terms.items():
                f = list(e)
                f[i], f[i + 1] = f[i + 1], f[i]
                if self.terms.get(tuple(f)) != c:
                    return False
        return True

    def to_json(self):
        return {
            "vars": self.n_vars,
            "terms": [{"exp": list(e), "coef": c} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["vars"], {tuple(t["exp"]): t["coef"] for t in obj["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}^{a}" if a != 1 else f"x{i + 1}" for i, a in enumerate(e) if a)
            parts.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(parts)


class SymPolynomial(LaurentCharacter):
    allow_negative = False


def zero(n_vars):
    return SymPolynomial(n_vars)


def one(n_vars):
    return SymPolynomial(n_vars, {(0,) * n_vars: 1})


@lru_cache(maxsize=None)
def _schur_terms(lam, n):
    # branching rule: strip the cells filled with n, which form a horizontal strip
    if len(lam) > n:
        return {}
    if n == 0:
        return {(): 1} if not lam else {}
    out = {}
    L = len(lam)
    ranges = [range(lam[i + 1] if i + 1 < L else 0, lam[i] + 1) for i in range(L)]

    def rec(i, mu):
        if i == L:
            mu_t = _normalize(mu)
            k = sum(lam) - sum(mu_t)
            for e, c in _schur_terms(mu_t, n - 1).items():
                key = e + (k,)
                out[key] = out.get(key, 0) + c
            return
        for x in ranges[i]:
            rec(i + 1, mu + (x,))

    rec(0, ())
    return out


def schur_poly(lam, n_vars):
    """Schur polynomial: sum over semistandard tableaux of shape lam, entries <= n_vars."""
    lam = _normalize(lam)
    return SymPolynomial(n_vars, _schur_terms(lam, n_vars))


def char_costandard(lam, n_vars):
    """Character of the costandard module labelled by lam: s of the conjugate."""
    return schur_poly(conjugate(lam), n_vars)


def complete_h(k, n_vars):
    if k < 0:
        return zero(n_vars)
    t = {}
    for combo in combinations_with_replacement(range(n_vars), k):
        e = [0] * n_vars
        for v in combo:
            e[v] += 1
        t[tuple(e)] = 1
    return SymPolynomial(n_vars, t)


def elementary_e(k, n_vars):
    if k < 0:
        return zero(n_vars)
    t = {}
    for combo in combinations(range(n_vars), k):
        e = [0] * n_vars
        for v in combo:
            e[v] = 1
        t[tuple(e)] = 1
    return SymPolynomial(n_vars, t)


def hook_schur_via_generators(a, b, n_vars):
    """s_(a,1^b) = sum_j (-1)^j h_(a+j) e_(b-j)."""
    total = zero(n_vars)
    for j in range(b + 1):
        term = complete_h(a + j, n_vars) * elementary_e(b - j, n_vars)
        total = total + (term * (-1 if j % 2 else 1))
    return total


def skew_cells(P, lam):
    P, lam = _normalize(P), _normalize(lam)
    if len(lam) > len(P) or any(lam[i] > P[i] for i in range(len(lam))):
        raise ValueError(f"{lam} is not contained in {P}")
    lam = lam + (0,) * (len(P) - len(lam))
    return P, lam


def lr_expand_skew(P, lam):
    """Contents of LR fillings of P/lam, with multiplicities.

    Cells are filled in reading order (rows top to bottom, each row right to
    left) and every prefix of that word must be a lattice word.
    """
    P, lam = skew_cells(P, lam)
    cells = [(r, c) for r in range(len(P)) for c in range(P[r] - 1, lam[r] - 1, -1)]
    nrows = len(P)
    filling = {}
    counts = [0] * (nrows + 2)
    result = {}

    def rec(k):
        if k == len(cells):
            content = _normalize(counts[1:])
            result[content] = result.get(content, 0) + 1
            return
        r, c = cells[k]
        hi = filling.get((r, c + 1), nrows)  # weakly increasing along the row
        lo = filling[(r - 1, c)] + 1 if (r - 1, c) in filling else 1  # strictly down columns
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            rec(k + 1)
            counts[v] -= 1
            del filling[(r, c)]

    rec(0)
    return result


def schur_product_expansion(lam, mu, n_vars):
    """Expand s_lam * s_mu in Schur polynomials by peeling leading terms."""
    target = schur_poly(lam, n_vars) * schur_poly(mu, n_vars)
    out = {}
    while not target.is_zero():
        lead = max(target.terms)
        c = target.terms[lead]
        nu = _normalize(lead)
        out[nu] = out.get(nu, 0) + c
        target = target - schur_poly(nu, n_vars) * c
    return out


def box_complement_check(lam, n, k):
    """The skew shape of a box complement has a unique small content, equal to hat."""
    P = (n,) * k
    expansion = lr_expand_skew(P, lam)
    small = {mu: c for mu, c in expansion.items() if not mu or mu[0] <= n}
    h = hat(lam, n, k)
    return list(small) == [h] and small[h] == 1


def sw_character_identity(lam, n, k):
    lhs = char_costandard(lam, n).inverted().twist(k)
    rhs = char_costandard(hat(lam, n, k), n)
    return lhs == LaurentCharacter(n, rhs.terms)
