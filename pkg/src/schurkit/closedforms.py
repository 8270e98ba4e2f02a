"""Closed formulas for the p-hook block of S(n,p)-modules, as plain tables.

Hook modules are indexed by i in 0..n-1 (the hook (i+1, 1^(p-i-1))).  Ext tables
are dicts {q: dim} for q = 0..qmax, with qmax defaulting to 2n.
"""
from dataclasses import dataclass, field
from itertools import product


def _check(n, *idx):
    if n < 1:
        raise ValueError("n must be positive")
    for i in idx:
        if not 0 <= i <= n - 1:
            raise ValueError(f"hook index {i} out of range for n={n}")


def _table(degrees, n, qmax):
    qmax = 2 * n if qmax is None else qmax
    return {q: int(q in degrees) for q in range(qmax + 1)}


def dec_matrix(n):
    """[W_i : F_j] = 1 iff j = i or j = i + 1."""
    return [[int(j == i or j == i + 1) for j in range(n)] for i in range(n)]


def ext_FS(n, i, j, qmax=None):
    _check(n, i, j)
    return _table({j - i} if j >= i else set(), n, qmax)


def ext_FF(n, i, j, qmax=None):
    _check(n, i, j)
    return _table({abs(i - j) + 2 * r for r in range(n - max(i, j))}, n, qmax)


def ext_SS(n, i, j, qmax=None):
    _check(n, i, j)
    deg = set()
    if i == j:
        deg.add(0)
    if j > i:
        deg |= {j - i - 1, j - i}
    return _table(deg, n, qmax)


def ext_SF(n, i, j, qmax=None):
    _check(n, i, j)
    deg = {2 * n - i - j - 2}
    if i < j:
        deg.add(j - i - 1)
    return _table(deg, n, qmax)


def ext_FW(n, i, j, qmax=None):
    _check(n, i, j)
    deg = {2 * n - i - j - 2}
    if i > j:
        deg.add(i - j - 1)
    return _table(deg, n, qmax)


def ext_SW(n, i, j, qmax=None):
    _check(n, i, j)
    deg = {2 * n - i - j - 3, 2 * n - i - j - 2}
    if i == j:
        deg.add(0)
    return _table(deg, n, qmax)


EXT_TABLES = {
    ("F", "S"): ext_FS,
    ("F", "F"): ext_FF,
    ("S", "S"): ext_SS,
    ("S", "F"): ext_SF,
    ("F", "W"): ext_FW,
    ("S", "W"): ext_SW,
}


def ext_closed(kind_a, i, kind_b, j, n, qmax=None):
    try:
        fn = EXT_TABLES[(kind_a, kind_b)]
    except KeyError:
        raise ValueError(f"no closed form for Ext({kind_a}, {kind_b})") from None
    return fn(n, i, j, qmax)


# expected cohomology ------------------------------------------------------

@dataclass(frozen=True)
class Symbol:
    """A labelled module: kind in {S, F, W} (functors) or {Sp, Sp', G} (symmetric group)."""

    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


@dataclass
class ExpectedCohomology:
    entries: list = field(default_factory=list)  # [(q, Symbol)]

    def degrees(self):
        return sorted({q for q, _ in self.entries})

    def at(self, q):
        return [s for t, s in self.entries if t == q]

    def dims(self, resolve, qmax):
        """{q: summed dimension} with ``resolve(symbol) -> int``."""
        out = {q: 0 for q in range(qmax + 1)}
        for q, s in self.entries:
            if q <= qmax:
                out[q] += resolve(s)
        return out

    def as_pairs(self):
        return [(q, str(s)) for q, s in self.entries]


def rjstar_expected(n, kind, i, printed=False):
    """Cohomology of Rj_* applied to a hook module of S(n,p), labelled over S(m,p), m > n.

    With ``printed=True`` the W case uses F_{n-1} in the two upper degrees, as the
    formula is usually displayed; the default F_n is what the computation gives.
    """
    _check(n, i)
    if kind == "S":
        return ExpectedCohomology([(0, Symbol("S", i))])
    if kind not in ("F", "W"):
        raise ValueError("kind must be S, F or W")
    if i == n - 1:
        return ExpectedCohomology([(0, Symbol("S", n - 1))])
    if kind == "F":
        return ExpectedCohomology([(0, Symbol("F", i)), (n - i - 1, Symbol("F", n))])
    top = Symbol("F", n - 1 if printed else n)
    return ExpectedCohomology([(0, Symbol("W", i)), (n - i - 2, top), (n - i - 1, top)])


def rs_expected(n, kind, i):
    """Ext^q(V^{(x)p}, hook module) as symmetric group labels."""
    _check(n, i)
    if kind == "S" or i == n - 1:
        return ExpectedCohomology([(0, Symbol("Sp", i))])
    if kind == "F":
        if i == 0:
            return ExpectedCohomology([(n - 1, Symbol("G", n))])
        return ExpectedCohomology([(0, Symbol("G", i)), (n - 1 - i, Symbol("G", n))])
    if kind == "W":
        return ExpectedCohomology([(0, Symbol("Sp'", i)), (n - i - 2, Symbol("G", n)),
                                   (n - i - 1, Symbol("G", n))])
    raise ValueError("kind must be S, F or W")


def symmetric_dim(symbol, p):
    from .combinatorics import hook_specht_dim
    from .polymod.functors import simple_dim_sym

    if symbol.kind in ("Sp", "Sp'"):
        return hook_specht_dim(p, symbol.index)
    if symbol.kind == "G":
        return simple_dim_sym(p, symbol.index)
    raise ValueError(f"{symbol} is not a symmetric group label")


# Grothendieck group ------------------------------------------------------

def specht_in_simples(i):
    """[Sp_i] = [G_i] + [G_{i+1}] with G_0 = 0 (hook Specht modules in characteristic p)."""
    out = {}
    if i >= 1:
        out[i] = 1
    out[i + 1] = 1
    return out


def euler_class(exp, p):
    """Alternating sum of the classes in ``exp``, as {j: coeff} in the basis G_1..G_{p-1}."""
    out = {}
    for q, s in exp.entries:
        sign = -1 if q % 2 else 1
        terms = specht_in_simples(s.index) if s.kind in ("Sp", "Sp'") else {s.index: 1}
        for j, c in terms.items():
            if j <= p - 1:
                out[j] = out.get(j, 0) + sign * c
    return {j: c for j, c in out.items() if c}


def integer_det(M):
    """Exact determinant by fraction-free elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                A[r][c] = (A[r][c] * A[k][k] - A[r][k] * A[k][c]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def k0_matrix(p):
    """Rows [Rs F_i], i = 0..p-2, in the basis G_1..G_{p-1}; returns (matrix, unimodular)."""
    n = p - 1
    if n < 1:
        raise ValueError("need p >= 2")
    rows = []
    for i in range(n):
        cls = euler_class(rs_expected(n, "F", i), p)
        rows.append([cls.get(j, 0) for j in range(1, n + 1)])
    return rows, abs(integer_det(rows)) == 1


# Yoneda algebra ----------------------------------------------------------

@dataclass(frozen=True)
class BElement:
    """Basis symbol b^t_{ji}."""

    t: int
    j: int
    i: int

    def __str__(self):
        return f"b^{self.t}_{self.j}{self.i}"


class YonedaB:
    """Graded algebra spanned by b^t_{ji}, t = |i-j| + 2r, 0 <= r <= n - max(i,j) - 1.

    convention "verbatim": b^t_{lm} b^u_{ji} = b^{t+u}_{mi} if j = l and t+u <= 2n-i-m-2.
    convention "swapped":  b^t_{lm} b^u_{ji} = b^{t+u}_{li} if m = j and t+u <= 2n-i-l-2.
    """

    def __init__(self, n, convention="swapped"):
        if convention not in ("verbatim", "swapped"):
            raise ValueError("convention must be verbatim or swapped")
        self.n = n
        self.convention = convention
        self.basis = [BElement(abs(i - j) + 2 * r, j, i)
                      for i, j in product(range(n), repeat=2) for r in range(n - max(i, j))]
        self.basis.sort(key=lambda b: (b.t, b.j, b.i))
        self.index = {b: k for k, b in enumerate(self.basis)}

    def dim(self):
        return len(self.basis)

    def graded_dims(self):
        out = {}
        for b in self.basis:
            out[b.t] = out.get(b.t, 0) + 1
        return out

    def mul_basis(self, x, y):
        """Product of two basis symbols: a basis symbol or None."""
        n = self.n
        t, l, m = x.t, x.j, x.i
        u, j, i = y.t, y.j, y.i
        if self.convention == "verbatim":
            ok, out = j == l and t + u <= 2 * n - i - m - 2, BElement(t + u, m, i)
        else:
            ok, out = m == j and t + u <= 2 * n - i - l - 2, BElement(t + u, l, i)
        if not ok:
            return None
        if out not in self.index:
            raise AssertionError(f"product {x}*{y} = {out} is not a basis symbol")
        return out

    def mul(self, x, y):
        """Product of elements given as {BElement: coeff}."""
        out = {}
        for a, c in x.items():
            for b, d in y.items():
                z = self.mul_basis(a, b)
                if z is not None:
                    out[z] = out.get(z, 0) + c * d
        return {k: v for k, v in out.items() if v}

    def unit(self):
        return {BElement(0, i, i): 1 for i in range(self.n)}

    def associativity_failure(self):
        """First triple (x, y, z) with (xy)z != x(yz), or None."""
        for x, y, z in product(self.basis, repeat=3):
            lhs = self.mul(self.mul({x: 1}, {y: 1}), {z: 1})
            rhs = self.mul({x: 1}, self.mul({y: 1}, {z: 1}))
            if lhs != rhs:
                return x, y, z
        return None

    def unit_failure(self):
        e = self.unit()
        for x in self.basis:
            if self.mul(e, {x: 1}) != {x: 1} or self.mul({x: 1}, e) != {x: 1}:
                return x
        return None

    def is_graded(self):
        for x, y in product(self.basis, repeat=2):
            z = self.mul_basis(x, y)
            if z is not None and z.t != x.t + y.t:
                return False
        return all(b.t <= 2 * self.n - 2 for b in self.basis)

    def table(self):
        return [(str(x), str(y), str(z)) for x, y in product(self.basis, repeat=2)
                if (z := self.mul_basis(x, y)) is not None]


def yoneda_B(n, convention="swapped"):
    return YonedaB(n, convention)


def accepted_convention(n):
    """First convention (verbatim, then swapped) that is associative and unital, with the failures seen."""
    report = {}
    for conv in ("verbatim", "swapped"):
        B = YonedaB(n, conv)
        bad = B.associativity_failure()
        unit_bad = B.unit_failure()
        report[conv] = (bad, unit_bad)
        if bad is None and unit_bad is None:
            return conv, report
    return None, report


def diagonal_structure(n, i, convention="swapped"):
    """(closed, commutative, nilpotency order of b^2_{ii}) for the span of b^{2r}_{ii}."""
    B = YonedaB(n, convention)
    diag = [b for b in B.basis if b.i == i and b.j == i]
    closed, commutative = True, True
    for x, y in product(diag, repeat=2):
        xy, yx = B.mul_basis(x, y), B.mul_basis(y, x)
        if xy is not None and xy not in diag:
            closed = False
        if xy != yx:
            commutative = False
    if not diag or n - i == 1:
        return closed, commutative, 1
    x = BElement(2, i, i)
    power, order = {x: 1}, 1
    while power:
        power = B.mul(power, {x: 1})
        order += 1
    return closed, commutative, order


def yoneda_diag_check(n, convention="swapped"):
    for i in range(n):
        closed, commutative, order = diagonal_structure(n, i, convention)
        expected_dims = {2 * r: 1 for r in range(n - i)}
        B = YonedaB(n, convention)
        dims = {}
        for b in B.basis:
            if b.i == i and b.j == i:
                dims[b.t] = dims.get(b.t, 0) + 1
        if not (closed and commutative and order == n - i and dims == expected_dims):
            return False
    return True


def graded_dims_match_ext(n, convention="swapped"):
    """dim e_j B_t e_i agrees with ext_FF(n, i, j) for all i, j."""
    B = YonedaB(n, convention)
    for i, j in product(range(n), repeat=2):
        table = ext_FF(n, i, j, 2 * n)
        got = {q: 0 for q in table}
        for b in B.basis:
            if b.i == i and b.j == j:
                got[b.t] += 1
        if got != table:
            return False
    return True


# Spanier-Whitehead duality -----------------------------------------------

def sw_ext_symmetry_expected(lam, mu, n, k, kind):
    """The two Ext queries that must agree: ((d, lam, mu), (nk - d, hat lam, hat mu), kind)."""
    from .combinatorics import hat

    lam, mu = tuple(lam), tuple(mu)
    d = sum(lam)
    if sum(mu) != d:
        raise ValueError("labels of different weight")
    for x in (lam, mu):
        if len(x) > k or (x and x[0] > n):
            raise ValueError(f"{x} is not in Lambda({d},{n},{k})")
    if kind not in ("S", "W", "F"):
        raise ValueError("kind must be S, W or F")
    return (d, lam, mu), (n * k - d, hat(lam, n, k), hat(mu, n, k)), kind
