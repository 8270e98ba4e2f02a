"""The acceptance checks, shared by the test suite and the ``verify`` command.

Each check returns a CriterionResult; ``details`` lists every mismatch found.
"""
import time
from dataclasses import dataclass, field
from itertools import product

from . import closedforms as cf
from .characters import box_complement_check, sw_character_identity
from .combinatorics import enum_lambda, enum_lambda_rect
from .homalg import (ext_dims, jlowerstar, jshriek, jstar, power_order, ext_adjunction_sides,
                     r_jlowerstar_cohomology, rs_dims)
from .polymod import core
from .polymod.complexes import build_K, build_L, build_M, build_R, complex_cohomology
from .polymod.functors import (forms, general_costandard, general_standard, hook_module, simple_general,
                               simple_modules)
from .schuralg import build_schur_algebra

EXT_SCALES = [(3, 2), (5, 2), (5, 3)]
RESOLUTION_SCALES = [(3, 2), (5, 3)]


@dataclass
class CriterionResult:
    number: int
    title: str
    details: list = field(default_factory=list)
    checks: int = 0
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.details and self.checks > 0

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f" ({len(self.details)} mismatches; first: {self.details[0] if self.details else 'no checks ran'})"
        return f"[{status}] criterion {self.number}: {self.title} - {self.checks} checks in {self.seconds:.1f}s{extra}"


TITLES = {
    1: "brute Ext equals closed forms for F/S/W hook pairs",
    2: "char W_i = char F_i + char F_{i+1}",
    3: "d^2 = kappa^2 = kappa d + d kappa = 0, equivariance",
    4: "R, K, M, L resolve F_i, F_i, W_i, W_i; Omega^j injective",
    5: "no higher Ext between simples when d < p",
    6: "j_* S = S, j_! W = W, j^* j_* = id = j^* j_!",
    7: "Rj_* cohomology, Ext(j^* P, F) adjunction, Rs dimensions",
    8: "Grothendieck group matrix of Rs is unimodular",
    9: "Yoneda algebra B: associative, unital, graded like Ext(F,F), truncated diagonals",
    10: "Spanier-Whitehead: LR complement, characters, Ext symmetry, worked example",
}


class _Recorder:
    def __init__(self, number):
        self.result = CriterionResult(number, TITLES[number])
        self._t = time.perf_counter()

    def check(self, ok, what):
        self.result.checks += 1
        if not ok:
            self.result.details.append(what)

    def tally(self, count, failures):
        self.result.checks += count
        self.result.details.extend(failures)

    def done(self):
        self.result.seconds = time.perf_counter() - self._t
        return self.result


def _hook_algebra(p, n):
    return build_schur_algebra(n, p, p)


# 1 ------------------------------------------------------------------------

EXT_PAIRS = [("F", "S"), ("F", "F"), ("S", "S"), ("S", "F"), ("F", "W"), ("S", "W")]


def ext_table_mismatches(p, n, qmax=None):
    """All (pair, brute, closed) triples where brute-force Ext differs from the closed form."""
    A = _hook_algebra(p, n)
    qmax = 2 * n if qmax is None else qmax
    out, count = [], 0
    for (ka, kb), i, j in product(EXT_PAIRS, range(n), range(n)):
        brute = ext_dims(hook_module(A, ka, i), hook_module(A, kb, j), qmax)
        closed = cf.ext_closed(ka, i, kb, j, n, qmax)
        count += 1
        if brute != closed:
            out.append(((f"{ka}{i}", f"{kb}{j}"), brute, closed))
    return out, count


def criterion_1(scales=EXT_SCALES):
    rec = _Recorder(1)
    for p, n in scales:
        bad, count = ext_table_mismatches(p, n)
        rec.tally(count, [f"(p,n)=({p},{n}) Ext{pair}: brute {brute} vs closed {closed}" for pair, brute, closed in bad])
    return rec.done()


# 2 ------------------------------------------------------------------------

def criterion_2(scales=EXT_SCALES):
    rec = _Recorder(2)
    for p, n in scales:
        A = _hook_algebra(p, n)
        D = cf.dec_matrix(n)
        for i in range(n):
            total = None
            for j in range(n):
                if D[i][j]:
                    c = hook_module(A, "F", j).character()
                    total = c if total is None else total + c
            lhs = hook_module(A, "W", i).character()
            rec.check(lhs == total, f"(p,n)=({p},{n}) i={i}")
    return rec.done()


# 3 ------------------------------------------------------------------------

def differential_identities(A):
    """List of failed identities among d^2, kappa^2, kappa d + d kappa and equivariance."""
    f = forms(A)
    top = min(A.n, A.d)
    bad = []
    for i in range(top - 1):
        if not f.d[i + 1].compose(f.d[i]).is_zero():
            bad.append(f"d^2 on Omega^{i}")
    for i in range(2, top + 1):
        if not f.kappa[i - 1].compose(f.kappa[i]).is_zero():
            bad.append(f"kappa^2 on Omega^{i}")
    for i in range(top + 1):
        total = None
        if i < top and i + 1 <= top:
            total = f.kappa[i + 1].compose(f.d[i])
        if i >= 1:
            other = f.d[i - 1].compose(f.kappa[i])
            total = other if total is None else total + other
        if total is not None and not total.is_zero():
            bad.append(f"kappa d + d kappa on Omega^{i}")
    for i in range(top):
        if not f.d[i].check_equivariant():
            bad.append(f"d on Omega^{i} not equivariant")
    for i in range(1, top + 1):
        if not f.kappa[i].check_equivariant():
            bad.append(f"kappa on Omega^{i} not equivariant")
    return bad


def criterion_3(scales=EXT_SCALES):
    rec = _Recorder(3)
    for p, n in scales:
        bad = differential_identities(_hook_algebra(p, n))
        rec.check(not bad, f"(p,n)=({p},{n}): {bad}")
    return rec.done()


# 4 ------------------------------------------------------------------------

def _concentrated(C, expected):
    H = complex_cohomology(C)
    return H[0].dim == expected.dim and all(h.dim == 0 for h in H[1:]) and core.iso_test(H[0], expected)


def criterion_4(scales=RESOLUTION_SCALES):
    rec = _Recorder(4)
    for p, n in scales:
        A = _hook_algebra(p, n)
        for i in range(n):
            for name, build, kind in (("R", build_R, "F"), ("K", build_K, "F"), ("M", build_M, "W"),
                                     ("L", build_L, "W")):
                C = build(A, i)
                rec.check(C.check_d2() and _concentrated(C, hook_module(A, kind, i)),
                          f"(p,n)=({p},{n}) {name}_{i}")
        simples = simple_modules(A)
        f = forms(A)
        for j in range(n):
            for lam, L in simples.items():
                e1 = ext_dims(L, f.omega[j], 1)[1]
                rec.check(e1 == 0, f"(p,n)=({p},{n}) Ext^1(F{lam}, Omega^{j}) = {e1}")
    return rec.done()


# 5 ------------------------------------------------------------------------

SEMISIMPLE_SCALES = [(2, 3, 2), (3, 5, 2), (4, 5, 3)]


def criterion_5(scales=SEMISIMPLE_SCALES):
    rec = _Recorder(5)
    for d, p, n in scales:
        A = build_schur_algebra(n, d, p)
        simples = simple_modules(A)
        for (a, L), (b, M) in product(simples.items(), repeat=2):
            e = ext_dims(L, M, 3)
            rec.check(all(e[q] == 0 for q in (1, 2, 3)), f"(d,p,n)=({d},{p},{n}) Ext(F{a},F{b}) = {e}")
    return rec.done()


# 6 ------------------------------------------------------------------------

RECOLLEMENT_SCALES = [(3, 3, 3), (3, 3, 2)]


def criterion_6(scales=RECOLLEMENT_SCALES, n=2):
    rec = _Recorder(6)
    for m, d, p in scales:
        Am, An = build_schur_algebra(m, d, p), build_schur_algebra(n, d, p)
        tag = f"(m,d,p)=({m},{d},{p})"
        for lam in enum_lambda(d, n):
            S_small, W_small = general_costandard(An, lam), general_standard(An, lam)
            F_small = simple_general(An, lam)
            JS = jlowerstar(Am, An, S_small)
            JW = jshriek(Am, An, W_small)
            rec.check(core.iso_test(JS, general_costandard(Am, lam)), f"{tag} j_* S{lam}")
            rec.check(core.iso_test(JW, general_standard(Am, lam)), f"{tag} j_! W{lam}")
            for N in (S_small, W_small, F_small):
                rec.check(core.iso_test(jstar(Am, An, jlowerstar(Am, An, N)), N), f"{tag} j^* j_* {N.label}")
                rec.check(core.iso_test(jstar(Am, An, jshriek(Am, An, N)), N), f"{tag} j^* j_! {N.label}")
    return rec.done()


# 7 ------------------------------------------------------------------------

def expected_character(Am, exp, q):
    """Summed character of the labels expected in degree q, as modules over Am."""
    total = None
    for s in exp.at(q):
        c = hook_module(Am, s.kind, s.index).character()
        total = c if total is None else total + c
    return total


def rjstar_mismatches(m=3, n=2, p=3, qmax=3, printed=False):
    Am, An = build_schur_algebra(m, p, p), build_schur_algebra(n, p, p)
    out, count = [], 0
    for kind, i in product("FW", range(n)):
        H = r_jlowerstar_cohomology(Am, An, hook_module(An, kind, i), qmax)
        exp = cf.rjstar_expected(n, kind, i, printed=printed)
        for q in range(qmax + 1):
            want = expected_character(Am, exp, q)
            got = H[q].character()
            count += 1
            if (want is None and H[q].dim) or (want is not None and got != want):
                out.append(f"Rj_*{kind}{i} H^{q}: dim {H[q].dim}, expected {[str(s) for s in exp.at(q)]}")
            elif want is not None and len(exp.at(q)) == 1:
                s = exp.at(q)[0]
                count += 1
                if not core.iso_test(H[q], hook_module(Am, s.kind, s.index)):
                    out.append(f"Rj_*{kind}{i} H^{q} not isomorphic to {s}")
    return out, count


def rs_mismatches(p, n, qmax=None):
    A = _hook_algebra(p, n)
    qmax = 2 * n if qmax is None else qmax
    out, count = [], 0
    for kind, i in product("SFW", range(n)):
        got = rs_dims(hook_module(A, kind, i), qmax)
        want = cf.rs_expected(n, kind, i).dims(lambda s: cf.symmetric_dim(s, p), qmax)
        count += 1
        if got != want:
            out.append(f"(p,n)=({p},{n}) Rs({kind}{i}): {got} vs {want}")
    return out, count


ADJUNCTION_MODULES = [("F", 0), ("F", 1), ("S", 0), ("S", 1), ("W", 0)]


def criterion_7(rs_scales=EXT_SCALES):
    rec = _Recorder(7)
    bad, count = rjstar_mismatches()
    rec.tally(count, bad)
    Am, An = build_schur_algebra(3, 3, 3), build_schur_algebra(2, 3, 3)
    for kind, i in ADJUNCTION_MODULES:
        lhs, rhs = ext_adjunction_sides(Am, An, hook_module(An, kind, i), 3)
        rec.check(lhs == rhs, f"Ext(j^* V, {kind}{i}) {lhs} vs H Hom(V, Rj_*) {rhs}")
    for p, n in rs_scales:
        bad, count = rs_mismatches(p, n)
        rec.tally(count, bad)
    return rec.done()


# 8 ------------------------------------------------------------------------

def criterion_8(primes=(3, 5)):
    rec = _Recorder(8)
    for p in primes:
        M, unimodular = cf.k0_matrix(p)
        rec.check(unimodular, f"p={p}: det of {M} is not +-1")
    return rec.done()


# 9 ------------------------------------------------------------------------

def criterion_9(nmax=5, nilpotency_scales=RESOLUTION_SCALES):
    rec = _Recorder(9)
    for n in range(1, nmax + 1):
        conv, report = cf.accepted_convention(n)
        rec.check(conv is not None, f"n={n}: both conventions fail: {report}")
        if conv is None:
            continue
        rec.check(cf.graded_dims_match_ext(n, conv), f"n={n}: graded dims differ from Ext(F_i,F_j)")
        rec.check(cf.yoneda_diag_check(n, conv), f"n={n}: diagonal subalgebras not k[x]/x^(n-i)")
    for p, n in nilpotency_scales:
        A = _hook_algebra(p, n)
        for i in range(n):
            order = power_order(hook_module(A, "F", i), 2, 2 * n)
            rec.check(order == n - i, f"(p,n)=({p},{n}) F{i}: x^k = 0 first at k={order}, expected {n - i}")
    return rec.done()


# 10 -----------------------------------------------------------------------

def sw_ext_pairs(n, k, d, p, kinds=("S", "W", "F"), qmax=3):
    """Mismatches between Ext over S(n,d) and over S(n,nk-d) on hat labels."""
    A, B = build_schur_algebra(n, d, p), build_schur_algebra(n, n * k - d, p)
    make = {"S": general_costandard, "W": general_standard, "F": lambda X, lam: simple_modules(X)[lam]}
    out, count = [], 0
    labels = enum_lambda_rect(d, n, k)
    for kind in kinds:
        for lam, mu in product(labels, repeat=2):
            (_, l1, m1), (_, l2, m2), _ = cf.sw_ext_symmetry_expected(lam, mu, n, k, kind)
            left = ext_dims(make[kind](A, l1), make[kind](A, m1), qmax)
            right = ext_dims(make[kind](B, l2), make[kind](B, m2), qmax)
            count += 1
            if left != right:
                out.append(f"p={p} {kind}: Ext({l1},{m1}) {left} vs Ext({l2},{m2}) {right}")
    return out, count


SW_EXT_CASES = [(2, 2, 1), (2, 2, 2), (2, 3, 3)]
# pairs of different weight for k = 3, beyond the required self-dual case
SW_EXT_EXTRA = [(2, 3, 1), (2, 3, 2)]


def worked_example(p=3):
    """Over S(2,3): the costandard module of (1,1,1) modulo its simple socle is F_(2,1)."""
    A = build_schur_algebra(2, 3, p)
    S = general_costandard(A, (1, 1, 1))
    H = core.hom_space(core.dual(S), S)
    if len(H) != 1:
        return False
    F, inc = core.image(H[0])
    Q, _ = core.quotient(S, inc.blocks)
    return core.iso_test(Q, simple_general(A, (2, 1)))


def criterion_10(primes=(2, 3)):
    rec = _Recorder(10)
    for n, k in product(range(1, 4), repeat=2):
        for d in range(n * k + 1):
            for lam in enum_lambda_rect(d, n, k):
                rec.check(box_complement_check(lam, n, k), f"box complement {lam} n={n} k={k}")
                rec.check(sw_character_identity(lam, n, k), f"character identity {lam} n={n} k={k}")
    for p in primes:
        for n, k, d in SW_EXT_CASES + SW_EXT_EXTRA:
            bad, count = sw_ext_pairs(n, k, d, p)
            rec.tally(count, [f"n={n} k={k} d={d}: {b}" for b in bad])
    rec.check(worked_example(), "S_(1,1,1)/F_(1,1,1) is not F_(2,1) over S(2,3)")
    return rec.done()


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}

# reduced scales for a quick run at (p, n) = (3, 2)
SMALL = {
    1: dict(scales=[(3, 2)]), 2: dict(scales=[(3, 2)]), 3: dict(scales=[(3, 2)]),
    4: dict(scales=[(3, 2)]), 7: dict(rs_scales=[(3, 2)]), 8: dict(primes=(3,)),
    9: dict(nilpotency_scales=[(3, 2)]),
}


def run(numbers=None, small=False, stream=None):
    results = []
    for k in numbers or sorted(CRITERIA):
        kwargs = SMALL.get(k, {}) if small else {}
        r = CRITERIA[k](**kwargs)
        results.append(r)
        if stream is not None:
            print(r.line(), file=stream, flush=True)
    return results
