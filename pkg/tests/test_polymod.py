from math import comb

import numpy as np
import pytest

from schurkit.characters import char_costandard
from schurkit.combinatorics import enum_lambda, hook
from schurkit.polymod import core
from schurkit.polymod.functors import (forms, general_costandard, general_standard, hook_module,
                                       projective_module, regular_module, simple_dim_sym, simple_modules,
                                       tensor_power_module)
from schurkit.schuralg import build_schur_algebra


@pytest.fixture(scope="module")
def A32():
    return build_schur_algebra(2, 3, 3)


@pytest.fixture(scope="module")
def A33():
    return build_schur_algebra(3, 3, 3)


def _module_axioms(M, samples=40):
    A = M.algebra
    rng = np.random.default_rng(7)
    for _ in range(samples):
        a, b = (int(t) for t in rng.integers(0, A.dim, 2))
        if A.right[a] != A.left[b]:
            continue
        ab = A.mul_basis(a, b)
        lhs = sum((int(ab[c]) * M.full_action(int(c)) for c in np.flatnonzero(ab)),
                  np.zeros((M.dim, M.dim), dtype=np.int64)) % A.p
        rhs = (M.full_action(a) @ M.full_action(b)) % A.p
        assert np.array_equal(lhs, rhs)


def test_omega_dims(A33):
    f = forms(A33)
    n, p = 3, 3
    assert [O.dim for O in f.omega] == [comb(n + p - i - 1, p - i) * comb(n, i) for i in range(p + 1)]


def test_forms_differentials(A33):
    f = forms(A33)
    for i in range(A33.d - 1):
        assert f.d[i + 1].compose(f.d[i]).is_zero()
    for i in range(2, A33.d + 1):
        assert f.kappa[i - 1].compose(f.kappa[i]).is_zero()
    for i in range(A33.d + 1):
        assert all(g is None or g.check_equivariant() for g in (f.kappa[i],))


def test_hook_costandard_matches_general(A33):
    for i in range(3):
        S = hook_module(A33, "S", i)
        assert S.character() == char_costandard(hook(3, i), 3)
        assert core.iso_test(S, general_costandard(A33, hook(3, i)))


def test_standard_is_dual_of_costandard(A32):
    for i in range(2):
        W = hook_module(A32, "W", i)
        assert W.character() == hook_module(A32, "S", i).character()
        assert core.hom_dim(W, hook_module(A32, "S", i)) == 1


def test_simple_multilinear_dims():
    # multilinear weight space of F_i is a symmetric group simple of dimension binom(p-2, i-1)
    for p in (3, 5):
        assert [simple_dim_sym(p, i) for i in range(p)] == [0] + [comb(p - 2, i - 1) for i in range(1, p)]


def test_simples_are_pairwise_distinct(A32):
    S = simple_modules(A32)
    labels = list(S)
    assert set(labels) == set(enum_lambda(3, 2))
    for a in labels:
        for b in labels:
            assert core.hom_dim(S[a], S[b]) == (1 if a == b else 0)


def test_module_axioms(A32):
    for M in (hook_module(A32, "S", 0), hook_module(A32, "W", 1), tensor_power_module(A32),
              general_standard(A32, (2, 1))):
        _module_axioms(M)


def test_regular_module_decomposes(A32):
    R = regular_module(A32)
    assert R.dim == A32.dim
    total = sum(projective_module(A32, chi).dim for chi in range(len(A32.weights)))
    assert total == A32.dim


def test_kernel_image_quotient(A32):
    f = forms(A32)
    d0 = f.d[0]
    K, kinc = core.kernel(d0)
    I, _ = core.image(d0)
    C, _ = core.cokernel(d0)
    assert K.dim + I.dim == d0.source.dim
    assert I.dim + C.dim == d0.target.dim
    assert d0.compose(kinc).is_zero()


def test_direct_sum_and_dual(A32):
    M, N = hook_module(A32, "F", 0), hook_module(A32, "S", 1)
    S, incs, projs = core.direct_sum([M, N])
    assert S.dim == M.dim + N.dim
    assert core.iso_test(projs[0].compose(incs[0]).source, M)
    assert projs[1].compose(incs[0]).is_zero()
    assert core.iso_test(core.dual(core.dual(N)), N)
    assert core.hom_dim(M, S) == core.hom_dim(M, M) + core.hom_dim(M, N)


def test_find_iso_rejects_non_isomorphic(A32):
    S0, W0 = hook_module(A32, "S", 0), hook_module(A32, "W", 0)
    assert S0.dim == W0.dim
    assert not core.iso_test(S0, W0)


def test_split_injection(A32):
    F = hook_module(A32, "F", 1)
    S, _, _ = core.direct_sum([F, hook_module(A32, "F", 0)])
    i, r = core.find_split_injection(F, S)
    assert r.compose(i).is_iso()


def test_dump_round_trips_character(A32):
    from schurkit.characters import LaurentCharacter

    M = hook_module(A32, "S", 1)
    info = core.module_dump(M)
    assert LaurentCharacter.from_json(info["character"]) == M.character()
    assert info["dim"] == M.dim
    assert core.map_dump(core.identity_map(M))["rank"] == M.dim
