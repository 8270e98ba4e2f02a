from math import comb

import numpy as np
import pytest

from schurkit import exactla as la
from schurkit import schuralg as sa


@pytest.fixture(scope="module")
def A():
    return sa.build_schur_algebra(2, 3, 3)


def test_dimension():
    for n, d, p in [(2, 3, 3), (3, 2, 2), (3, 3, 5)]:
        assert sa.build_schur_algebra(n, d, p).dim == comb(n * n + d - 1, d)


def test_unit(A):
    e = A.unit()
    rng = np.random.default_rng(1)
    x = rng.integers(0, A.p, A.dim)
    assert np.array_equal(A.mul(e, x), x % A.p)
    assert np.array_equal(A.mul(x, e), x % A.p)


def test_action_on_tensor_space_is_multiplicative(A):
    # V^{(x)d} is a faithful module, so products must match operator composition
    rng = np.random.default_rng(0)
    for _ in range(30):
        a, b = (int(t) for t in rng.integers(0, A.dim, 2))
        ab = A.mul_basis(a, b)
        lhs = la.zeros(A.n ** A.d, A.n ** A.d)
        for c in np.flatnonzero(ab):
            lhs = (lhs + ab[c] * sa.operator_matrix(A, int(c)).to_dense()) % A.p
        rhs = la.matmul(sa.operator_matrix(A, a).to_dense(), sa.operator_matrix(A, b).to_dense(), A.p)
        assert np.array_equal(lhs, rhs)


def test_associativity_random(A):
    rng = np.random.default_rng(2)
    for _ in range(10):
        x, y, z = (rng.integers(0, A.p, A.dim) for _ in range(3))
        assert np.array_equal(A.mul(A.mul(x, y), z), A.mul(x, A.mul(y, z)))


def test_left_and_right_blocks_agree_with_mul(A):
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = int(rng.integers(0, A.dim))
        for chi in range(len(A.weights)):
            src = A.piece(int(A.right[a]), chi)
            L = A.left_mult_block(a, chi)
            for k, b in enumerate(src):
                prod = A.mul_basis(a, int(b))
                dst = A.piece(int(A.left[a]), chi)
                assert np.array_equal(L[:, k], prod[dst])
        for psi in range(len(A.weights)):
            src = A.piece(psi, int(A.left[a]))
            R = A.right_mult_block(a, psi)
            dst = A.piece(psi, int(A.right[a]))
            for k, b in enumerate(src):
                assert np.array_equal(R[:, k], A.mul_basis(int(b), a)[dst])


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("SCHURKIT_CACHE", str(tmp_path))
    fresh = sa.build_schur_algebra(2, 2, 5)
    assert list(tmp_path.iterdir())
    cached = sa.build_schur_algebra(2, 2, 5)
    plain = sa.build_schur_algebra(2, 2, 5, use_cache=False)
    for B in (cached, plain):
        assert np.array_equal(B.ta, fresh.ta) and np.array_equal(B.tv, fresh.tv)


def test_truncation_is_a_corner():
    Am, An = sa.build_schur_algebra(3, 3, 3), sa.build_schur_algebra(2, 3, 3)
    assert sa.verify_truncation(Am, An)
    with pytest.raises(ValueError):
        sa.truncation_idempotent(An, 2)


def test_transpose_is_anti_automorphism(A):
    rng = np.random.default_rng(4)
    for _ in range(5):
        x, y = rng.integers(0, A.p, A.dim), rng.integers(0, A.p, A.dim)
        lhs = A.transpose_vec(A.mul(x, y))
        rhs = A.mul(A.transpose_vec(y), A.transpose_vec(x))
        assert np.array_equal(lhs, rhs)


def test_guard():
    with pytest.raises(la.ResourceGuardError):
        sa.build_schur_algebra(4, 10, 3)
