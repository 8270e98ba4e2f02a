import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from schurkit import _kernels
from schurkit import exactla as la

PRIMES = [2, 3, 5, 7]


@st.composite
def matrices(draw, max_side=7):
    p = draw(st.sampled_from(PRIMES))
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    M = draw(arrays(np.int64, (m, n), elements=st.integers(0, p - 1)))
    return M, p


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_nullspace_is_kernel(data):
    M, p = data
    N = la.nullspace(M, p)
    assert N.shape == (M.shape[1], M.shape[1] - la.rank(M, p))
    assert not la.matmul(M, N, p).any()
    assert la.rank(N, p) == N.shape[1]


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_sparse_and_dense_agree(data):
    M, p = data
    S = la.SparseFp.from_dense(M, p)
    assert np.array_equal(S.to_dense(), M % p)
    assert S.rank() == la.rank(M, p)
    N = S.nullspace()
    assert N.shape[1] == M.shape[1] - la.rank(M, p)
    assert not la.matmul(M, N, p).any()


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_paths_agree(data):
    M, p = data
    inv = _kernels.inverse_table(p)
    A, B = M.copy(), M.copy()
    pa = _kernels.rref_numpy(A, p, inv)
    pb = _kernels._rref_loops(B, p, inv)
    assert np.array_equal(A, B)
    assert np.array_equal(pa, pb)


@pytest.mark.skipif(_kernels.rref_numba is None, reason="numba path disabled")
@given(matrices())
@settings(max_examples=60, deadline=None)
def test_numba_kernel_matches_numpy(data):
    M, p = data
    inv = _kernels.inverse_table(p)
    A, B = M.copy(), M.copy()
    pa = _kernels.rref_numpy(A, p, inv)
    pb = _kernels.rref_numba(B, p, inv)
    assert np.array_equal(A, B) and np.array_equal(pa, np.asarray(pb))


@given(matrices(), st.data())
@settings(max_examples=100, deadline=None)
def test_solve_round_trip(data, draw):
    M, p = data
    x = draw.draw(arrays(np.int64, M.shape[1], elements=st.integers(0, p - 1)))
    b = la.matmul(M, x.reshape(-1, 1), p)[:, 0]
    y = la.solve(M, b, p)
    assert y is not None
    assert np.array_equal(la.matmul(M, y.reshape(-1, 1), p)[:, 0], b)


def test_solve_inconsistent():
    assert la.solve(np.array([[1, 0], [1, 0]]), np.array([0, 1]), 3) is None


def test_solve_empty_rhs():
    x = la.solve(np.zeros((0, 3), dtype=np.int64), np.zeros(0, dtype=np.int64), 5)
    assert x.shape == (3,) and not x.any()


def test_inverse():
    M = np.array([[2, 1], [1, 1]])
    Mi = la.inverse(M, 5)
    assert np.array_equal(la.matmul(M, Mi, 5), la.identity(2))


def test_reduced_colspace_has_identity_rows():
    M = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    B, rows = la.reduced_colspace(M, 7)
    assert np.array_equal(B[rows], la.identity(len(rows)))
    assert la.rank(np.hstack([M, B]), 7) == la.rank(M, 7) == B.shape[1]


def test_row_reducer_accumulates():
    red = la.RowReducer(3, 3)
    red.add(np.array([[1, 1, 0]]))
    red.add(np.array([[2, 2, 0], [0, 0, 1]]))
    assert red.rank == 2
    N = red.nullspace()
    assert N.shape == (3, 1)
    assert (N[0, 0] + N[1, 0]) % 3 == 0


def test_matmul_large_prime_exact():
    p = 2**31 - 1
    A = np.full((3, 3), p - 1, dtype=np.int64)
    assert np.array_equal(la.matmul(A, A, p), np.full((3, 3), 3))


def test_budget_guard():
    old = la.get_budget()
    try:
        la.set_budget(10)
        with pytest.raises(la.ResourceGuardError):
            la.rref(np.ones((4, 4)), 3)
    finally:
        la.set_budget(old)
    with pytest.raises(ValueError):
        la.set_budget(0)


def test_numpy_fallback_end_to_end(tmp_path):
    import os
    import subprocess
    import sys

    code = ("from schurkit import _kernels; assert not _kernels.USE_NUMBA; "
            "from schurkit.cli import main; raise SystemExit(main(['ext', '--compare', 'F0', 'W1']))")
    env = dict(os.environ, SCHURKIT_NO_NUMBA="1", SCHURKIT_CACHE=str(tmp_path))
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("MATCH")
