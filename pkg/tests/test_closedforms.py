from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schurkit import closedforms as cf


def chi(table):
    return sum((-1) ** q * v for q, v in table.items())


def chi_closed(ka, i, kb, j, n):
    # F_n does not exist over S(n, p); it contributes nothing
    if (ka == "F" and i == n) or (kb == "F" and j == n):
        return 0
    return chi(cf.ext_closed(ka, i, kb, j, n, 4 * n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_euler_characteristics_are_additive(n):
    # S_j and W_j both have composition factors F_j, F_{j+1}
    for a, j in product(range(n), repeat=2):
        assert chi_closed("F", a, "S", j, n) == chi_closed("F", a, "F", j, n) + chi_closed("F", a, "F", j + 1, n)
        assert chi_closed("F", a, "W", j, n) == chi_closed("F", a, "F", j, n) + chi_closed("F", a, "F", j + 1, n)
        assert chi_closed("S", a, "W", j, n) == chi_closed("S", a, "F", j, n) + chi_closed("S", a, "F", j + 1, n)
        assert chi_closed("S", j, "F", a, n) == chi_closed("F", j, "F", a, n) + chi_closed("F", j + 1, "F", a, n)


def test_small_tables():
    assert cf.ext_FF(2, 0, 0) == {0: 1, 1: 0, 2: 1, 3: 0, 4: 0}
    assert cf.ext_FS(2, 0, 1) == {0: 0, 1: 1, 2: 0, 3: 0, 4: 0}
    assert cf.ext_SW(2, 0, 0, 3) == {0: 1, 1: 1, 2: 1, 3: 0}
    assert cf.dec_matrix(3) == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    with pytest.raises(ValueError):
        cf.ext_FF(2, 0, 2)
    with pytest.raises(ValueError):
        cf.ext_closed("W", 0, "F", 0, 2)


def test_ff_symmetric():
    for n in range(1, 6):
        for i, j in product(range(n), repeat=2):
            assert cf.ext_FF(n, i, j) == cf.ext_FF(n, j, i)


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4))
@settings(max_examples=200, deadline=None)
def test_integer_det_matches_float(M):
    assert cf.integer_det(M) == round(np.linalg.det(np.array(M, dtype=float)))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_k0_unimodular(p):
    rows, ok = cf.k0_matrix(p)
    assert ok
    assert len(rows) == p - 1


def test_k0_rows_p3():
    rows, _ = cf.k0_matrix(3)
    assert rows == [[0, -1], [1, 1]]


def test_verbatim_rule_fails():
    conv, report = cf.accepted_convention(2)
    assert conv == "swapped"
    bad, _ = report["verbatim"]
    assert tuple(map(str, bad)) == ("b^0_00", "b^1_01", "b^0_00")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_swapped_rule_is_a_graded_algebra(n):
    B = cf.yoneda_B(n)
    assert B.associativity_failure() is None
    assert B.unit_failure() is None
    assert B.is_graded()
    assert cf.graded_dims_match_ext(n)
    assert cf.yoneda_diag_check(n)


def test_diagonal_nilpotency():
    assert [cf.diagonal_structure(3, i)[2] for i in range(3)] == [3, 2, 1]


def test_rjstar_expected():
    assert cf.rjstar_expected(3, "F", 0).as_pairs() == [(0, "F0"), (2, "F3")]
    assert cf.rjstar_expected(3, "W", 0).as_pairs() == [(0, "W0"), (1, "F3"), (2, "F3")]
    assert cf.rjstar_expected(3, "W", 0, printed=True).as_pairs() == [(0, "W0"), (1, "F2"), (2, "F2")]
    assert cf.rjstar_expected(3, "S", 1).as_pairs() == [(0, "S1")]


def test_sw_symmetry_queries():
    (d, l1, m1), (d2, l2, m2), kind = cf.sw_ext_symmetry_expected((2,), (1, 1), 2, 2, "S")
    assert (d, d2) == (2, 2)
    assert (l2, m2) == ((2,), (1, 1))
    with pytest.raises(ValueError):
        cf.sw_ext_symmetry_expected((2,), (1,), 2, 2, "S")
