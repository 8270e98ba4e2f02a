from math import comb

import pytest

from schurkit import combinatorics as cb


def test_partition_counts():
    assert [len(cb.partitions(d)) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    # labels have first part at most n
    assert set(cb.enum_lambda(3, 2)) == {(2, 1), (1, 1, 1)}


def test_compositions_count():
    for d, n in [(3, 2), (4, 3), (2, 5)]:
        assert len(cb.compositions(d, n)) == comb(d + n - 1, n - 1)


def test_conjugate_is_involution():
    for lam in cb.partitions(7):
        assert cb.conjugate(cb.conjugate(lam)) == lam
    assert cb.conjugate((3, 1)) == (2, 1, 1)


def test_dominance():
    assert cb.dominates((3,), (2, 1))
    assert not cb.dominates((2, 1), (3,))
    assert not cb.dominates((3, 1, 1, 1), (2, 2, 2))
    assert not cb.dominates((2, 2, 2), (3, 1, 1, 1))
    assert cb.label_leq((3,), (2, 1))


def test_p_cores():
    assert cb.p_core((2, 1), 3) == ()
    assert cb.p_core((2, 1), 2) == (2, 1)
    assert cb.p_core((4,), 2) == ()
    for i in range(5):
        assert cb.p_core(cb.hook(5, i), 5) == ()


def test_hooks():
    assert cb.hook(3, 0) == (1, 1, 1)
    assert cb.hook(3, 2) == (3,)
    assert cb.is_p_hook((2, 1), 3) == 1
    assert cb.is_p_hook((2, 2), 4) is None
    assert [cb.hook_specht_dim(5, i) for i in range(5)] == [1, 4, 6, 4, 1]
    with pytest.raises(ValueError):
        cb.hook(3, 3)


def test_principal_block_holds_all_hooks():
    # every p-hook has empty p-core, so with n >= p they sit in a single block
    for p in (3, 5):
        groups = cb.blocks(p, p, p)
        hooks = {cb.hook(p, i) for i in range(p)}
        assert any(hooks <= set(g) for g in groups)
    assert sum(len(g) for g in cb.blocks(4, 3, 2)) == len(cb.enum_lambda(4, 3))


def test_hat_is_involution():
    for n in range(1, 4):
        for k in range(1, 4):
            for d in range(n * k + 1):
                for lam in cb.enum_lambda_rect(d, n, k):
                    h = cb.hat(lam, n, k)
                    assert sum(h) == n * k - d
                    assert cb.hat(h, n, k) == lam
    assert cb.hat((1, 1, 1), 2, 3) == (1, 1, 1)
    assert cb.hat((2,), 2, 2) == (2,)
    with pytest.raises(ValueError):
        cb.hat((3,), 2, 2)


def test_parse_and_format():
    assert cb.parse_partition("3,1^2") == (3, 1, 1)
    assert cb.parse_partition("(2,1)") == (2, 1)
    assert cb.parse_partition("") == ()
    assert cb.partition_str((1, 1, 1)) == "(1^3)"
    assert cb.partition_str((2, 1, 1)) == "(2,1,1)"
    with pytest.raises(ValueError):
        cb.parse_partition("1,2")
