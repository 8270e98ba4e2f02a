from itertools import product

import pytest

from schurkit import characters as ch
from schurkit.combinatorics import enum_lambda, enum_lambda_rect, hat


def test_schur_small():
    x = ch.schur_poly((1,), 2)
    assert x.terms == {(1, 0): 1, (0, 1): 1}
    s21 = ch.schur_poly((2, 1), 3)
    assert s21.terms[(1, 1, 1)] == 2
    assert s21.at_ones() == 8
    assert ch.schur_poly((1, 1, 1), 2).is_zero()


def test_schur_is_symmetric():
    for lam in enum_lambda(4, 3):
        assert ch.schur_poly(lam, 3).is_symmetric()


def test_hook_schur_via_jacobi_trudi():
    for a, b in product(range(1, 4), range(0, 3)):
        lam = (a,) + (1,) * b
        assert ch.hook_schur_via_generators(a, b, 3) == ch.schur_poly(lam, 3)


def test_pieri_products():
    assert ch.schur_product_expansion((1,), (1,), 3) == {(2,): 1, (1, 1): 1}
    assert ch.schur_product_expansion((2, 1), (1,), 3) == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}


def test_lr_against_product():
    # c^P_{lam, mu} from the skew expansion equals the coefficient of s_P in s_lam s_mu
    P = (2, 2)
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        skew = ch.lr_expand_skew(P, lam)
        for mu, c in skew.items():
            assert ch.schur_product_expansion(lam, mu, 4).get(P, 0) == c


def test_box_complement_and_character_identity():
    for n, k in product(range(1, 4), repeat=2):
        for d in range(n * k + 1):
            for lam in enum_lambda_rect(d, n, k):
                assert ch.box_complement_check(lam, n, k)
                assert ch.sw_character_identity(lam, n, k)


def test_character_identity_fails_for_wrong_twist():
    lam, n, k = (2, 1), 2, 2
    lhs = ch.char_costandard(lam, n).inverted().twist(k + 1)
    assert lhs != ch.LaurentCharacter(n, ch.char_costandard(hat(lam, n, k), n).terms)


def test_json_round_trip():
    c = ch.schur_poly((2, 1), 3).inverted()
    assert ch.LaurentCharacter.from_json(c.to_json()) == c


def test_polynomial_rejects_negative_exponents():
    with pytest.raises(ValueError):
        ch.SymPolynomial(2, {(-1, 0): 1})
