import pytest

from schurkit.polymod import core
from schurkit.polymod.complexes import (build_K, build_L, build_M, build_Mprime, build_R, check_complex,
                                        complex_cohomology)
from schurkit.polymod.functors import forms, hook_module
from schurkit.schuralg import build_schur_algebra

BUILDERS = [(build_R, "F"), (build_K, "F"), (build_M, "W"), (build_L, "W")]


@pytest.fixture(scope="module", params=[(3, 2), (5, 3)], ids=lambda x: f"p{x[0]}n{x[1]}")
def A(request):
    p, n = request.param
    return build_schur_algebra(n, p, p)


@pytest.mark.parametrize("build,kind", BUILDERS, ids=["R", "K", "M", "L"])
def test_resolutions(A, build, kind):
    for i in range(A.n):
        C = build(A, i)
        assert check_complex(C, elements=A.chevalley_generators())
        H = complex_cohomology(C)
        assert all(h.dim == 0 for h in H[1:])
        assert core.iso_test(H[0], hook_module(A, kind, i))


def test_euler_characteristic(A):
    for i in range(A.n):
        C = build_K(A, i)
        alt = sum((-1) ** k * M.dim for k, M in enumerate(C.modules))
        assert alt == hook_module(A, "F", i).dim


def test_identities_between_differentials(A):
    f = forms(A)
    for i in range(1, A.d):
        # kappa d + d kappa multiplies by the total degree p
        h = f.kappa[i + 1].compose(f.d[i]) + f.d[i - 1].compose(f.kappa[i])
        assert h.is_zero()


def test_top_truncation_over_bigger_algebra():
    Am = build_schur_algebra(3, 3, 3)
    C0 = build_Mprime(Am, 2, 0)
    assert [M.dim for M in C0.modules] == [18, 8]
    assert C0.check_d2()
    assert [h.dim for h in complex_cohomology(C0)] == [11, 1]
    assert [M.dim for M in build_Mprime(Am, 2, 1).modules] == [8]
    with pytest.raises(ValueError):
        build_Mprime(Am, 3, 0)
