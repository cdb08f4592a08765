import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbk3 import enumerative as en


def test_goettsche_low_n():
    assert en.goettsche_q(1) == [1, 22]
    assert en.goettsche_q(2) == [1, 23, 276]
    assert en.goettsche_q(3) == [1, 23, 299, 2554]


def test_poincare_palindromic_and_euler():
    # χ(S^[n]) from η-type counts: 1, 24, 324, 3200, 25650
    for n, chi in ((1, 24), (2, 324), (3, 3200), (4, 25650)):
        p = en.poincare_polynomial(n)
        assert p == p[::-1]
        assert sum(p) == chi


def test_verbitsky_cokernels():
    v = en.verbitsky_counts()
    assert v.cokernel[(2, 2)] == 0
    assert (v.cokernel[(2, 3)], v.cokernel[(3, 3)]) == (23, 254)


def test_weyl_dimensions():
    r = en.RANK_X
    w = en.weight
    assert [en.weyl_dim_odd(w(*lam), r) for lam in ((1,), (2,), (1, 1), (3,))] == [23, 275, 253, 2277]
    assert [en.weyl_dim_even(w(*lam), r) for lam in ((1,), (2,), (3,))] == [22, 252, 2002]
    assert en.weyl_dim_odd(w(), r) == 1


def test_small_groups():
    # SO(3) = spin j, SO(4) = SU(2) x SU(2), SO(5) adjoint
    assert [en.weyl_dim_odd((k,), 1) for k in range(4)] == [1, 3, 5, 7]
    assert en.weyl_dim_even((1, 1), 2) == 3
    assert en.weyl_dim_even((1, 0), 2) == 4
    assert en.weyl_dim_odd((1, 1), 2) == 10


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_branching_identity(a, b, c):
    lam = sorted((a, b, c), reverse=True)
    odd, total = en.branching_identity(lam, 3)
    assert odd == total


def test_branching_examples():
    r = en.RANK_X
    assert en.branching_identity(en.weight(1), r) == (23, 23)
    assert en.branching_identity(en.weight(2), r) == (275, 275)
    assert en.branching_identity(en.weight(3), r) == (2277, 2277)


def test_decompositions():
    a3 = en.decomposition_audit(3)
    assert a3.ok
    assert (a3.dims[2], a3.dims[3]) == (299, 2554)
    assert a3.trivial == {1: 0, 2: 1, 3: 1}
    assert en.decomposition_audit(2).dims[2] == 276


def test_weight_validation():
    with pytest.raises(ValueError):
        en.weyl_dim_odd((0, 1), 2)
    with pytest.raises(ValueError):
        en.poincare_polynomial(7)
