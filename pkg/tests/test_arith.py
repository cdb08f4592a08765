from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hilbk3.arith import (
    factorint,
    from_factors,
    is_prime,
    is_square,
    is_square_qp,
    legendre,
    squarefree_part,
    trial_factor,
    valuation,
)

PRIMES = [3, 5, 7, 11, 13, 113, 127, 443]


@given(st.integers(1, 10**9), st.integers(1, 10**9), st.sampled_from(PRIMES))
def test_legendre_multiplicative(a, b, p):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@given(st.integers(0, 442))
def test_legendre_matches_euler(a):
    want = pow(a, 221, 443)
    want = -1 if want == 442 else want
    assert legendre(a, 443) == want


@given(st.integers(-(10**12), 10**12).filter(lambda n: n != 0))
def test_factor_round_trip(n):
    f = factorint(n)
    assert all(is_prime(p) for p in f)
    assert from_factors(f, 1 if n > 0 else -1) == n


def test_trial_factor_leaves_cofactor():
    big = 1000003 * 1000033
    f, rest = trial_factor(7 * big, bound=1000)
    assert f == {7: 1}
    assert rest == big


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_valuation_additive(a, b):
    for p in (2, 3, 7):
        assert valuation(a * b, p) == valuation(a, p) + valuation(b, p)
        assert valuation(Fraction(a, b), p) == valuation(a, p) - valuation(b, p)


@given(st.integers(-(10**6), 10**6).filter(lambda n: n != 0))
def test_squarefree_part_class(n):
    s = squarefree_part(n)
    assert is_square(Fraction(n, s))


@settings(max_examples=200)
@given(st.integers(1, 5000), st.sampled_from([2, 3, 5, 7]))
def test_squares_are_local_squares(n, p):
    assert is_square_qp(n * n, p)
    assert is_square_qp(Fraction(1, n * n), p)


def test_known_local_classes():
    assert not is_square_qp(5, 2)  # 5 = 5 mod 8
    assert is_square_qp(17, 2)
    assert not is_square_qp(2, 3)
    assert not is_square_qp(3, 3)
    assert is_square_qp(7, 3)
