from fractions import Fraction

import pytest

from hilbk3 import hodge, symring


def test_product_table():
    results = dict(hodge.verify_product_table())
    assert len(results) == 11
    assert all(results.values()), [k for k, ok in results.items() if not ok]


def test_standard_classes_invariant():
    assert all(ok for _, ok in hodge.invariance_report())


def test_middle_gram():
    half = Fraction(-1, 2)
    assert hodge.middle_gram() == ((0, half, 0), (half, 0, 0), (0, 0, -11))


def test_eta_square_two_ways():
    assert hodge.eta_squared() == -1329
    assert hodge.eta_squared_via_gram() == -1329
    assert hodge.ETA_SQUARED == -1329


def test_eta_is_invariant():
    assert symring.is_invariant(hodge.eta())


def test_eta_pairs_with_decomposables():
    # η is not orthogonal to δ^3; the honest complement is computed instead
    p = hodge.eta_pairings()
    assert p["eta.delta^3"] == 960
    d3 = hodge.uvw_coordinates(hodge.products()["delta^3"])
    dp = hodge.uvw_coordinates(hodge.products()["delta*P"])
    vec, square = hodge.orthogonal_complement([d3, dp])
    assert vec in ((22, -11, 1), (-22, 11, -1))
    assert square == 231


def test_v_minus_w_decomposable():
    s = hodge.standard_classes()
    prods = hodge.products()
    lhs = s.V - s.W
    rhs = (prods["delta^3"] + prods["delta*P"].scale(16)).scale(Fraction(1, 8))
    assert lhs == rhs


def test_uvw_round_trip():
    for coords in ((1, 0, 0), (2, -1, 11), (0, 3, -5)):
        assert hodge.uvw_coordinates(hodge.from_uvw(coords)) == coords


def test_uvw_rejects_outside_span():
    with pytest.raises(ValueError):
        hodge.uvw_coordinates(hodge.standard_classes().P)


def test_point_cube_integral():
    assert symring.integrate(hodge.point_cube()) == Fraction(1, 6)
    assert symring.integrate(hodge.products()["U*V"]) == Fraction(-1, 2)
