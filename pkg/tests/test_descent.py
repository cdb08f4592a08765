from fractions import Fraction
from math import isqrt

import pytest

from hilbk3 import curve as ec
from hilbk3 import descent
from hilbk3.local import REAL


def _sqrt(x):
    x = Fraction(x)
    r = Fraction(isqrt(x.numerator), isqrt(x.denominator))
    assert r * r == x
    return r


def test_torsor_spec_validation():
    with pytest.raises(ValueError):
        descent.TorsorSpec(4)
    with pytest.raises(ValueError):
        descent.TorsorSpec(7)
    with pytest.raises(ValueError):
        descent.TorsorSpec(1, kind="D")


def test_known_points_on_torsors():
    assert descent.TorsorSpec(11 * 13).has_point(0, 2 * 5 * 11 * 443)
    z = _sqrt(ec.P.x / 2)
    w = ec.P.y / _sqrt(2 * ec.P.x)
    assert descent.TorsorSpec(2).has_point(z, w)
    # multiplying by (2x)^(1/2) instead misses the curve
    assert not descent.TorsorSpec(2).has_point(z, ec.P.y * _sqrt(2 * ec.P.x))


def test_known_images():
    c, cp = descent.known_images()
    assert {k.delta for k in c} == {1, 143, 2}
    assert {k.delta for k in cp} == {1, -14351}


def test_local_obstructions():
    # 5 | δ dies at 113 since (5/113) = -1; negative δ dies at the real place
    assert not descent.quartic_solvable_padic(descent.TorsorSpec(5), 113)
    assert not descent.quartic_solvable_padic(descent.TorsorSpec(-1), REAL)
    assert descent.quartic_solvable_padic(descent.TorsorSpec(2), 2)


def test_survey(survey):
    c, cp = survey
    assert c.survivors == {1, 2, 143, 286}
    assert cp.survivors == {1, -14351}
    assert len(c.local_survivors) == 16
    assert all(d > 0 and d % 5 for d in c.local_survivors)
    assert c.survivors == c.known


def test_two_selmer(survey):
    assert descent.two_selmer_rank(*survey) == (4, 1)


def test_ladders_obstructed(ladders):
    assert [lad.delta for lad in ladders] == [11, 443, 4873]
    for lad in ladders:
        delta = lad.delta
        assert lad.obstructed, delta
        assert set(lad.obstructions) == set(lad.epsilons)
        assert descent.conic_holds(delta, lad.u0, lad.w0, lad.t)


def test_saturation(saturation):
    assert saturation.candidates == 192
    assert saturation.passing == (ec.P.x,)
    assert saturation.ok


def test_unknown_ladder_seed():
    with pytest.raises(ValueError):
        descent.epsilon_ladder(13)
