import random
from fractions import Fraction

import pytest

from hilbk3.arith import is_square_qp
from hilbk3.local import REAL, form_from_quartic, solvable

DEPTH = {2: 7, 3: 4, 5: 3, 7: 3}


def _value(form, x, y):
    d = len(form) - 1
    return sum(c * x**i * y ** (d - i) for i, c in enumerate(form))


def _local_square(v, place):
    if v == 0:
        return True
    return v > 0 if place == REAL else is_square_qp(v, place)


def brute(forms, p):
    """Look for (X : Y) in Z x {1} or {1} x pZ making every form a Q_p square.

    Every hit is an honest local point, so a hit can never be wrong.
    """
    K = DEPTH[p]
    for t in range(p**K):
        if all(_local_square(_value(f, t, 1), p) for f in forms):
            return True
    for s in range(p ** (K - 1)):
        if all(_local_square(_value(f, 1, p * s), p) for f in forms):
            return True
    return False


def _random_quartic(rng):
    while True:
        c = [rng.randint(-30, 30) for _ in range(5)]
        if c[4] or c[3]:
            return form_from_quartic(c)


def _random_pair(rng):
    return [tuple(rng.randint(-12, 12) for _ in range(3)) for _ in range(2)]


def test_quartic_solver_matches_brute_force():
    rng = random.Random(0)
    outcomes = set()
    for _ in range(300):
        form = _random_quartic(rng)
        p = rng.choice(sorted(DEPTH))
        got = solvable([form], p).solvable
        assert got == brute([form], p), (form, p)
        outcomes.add(got)
    assert outcomes == {True, False}


def test_pair_solver_matches_brute_force():
    rng = random.Random(1)
    outcomes = set()
    for _ in range(200):
        forms = _random_pair(rng)
        if any(not any(f) for f in forms):
            continue
        p = rng.choice((3, 5, 7))
        got = solvable(forms, p).solvable
        assert got == brute(forms, p), (forms, p)
        outcomes.add(got)
    assert outcomes == {True, False}


def test_real_solver_matches_sampling():
    rng = random.Random(2)
    grid = [Fraction(k, 8) for k in range(-400, 401)]
    for _ in range(100):
        form = _random_quartic(rng)
        sampled = form[-1] >= 0 or any(_value(form, t, 1) >= 0 for t in grid)
        got = solvable([form], REAL).solvable
        if sampled:
            assert got
        # a False from the solver must survive the sampling
        if not got:
            assert not sampled


def test_rational_point_means_solvable_everywhere():
    # W^2 = G(z) with G(z0) a rational square for a known z0
    rng = random.Random(3)
    for _ in range(40):
        z0, w0 = rng.randint(-5, 5), rng.randint(1, 9)
        c = [rng.randint(-9, 9) for _ in range(5)]
        c[0] += w0 * w0 - sum(ci * z0**i for i, ci in enumerate(c))
        if not (c[4] or c[3]):
            continue
        form = form_from_quartic(c)
        for place in (REAL, 2, 3, 5, 7, 11):
            assert solvable([form], place).solvable, (c, place)


def test_classic_obstruction():
    # Lind's curve 2w^2 = X^4 - 17 Y^4, as W^2 = 2X^4 - 34 Y^4 with W = 2w
    lind = form_from_quartic([-34, 0, 0, 0, 2])
    for place in (REAL, 2, 17):
        assert solvable([lind], place).solvable
    # 3(X^4 + Y^4) has odd 3-adic valuation for coprime X, Y
    assert not solvable([form_from_quartic([3, 0, 0, 0, 3])], 3).solvable
    assert not solvable([form_from_quartic([-1, 0, 0, 0, -1])], REAL).solvable


def test_odd_degree_rejected():
    with pytest.raises(ValueError):
        solvable([(1, 0, 1, 0)], 3)
