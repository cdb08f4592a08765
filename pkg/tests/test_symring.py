import random
from fractions import Fraction

import pytest

from hilbk3 import k3, symring
from hilbk3.symring import Permutation, SnClass, all_permutations, random_class, sn_action, symmetrize

CASES = 100
LOW = symring.LOW_DEGREE_LABELS


def _triples(seed, count, terms=3):
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(random_class(rng, terms=terms, labels=LOW) for _ in range(3))


def test_permutation_basics():
    p = Permutation.from_cycles(3, (1, 2, 3))
    assert p * p.inverse() == Permutation.identity(3)
    assert len(p.orbits()) == 1
    assert len(Permutation.from_cycles(3, (1, 2)).orbits()) == 2


def test_unit_is_neutral():
    rng = random.Random(5)
    one = symring.unit(3)
    for _ in range(20):
        a = random_class(rng)
        assert one * a == a
        assert a * one == a


def test_associativity():
    nonzero = 0
    for a, b, c in _triples(1, CASES):
        left = (a * b) * c
        assert left == a * (b * c)
        nonzero += not left.is_zero()
    assert nonzero > CASES // 2


def test_equivariance():
    perms = all_permutations(3)
    rng = random.Random(2)
    for a, b, _ in _triples(3, CASES):
        s = rng.choice(perms)
        assert sn_action(s, a * b) == sn_action(s, a) * sn_action(s, b)


def test_action_is_a_group_action():
    perms = all_permutations(3)
    rng = random.Random(4)
    for _ in range(30):
        a = random_class(rng)
        s, t = rng.choice(perms), rng.choice(perms)
        assert sn_action(s * t, a) == sn_action(s, sn_action(t, a))


def test_commutative_on_invariants():
    for a, b, _ in _triples(6, CASES, terms=2):
        sa, sb = symmetrize(a), symmetrize(b)
        assert symring.is_invariant(sa)
        assert sa * sb == sb * sa


def test_not_commutative_before_symmetrizing():
    # the full A{S_3} is only graded commutative up to the S_3 action
    found = False
    for a, b, _ in _triples(7, 30):
        if a * b != b * a:
            found = True
            break
    assert found


def test_pairing_adjointness():
    # <ab, c> = <a, bc> through the top-degree functional
    seen = set()
    for a, b, c in _triples(8, CASES):
        value = symring.integrate_product(a * b, c)
        assert value == symring.integrate_product(a, b * c)
        seen.add(value)
    assert len(seen) > 1


def test_integrate_product_matches_full_product():
    rng = random.Random(9)
    for _ in range(40):
        a, b = random_class(rng, terms=4, labels=LOW), random_class(rng, terms=4, labels=LOW)
        assert symring.integrate_product(a, b) == symring.integrate(a * b)


def test_point_normalization():
    ident = Permutation.identity(3)
    pt3 = SnClass.sector(ident, (k3.PT,) * 3)
    assert symring.integrate(pt3) == Fraction(1, 6)


def test_delta_sixth():
    d = symring.delta_class(3)
    d3 = d * d * d
    assert symring.integrate(d3 * d3) == -960


def test_sector_label_count_checked():
    with pytest.raises(ValueError):
        SnClass.sector(Permutation.identity(3), (0, 0))
