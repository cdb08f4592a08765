import pytest

from hilbk3 import curve as ec
from hilbk3 import integral


def test_base_certificates():
    certs = integral.certificate_base_cases()
    assert [c.check() for c in certs] == [True] * 3
    assert certs[0].e == 7**2 * 41 * 71 * 193
    assert certs[1].e == 3 * 83 * 6481
    assert certs[2].e % 79 == 0
    assert [w[0][0] for w in (c.witnesses for c in certs)] == [7, 3, 79]


def test_seven_divides_all_multiples():
    for n in range(1, 8):
        assert ec.multiply(n, ec.P).e % 7 == 0


def test_mod7_pattern():
    pat = integral.mod7_pattern(4)
    assert pat.ok
    assert all(pat.alpha_mod7[j] in (3, 4) for j in (2, 3, 4))
    assert pat.step_exact == {2: True, 3: True}


def test_closing_remark():
    remark = integral.closing_remark()
    assert all(remark.values()), remark


def test_four_p_good_reduction():
    four = integral.doubling_tower(2)[2]
    for p in integral.BAD_AT_ORIGIN + integral.MULTIPLICATIVE:
        assert integral.nonsingular_reduction(four, p)


def test_prime_q():
    cert = integral.prime_q_argument(2)
    assert cert.status == "pass"
    assert cert.q == 67
    assert cert.q % 7 != 1
    assert cert.divides_e_plus_q


def test_prime_q_higher_levels_by_residue():
    # no factor below the trial bound; the cofactor residue mod 7 still shows some q exists
    tower = integral.doubling_tower(4)
    for i in (3, 4):
        cert = integral.prime_q_argument(i, tower)
        assert cert.status == "premises-verified"
        assert cert.q == 0
        assert cert.cofactor_mod7 not in (0, 1)
        assert cert.cofactor_coprime_to_bad
        assert cert.divides_e_plus_q


def test_bounded_scan():
    scan = integral.bounded_scan(6)
    assert scan.z_half_points == [(0, 1)]
    assert scan.ok


def test_scan_bound_limit():
    with pytest.raises(ValueError):
        integral.bounded_scan(13)
    with pytest.raises(ValueError):
        integral.doubling_tower(6)
