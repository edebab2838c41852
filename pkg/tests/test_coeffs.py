from fractions import Fraction

import pytest

from satotate.coeffs import (
    ALL_GROUPS, GENUS2, PARTIAL, BadIndex, UnknownGroup, canonical, eta, genus1_m, m_coeff,
    psi, table1_csv, theta, tilde, xi,
)

ZB = [(z, b) for z in range(13) for b in range(13)]


def test_family_values():
    assert eta(1, 0, 0) == 1
    assert eta(3, 1, 1) == eta(3, 4, 4) == -1
    assert eta(2, 0, 2) == 2
    assert psi(1, 1, 1) == -5
    assert psi(2, 1, 2) == -3
    assert psi(4, 1, 1) == 1
    assert theta(1, 1, 1) == 3
    assert theta(2, 0, 0) == 1
    assert theta(6, 0, 2) == 2
    assert xi(1, 0, 2) == 2
    assert xi(2, 0, 1) == 1
    assert xi(2, 1, 3) == 0


def test_averaged_families():
    for z, b in ZB[:60]:
        assert tilde("eta", 2, z, b) == (eta(1, z, b) + eta(2, z, b)) / 2
        assert tilde("theta", 1, z, b) == theta(1, z, b)
    assert tilde("psi", 6, 0, 0) == 1


def test_theta_is_mean_of_eta_psi():
    for n in (1, 2, 3, 4, 6):
        for z, b in ZB:
            assert theta(n, z, b) == (eta(n, z, b) + psi(n, z, b)) / 2


def test_bad_index():
    with pytest.raises(BadIndex):
        eta(5, 0, 0)


# a few rows written out directly from their closed forms
ROWS = {
    "USp4": lambda z, b: int(z == b == 0),
    "E1": lambda z, b: b + 1,
    "E3": lambda z, b: b // 3 + 1 - (b % 3 == 1),
    "G1,3": lambda z, b: 1,
    "NG1,3": lambda z, b: int(z % 2 == 0),
    "G3,3": lambda z, b: int(z == 0),
    "NG3,3": lambda z, b: int(z == 0 and b % 2 == 0),
    "C1": lambda z, b: (b + 1) * (z * z + z * b + 2 * z + Fraction(b, 2) + 1),
    "F": lambda z, b: z * (b + 1) + b // 2 + 1,
}


@pytest.mark.parametrize("H", sorted(ROWS))
def test_rows(H):
    for z, b in ZB:
        assert m_coeff(H, z, b) == ROWS[H](z, b)


def test_integrality_all_groups():
    for H in GENUS2:
        for z, b in ZB:
            v = m_coeff(H, z, b)
            assert v.denominator == 1 and v >= 0, (H, z, b, v)


def test_genus1():
    assert genus1_m("U1", 5) == 1
    assert genus1_m("USp2", 1) == 0
    assert genus1_m("NU1", 2) == 1


def test_aliases():
    assert canonical("J(C_2)") == "JC2"
    assert canonical("F_{a,b,c}") == canonical("Fabc") == "Fa,b,c"
    assert canonical("N(G_{3,3})") == "NG3,3"
    assert set(PARTIAL) < set(ALL_GROUPS)
    assert len(GENUS2) == 57
    with pytest.raises(UnknownGroup):
        canonical("Q7")


def test_csv():
    lines = table1_csv(["USp4"], 3).strip().splitlines()
    assert lines[0] == "group,z,b,value"
    ones = [l for l in lines[1:] if l.endswith(",1/1")]
    assert ones == ["USp4,0,0,1/1"]
