import json
import math
from fractions import Fraction

import numpy as np
import pytest

from satotate import atlas as at
from satotate import matrices as mx
from satotate.characters import sp_poly
from satotate.coeffs import ALL_GROUPS, PARTIAL, theta
from satotate.laurent import LaurentPoly

xu = ("x", "u")
X, U = LaurentPoly.gens(xu)


def test_functionals():
    assert at.U1(0) == 1 and at.U1(3) == 0
    assert at.SU2(2) == Fraction(-1, 2)
    (z,) = LaurentPoly.gens(("z",))
    p = (z + z ** -1) ** 4
    assert sum(c * at.SU2(e) for e, c in p.terms.items()) == 2


def test_su2_functional_against_quadrature():
    th = np.linspace(0, np.pi, 20001)
    dens = 2 / np.pi * np.sin(th) ** 2
    for k in range(-6, 7):
        num = np.trapezoid(np.cos(k * th) * dens, th)
        assert abs(num - float(at.SU2(k))) < 1e-6


def test_usp4_functional_against_quadrature():
    f = at.USp2g(2)
    t = np.linspace(0, np.pi, 401)
    a, b = np.meshgrid(t, t)
    w = (np.cos(a) - np.cos(b)) ** 2 * np.sin(a) ** 2 * np.sin(b) ** 2
    w /= np.trapezoid(np.trapezoid(w, t), t)
    for e in [(0, 0), (2, 0), (1, 1), (2, 2), (4, 0)]:
        num = np.trapezoid(np.trapezoid(np.cos(e[0] * a) * np.cos(e[1] * b) * w, t), t)
        assert abs(num - float(f(e))) < 1e-4


def test_coset_determinants():
    tor = at._TORI["C1"][1]
    assert at.coset_det_symbolic(mx.J, tor, ("u",)) == 1 - 2 * X ** 2 + X ** 4
    jz4 = mx.mul(mx.J, mx.zeta_2n(2))
    assert at.coset_det_symbolic(jz4, tor, ("u",)) == 1 + 2 * X ** 2 + X ** 4
    want = (1 + X ** 2 * U ** 2) * (1 + X ** 2 * U ** -2)
    assert at.coset_det_symbolic(mx.QJ, tor, ("u",)) == want


def test_generators_in_usp4():
    for g in (mx.J, mx.QI, mx.QJ, mx.QW, mx.Q8, mx.A_, mx.B_, mx.C_, mx.zeta_2n(3)):
        assert mx.is_unitary(g) and mx.is_symplectic(g)
    assert len(mx.closure([mx.QI, mx.QJ, mx.QW])) == 24


def test_c2_components():
    a = at.components("C2")
    assert [c.weight for c in a.components] == [Fraction(1, 2)] * 2
    assert all(c.params[0][1] == at.U1 for c in a.components)


def test_octahedral_weights():
    w = sorted(c.weight for c in at.components("O").components)
    assert w == sorted(Fraction(k, 48) for k in (2, 18, 16, 12))


@pytest.mark.parametrize("H", ALL_GROUPS)
def test_weights_sum_to_one(H):
    assert at.components(H, derived=True).total_weight() == 1


def test_partial_groups_need_derived():
    for H in PARTIAL:
        with pytest.raises(at.PartialAtlas):
            at.integrate_char(H, 2, 0)
        assert at.integrate_char(H, 0, 0, derived=True) == 1


def test_integrate_char_examples():
    assert at.integrate_char("C1", 2, 0) == 4
    for b in range(7):
        for z in range((6 - b) // 2 + 1):
            assert at.integrate_char("JC1", b + 2 * z, b) == theta(1, z, b)


def test_small_autocorrelations():
    (x,) = LaurentPoly.gens(("x1",))
    assert at.autocorr_lhs("NU1", 1) == 1 + x ** 2
    # U(1) average of (1 + x u)^2 (1 + x/u)^2
    assert at.autocorr_lhs("C1", 1) == 1 + 4 * x ** 2 + x ** 4


def test_usp2_autocorrelation():
    (x,) = LaurentPoly.gens(("x1",))
    assert at.autocorr_lhs("USp2", 1) == x * sp_poly((1,), 1, ("x1",))


def test_autocorr_numeric_u1():
    # direct quadrature over the circle for C_1 at m = 2
    th = np.linspace(0, 2 * np.pi, 4096, endpoint=False)
    u = np.exp(1j * th)
    xs = (0.4, 0.9)
    vals = np.ones_like(u)
    for x in xs:
        vals *= (1 + x * u) ** 2 * (1 + x / u) ** 2
    want = vals.mean().real
    assert math.isclose(at.autocorr_lhs("C1", 2).evaluate(xs).real, want, rel_tol=1e-12)


def test_json_dump():
    d = json.loads(at.dump_json("Fc"))
    assert d["group"] == "Fc" and d["cosets"] == 2
    assert sum(Fraction(c["weight"]) for c in d["components"]) == 1
    d = json.loads(at.dump_json("NG3,3", derived=True))
    assert d["exactness"] == "partial"
    assert any(c["derived"] for c in d["components"])


def test_higher_rank_usp():
    assert at.parse_group("USp(6)") == "USp6"
    assert [at.power_moment("USp6", 1, m) for m in range(7)] == [1, 0, 1, 0, 3, 0, 15]
