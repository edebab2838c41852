import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from satotate.characters import (
    ONE, ONEBAR, TWO, TWOBAR, KNTableau, LengthError, a1_character, branch_levi, crystal_op,
    dim_c2, is_admissible, kn_character, kn_enumerate, phi_set, schur, special_tableau,
    sp_char, sp_poly, weight_mult,
)
from satotate.laurent import LaurentPoly


def weyl_dim(lam, m):
    """Dimension of the Sp(2m) irreducible from the product over positive roots."""
    lam = list(lam) + [0] * (m - len(lam))
    rho = [m - i for i in range(m)]
    l = [a + r for a, r in zip(lam, rho)]
    num = den = Fraction(1)
    for i in range(m):
        num *= l[i]
        den *= rho[i]
        for j in range(i + 1, m):
            num *= (l[i] - l[j]) * (l[i] + l[j])
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    return num / den


def numeric_char(lam, xs):
    """Weyl character formula as a ratio of determinants, in floating point."""
    m = len(xs)
    lam = list(lam) + [0] * (m - len(lam))

    def alt(ex):
        return np.linalg.det(np.array([[x ** e - x ** -e for x in xs] for e in ex]))

    return alt([lam[i] + m - i for i in range(m)]) / alt([m - i for i in range(m)])


def partitions_upto(m, top):
    for lam in itertools.product(range(top + 1), repeat=m):
        if list(lam) == sorted(lam, reverse=True):
            yield lam


def test_two_column_character():
    p = sp_poly((1, 1), 2, ("t1", "t2"))
    t1, t2 = LaurentPoly.gens(("t1", "t2"))
    assert p == t1 * t2 + t1 * t2 ** -1 + t1 ** -1 * t2 + t1 ** -1 * t2 ** -1 + 1
    assert len(p.terms) == 5


def test_schur_single_tableau():
    x1, x2 = LaurentPoly.gens(("x1", "x2"))
    assert schur((2, 2), 2) == x1 ** 2 * x2 ** 2


def test_too_many_parts():
    with pytest.raises(LengthError):
        sp_char((1, 1, 1), 2)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_dimensions_match_weyl(m):
    for lam in partitions_upto(m, 3 if m < 4 else 2):
        assert sum(sp_poly(lam, m).terms.values()) == weyl_dim(lam, m)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=3),
       st.lists(st.floats(0.3, 2.5), min_size=3, max_size=3))
def test_numeric_weyl_formula(parts, xs):
    lam = sorted(parts, reverse=True)
    m = len(lam)
    xs = [x + 0.17 * i for i, x in enumerate(xs[:m])]
    if len(set(np.round(xs, 6))) < m or any(abs(x - 1) < 1e-3 for x in xs):
        return
    want = numeric_char(lam, xs)
    got = sp_poly(lam, m).evaluate(xs).real
    assert abs(got - want) <= 1e-6 * max(1, abs(want))


def test_weight_multiplicities():
    assert weight_mult(2, 2, (0, 0)) == 2
    assert weight_mult(2, 0, (0, 0)) == 2
    assert dim_c2(1, 1) == 5
    assert dim_c2(2, 0) == 10


def test_vector_crystal():
    ts = kn_enumerate(1, 0)
    assert sorted(t.rows[0][0] for t in ts) == [ONE, TWO, TWOBAR, ONEBAR]
    one = KNTableau(((ONE,), ()))
    two = crystal_op("lower", 1, one)
    assert two == KNTableau(((TWO,), ()))
    assert crystal_op("lower", 2, two) == KNTableau(((TWOBAR,), ()))
    assert crystal_op("raise", 1, one) is None


@pytest.mark.parametrize("a,b", [(2, 2), (3, 1), (4, 2), (5, 3)])
def test_tableau_counts(a, b):
    ts = kn_enumerate(a, b)
    assert len(ts) == dim_c2(a, b)
    assert all(is_admissible(t) for t in ts)
    assert kn_character(a, b) == sp_poly((a, b), 2, ("t1", "t2"))


def test_dimension_examples():
    assert len(kn_enumerate(2, 2)) == 14
    assert len(kn_enumerate(3, 1)) == 35 == weyl_dim((3, 1), 2)


def test_crystal_ops_are_inverse():
    for T in kn_enumerate(3, 1):
        for i in (1, 2):
            S = crystal_op("lower", i, T)
            if S is not None:
                assert crystal_op("raise", i, S) == T
                assert S in set(kn_enumerate(3, 1))


def test_special_tableaux_isolated():
    for k in range(3):
        T = special_tableau(4, 2, k)
        assert crystal_op("raise", 1, T) is None
        assert crystal_op("lower", 1, T) is None


def test_levi_trivial_multiplicities():
    for a in range(7):
        for b in range(a + 1):
            assert branch_levi(a, b, 1).get(0, 0) == ((a + b) % 2 == 0) * (b + 1)
            assert branch_levi(a, b, 2).get(0, 0) == a - b + 1


def test_phi_array_restriction():
    chi = sp_poly((4, 2), 2, ("t1", "t2"))
    s = LaurentPoly(("t1", "t2"))
    for p, q in phi_set(4, 2):
        s = s + a1_character(p, "t1").extend(("t1", "t2"), [0]) * a1_character(q, "t2").extend(("t1", "t2"), [1])
    assert s == chi
    assert sum(min(p, q) + 1 for p, q in phi_set(4, 2)) == 21
