import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from satotate.exactnum import zeta_pow
from satotate.laurent import (
    LaurentPoly, NotDivisible, elementary, lp_div_binomial, lp_exact_div, prod,
)

V = ("x", "y")
x, y = LaurentPoly.gens(V)

terms = st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                        st.integers(-4, 4), max_size=6)


def poly(t):
    return LaurentPoly(V, t)


def test_one_variable_division():
    (t,) = LaurentPoly.gens(("x",))
    q = lp_exact_div(t ** 3 - t ** -3, t - t ** -1)
    assert q == t ** 2 + 1 + t ** -2


def test_not_divisible():
    (t,) = LaurentPoly.gens(("x",))
    with pytest.raises(NotDivisible):
        lp_exact_div(t + t ** -1, t + 1)


@given(terms, terms)
def test_ring_axioms(a, b):
    p, q = poly(a), poly(b)
    assert p * q == q * p
    assert (p + q) - q == p
    assert p * (q + 1) == p * q + p


@settings(max_examples=60)
@given(terms, terms)
def test_division_undoes_multiplication(a, b):
    p, q = poly(a), poly(b)
    if q.is_zero():
        return
    assert lp_exact_div(p * q, q) == p


@given(terms)
def test_binomial_division(a):
    p = poly(a)
    d = p * (1 - x * y ** -1) * x
    assert lp_div_binomial(d, (1, 0), (1, -1)) == p


@given(terms)
def test_evaluate_is_a_ring_map(a):
    p = poly(a)
    pt = (0.7 + 0.2j, -1.3)
    assert abs((p * p).evaluate(pt) - p.evaluate(pt) ** 2) < 1e-6 * (1 + abs(p.evaluate(pt)) ** 2)


def test_cyclotomic_coefficients():
    p = x * zeta_pow(12) + zeta_pow(-12)
    assert (p * p).coeff((2, 0)) == -1
    assert (p * p).coeff((1, 0)) == 2


def test_substitute_and_extend():
    p = x ** 2 + y ** -1
    q = p.substitute([y, x], V)
    assert q == y ** 2 + x ** -1
    e = p.extend(("x", "z", "y"), [0, 2])
    assert e.coeff((0, 0, -1)) == 1


def test_elementary_matches_product_expansion():
    r = random.Random(3)
    ps = [poly({(r.randint(-2, 2), r.randint(-2, 2)): r.randint(1, 3)}) + 1 for _ in range(4)]
    t = LaurentPoly.gens(("x", "y", "s"))[2]
    lifted = [p.extend(("x", "y", "s"), [0, 1]) * t + 1 for p in ps]
    full = prod(lifted, ("x", "y", "s"))
    for k in range(5):
        ek = elementary(ps, k, V).extend(("x", "y", "s"), [0, 1])
        got = LaurentPoly(full.vars, {e: c for e, c in full.terms.items() if e[2] == k})
        assert got == ek * t ** k


def test_json_round_trip():
    p = x * Fraction(1, 3) - y ** -2 * zeta_pow(5)
    assert LaurentPoly.from_json(p.to_json()) == p
