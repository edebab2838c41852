"""Characters of Sp(2m) and GL(m) as exact Laurent polynomials.

The symplectic character is the bialternant
    det(x_i^(l_j) - x_i^(-l_j)) / det(x_i^(m-j+1) - x_i^(-(m-j+1))),  l_j = lam_j + m - j + 1.
The denominator is never expanded: it equals
    prod_i (x_i - 1/x_i) * prod_{i<j} (x_i + 1/x_i - x_j - 1/x_j)
and the numerator is divided by one factor at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .laurent import LaurentPoly, Packer, lp_div_binomial, packed_div_binomial
from .partitions import Partition


class LengthError(ValueError):
    pass


def default_vars(m: int, name: str = "x") -> tuple:
    return tuple(f"{name}{i}" for i in range(1, m + 1))


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, n = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            if n % 2 == 0:
                sign = -sign
    return sign


def _sym_alternant(ls, m: int) -> dict:
    # det(x_i^(l_j) - x_i^(-l_j)) expanded; all monomials are distinct
    terms = {}
    for p in permutations(range(m)):
        s = _perm_sign(p)
        row = [ls[p[i]] for i in range(m)]
        for eps in product((1, -1), repeat=m):
            c = s
            for v in eps:
                if v < 0:
                    c = -c
            terms[tuple(e * l for e, l in zip(eps, row))] = c
    return terms


def weyl_denominator_factors(m: int, vars=None) -> list:
    vars = vars or default_vars(m)
    xs = LaurentPoly.gens(vars)
    inv = [x ** -1 for x in xs]
    facs = [xs[i] - inv[i] for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            facs.append(xs[i] + inv[i] - xs[j] - inv[j])
    return facs


@dataclass(frozen=True)
class SpCharacter:
    lam: Partition
    m: int
    poly: LaurentPoly


@lru_cache(maxsize=None)
def _sp_char_poly(lam: tuple, m: int) -> LaurentPoly:
    vars = default_vars(m)
    if not lam:
        return LaurentPoly.const(vars, 1)
    padded = tuple(lam) + (0,) * (m - len(lam))
    ls = [padded[j] + m - j for j in range(m)]
    pk = Packer(m, max(ls) + 2)
    terms = {pk.pack(e): c for e, c in _sym_alternant(ls, m).items()}
    for shift, d in _denominator_binomials(m):
        terms = packed_div_binomial(terms, pk, shift, d)
    return LaurentPoly(vars, {pk.unpack(k): v for k, v in terms.items()}, True)


def _unit(m, i, k=1):
    return tuple(k if j == i else 0 for j in range(m))


def _denominator_binomials(m: int) -> list:
    # x_i + 1/x_i - x_j - 1/x_j = x_i (1 - x_j/x_i) (1 - 1/(x_i x_j)),
    # x_i - 1/x_i = x_i (1 - x_i^-2); divided in this order the
    # intermediate quotients stay small
    zero = (0,) * m
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            out.append((_unit(m, i), tuple(-a + b for a, b in zip(_unit(m, i), _unit(m, j)))))
            out.append((zero, tuple(-a - b for a, b in zip(_unit(m, i), _unit(m, j)))))
    for i in range(m):
        out.append((_unit(m, i), _unit(m, i, -2)))
    return out


def sp_char(lam, m: int, vars=None) -> SpCharacter:
    lam = Partition(lam)
    if len(lam) > m:
        raise LengthError(f"{tuple(lam)} has more than {m} parts")
    p = _sp_char_poly(tuple(lam), m)
    if vars is not None:
        p = p.rename(vars)
    return SpCharacter(lam, m, p)


def sp_poly(lam, m: int, vars=None) -> LaurentPoly:
    return sp_char(lam, m, vars).poly


@lru_cache(maxsize=None)
def _schur_poly(lam: tuple, m: int) -> LaurentPoly:
    vars = default_vars(m)
    padded = tuple(lam) + (0,) * (m - len(lam))
    ls = [padded[j] + m - 1 - j for j in range(m)]
    terms = {}
    for p in permutations(range(m)):
        terms[tuple(ls[p[i]] for i in range(m))] = _perm_sign(p)
    num = LaurentPoly(vars, terms, True)
    for i in range(m):
        for j in range(i + 1, m):
            num = lp_div_binomial(num, _unit(m, i), tuple(-a + b for a, b in zip(_unit(m, i), _unit(m, j))))
    return num


def schur(lam, m: int, vars=None) -> LaurentPoly:
    lam = Partition(lam)
    if len(lam) > m:
        raise LengthError(f"{tuple(lam)} has more than {m} parts")
    p = _schur_poly(tuple(lam), m)
    return p.rename(vars) if vars is not None else p


def dim_c2(a: int, b: int) -> int:
    return (a - b + 1) * (b + 1) * (a + 2) * (a + b + 3) // 6


def weight_mult(a: int, b: int, mu) -> int:
    return sp_poly((a, b), 2, ("t1", "t2")).coeff(tuple(mu))


# ---------------------------------------------------------------------------
# Kashiwara-Nakashima tableaux for C2.  Letters 1 < 2 < 2bar < 1bar are
# encoded as 1, 2, 3, 4.

ONE, TWO, TWOBAR, ONEBAR = 1, 2, 3, 4
LETTERS = {1: "1", 2: "2", 3: "2b", 4: "1b"}
_WEIGHT = {1: (1, 0), 2: (0, 1), 3: (0, -1), 4: (-1, 0)}


@dataclass(frozen=True)
class KNTableau:
    rows: tuple  # (row1, row2), each a tuple of letters

    @property
    def shape(self) -> tuple:
        return (len(self.rows[0]), len(self.rows[1]))

    def weight(self) -> tuple:
        w1 = w2 = 0
        for row in self.rows:
            for x in row:
                d = _WEIGHT[x]
                w1 += d[0]
                w2 += d[1]
        return (w1, w2)

    def columns(self) -> list:
        r1, r2 = self.rows
        return [(r1[j], r2[j]) if j < len(r2) else (r1[j],) for j in range(len(r1))]

    def __str__(self):
        return " / ".join(" ".join(LETTERS[x] for x in row) for row in self.rows if row)


def is_admissible(T: KNTableau) -> bool:
    r1, r2 = T.rows
    if len(r2) > len(r1):
        return False
    if any(r1[j] > r1[j + 1] for j in range(len(r1) - 1)):
        return False
    if any(r2[j] > r2[j + 1] for j in range(len(r2) - 1)):
        return False
    for j in range(len(r2)):
        if r1[j] >= r2[j]:
            return False
        if r1[j] == ONE and r2[j] == ONEBAR:
            return False
    for j in range(len(r2) - 1):
        # (2 2 / * 2bar) and (2 * / 2bar 2bar) are forbidden
        if r1[j] == TWO and r1[j + 1] == TWO and r2[j + 1] == TWOBAR:
            return False
        if r1[j] == TWO and r2[j] == TWOBAR and r2[j + 1] == TWOBAR:
            return False
    return True


def _weak_rows(length: int):
    # weakly increasing words of a given length over {1,2,3,4}
    def rec(start, n):
        if n == 0:
            yield ()
            return
        for x in range(start, 5):
            for rest in rec(x, n - 1):
                yield (x,) + rest
    return list(rec(1, length))


@lru_cache(maxsize=None)
def _kn_enumerate(a: int, b: int) -> tuple:
    out = []
    rows1 = _weak_rows(a)
    rows2 = _weak_rows(b)
    for r1 in rows1:
        for r2 in rows2:
            T = KNTableau((r1, r2))
            if is_admissible(T):
                out.append(T)
    return tuple(out)


def kn_enumerate(a: int, b: int) -> list:
    if not a >= b >= 0:
        raise ValueError("need a >= b >= 0")
    return list(_kn_enumerate(a, b))


def kn_character(a: int, b: int, vars=("t1", "t2")) -> LaurentPoly:
    t = {}
    for T in _kn_enumerate(a, b):
        w = T.weight()
        t[w] = t.get(w, 0) + 1
    return LaurentPoly(vars, t)


def far_eastern_reading(T: KNTableau) -> list:
    """Columns from right to left, each read top to bottom; returns (letter, row, col)."""
    out = []
    cols = T.columns()
    for j in range(len(cols) - 1, -1, -1):
        for r, x in enumerate(cols[j]):
            out.append((x, r, j))
    return out


# signature contributions: +1 means f_i can act, -1 means e_i can act
_SIG = {
    1: {ONE: 1, TWO: -1, TWOBAR: 1, ONEBAR: -1},
    2: {ONE: 0, TWO: 1, TWOBAR: -1, ONEBAR: 0},
}
_LOWER = {1: {ONE: TWO, TWOBAR: ONEBAR}, 2: {TWO: TWOBAR}}
_RAISE = {1: {TWO: ONE, ONEBAR: TWOBAR}, 2: {TWOBAR: TWO}}


def crystal_op(direction: str, i: int, T: KNTableau):
    """Kashiwara operator e_i ('raise') or f_i ('lower'); None if it vanishes."""
    word = far_eastern_reading(T)
    # cancel (+, -) pairs, + to the left of -
    stack_plus = []
    minus = []
    for pos, (x, _, _) in enumerate(word):
        s = _SIG[i][x]
        if s > 0:
            stack_plus.append(pos)
        elif s < 0:
            if stack_plus:
                stack_plus.pop()
            else:
                minus.append(pos)
    if direction == "lower":
        if not stack_plus:
            return None
        pos = stack_plus[0]
        table = _LOWER[i]
    elif direction == "raise":
        if not minus:
            return None
        pos = minus[-1]
        table = _RAISE[i]
    else:
        raise ValueError("direction must be 'raise' or 'lower'")
    x, r, j = word[pos]
    rows = [list(T.rows[0]), list(T.rows[1])]
    rows[r][j] = table[x]
    return KNTableau((tuple(rows[0]), tuple(rows[1])))


def special_tableau(a: int, b: int, k: int) -> KNTableau:
    """T_k: row 1 = (1^k, 2^z, 2bar^y), row 2 = (2^k, 1bar^(b-k)), a+b even."""
    if (a + b) % 2 or not 0 <= k <= b:
        raise ValueError("need a+b even and 0 <= k <= b")
    z = (a - b) // 2
    y = (a + b) // 2 - k
    r1 = (ONE,) * k + (TWO,) * z + (TWOBAR,) * y
    r2 = (TWO,) * k + (ONEBAR,) * (b - k)
    return KNTableau((r1, r2))


# ---------------------------------------------------------------------------
# Levi branching by specialisation and peeling

def peel_a1(p: LaurentPoly) -> dict:
    """Decompose a one-variable character into irreducible A1 characters."""
    rem = dict(p.terms)
    out = {}
    while rem:
        n = max(e[0] for e in rem)
        c = rem[(n,)]
        if n < 0 or c < 0:
            raise ValueError(f"not a nonnegative A1 character (stuck at q^{n})")
        out[n] = c
        for w in range(-n, n + 1, 2):
            v = rem.get((w,), 0) - c
            if v:
                rem[(w,)] = v
            else:
                rem.pop((w,), None)
    return out


def branch_levi(a: int, b: int, vertex: int) -> dict:
    """Multiset {highest weight: multiplicity} of the A1 Levi kept at ``vertex``.

    vertex 1 keeps the short simple root (t1 -> q, t2 -> 1/q);
    vertex 2 keeps the long simple root (t1 -> 1, t2 -> q).
    """
    chi = sp_poly((a, b), 2, ("t1", "t2"))
    q = LaurentPoly.gens(("q",))[0]
    if vertex == 1:
        images = [q, q ** -1]
    elif vertex == 2:
        images = [LaurentPoly.const(("q",), 1), q]
    else:
        raise ValueError("vertex must be 1 or 2")
    return peel_a1(chi.substitute(images, ("q",)))


def a1_character(n: int, var: str = "q") -> LaurentPoly:
    return LaurentPoly((var,), {(w,): 1 for w in range(-n, n + 1, 2)})


def phi_set(a: int, b: int) -> list:
    """Highest weights (p, q) of the A1 x A1 constituents of V(a, b)."""
    return [(a - r - s, b - r + s) for r in range(b + 1) for s in range(a - b + 1)]
