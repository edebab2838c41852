"""Exact verification of the character identities, the autocorrelation
expansions and the branching counts.

Every check compares two independently computed objects and reports the
exact difference on failure.  Statement ids are descriptive; ``STATEMENTS``
lists them all and ``run`` dispatches by id.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import atlas as at
from .characters import (
    a1_character, branch_levi, crystal_op, default_vars, dim_c2, kn_enumerate,
    phi_set, special_tableau, sp_poly, weight_mult,
)
from .coeffs import (
    ALL_GROUPS, GENUS1, GENUS2, PARTIAL, canonical, eta, genus1_m, m_coeff, psi,
    theta, tilde, xi,
)
from .laurent import LaurentPoly, elementary, prod
from .partitions import rect_subpartitions, tilde as lam_tilde, zb_pairs, zb_to_lambda

NS = (1, 2, 3, 4, 6)
KAPPA = {1: -2, 2: 2, 3: 1, 4: 0, 6: -1}


@dataclass
class VerificationReport:
    statement: str
    params: dict
    status: str                 # "pass" or "fail"
    method: str = "exact"
    detail: str = ""
    checked: int = 1
    parts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = {"id": self.statement, "params": self.params, "status": self.status,
             "method": self.method, "checked": self.checked}
        if self.detail:
            d["detail"] = self.detail
        fails = [p.to_dict() for p in self.parts if not p.ok]
        if fails:
            d["failures"] = fails
        return d

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.status.upper():4s} {self.statement} {ps} [{self.method}, {self.checked} checks]"


def diff_detail(lhs, rhs, limit: int = 20) -> str:
    if isinstance(lhs, LaurentPoly):
        d = lhs - rhs
        terms = d.sorted_terms()
        shown = LaurentPoly(d.vars, dict(terms[:limit]))
        return f"difference ({len(terms)} terms): {shown}"
    return f"lhs={lhs} rhs={rhs}"


def _report(statement, params, lhs, rhs, method="exact") -> VerificationReport:
    ok = lhs == rhs
    return VerificationReport(statement, dict(params), "pass" if ok else "fail", method,
                              "" if ok else diff_detail(lhs, rhs))


def _combine(statement, params, parts, method="exact") -> VerificationReport:
    ok = all(p.ok for p in parts)
    n = sum(p.checked for p in parts)
    detail = ""
    if not ok:
        bad = [p for p in parts if not p.ok]
        detail = f"{len(bad)} failing: " + "; ".join(
            f"{p.params} {p.detail}" for p in bad[:5])
    return VerificationReport(statement, dict(params), "pass" if ok else "fail", method,
                              detail, n, parts)


# ---------------------------------------------------------------------------
# polynomial building blocks

def _xmono(m: int, power: int, vars) -> LaurentPoly:
    return LaurentPoly.monomial(vars, (power,) * m)


def character_sum(coef, m: int, vars=None) -> LaurentPoly:
    """sum over z, b of coef(z, b) * chi_(2^(m-b-2z), 1^(2z)) of Sp(2m)."""
    vars = tuple(vars or default_vars(m))
    out = LaurentPoly(vars)
    for z, b in zb_pairs(m):
        c = coef(z, b)
        if c:
            out = out + sp_poly(zb_to_lambda(z, b, m)[0], m, vars) * c
    return out


def column_sum(coef, m: int, vars=None) -> LaurentPoly:
    """sum over j of coef(j) * chi_(1^(m-2j)) of Sp(2m)."""
    vars = tuple(vars or default_vars(m))
    out = LaurentPoly(vars)
    for j in range(m // 2 + 1):
        c = coef(j)
        if c:
            out = out + sp_poly((1,) * (m - 2 * j), m, vars) * c
    return out


def autocorr_rhs(H: str, m: int, vars=None) -> LaurentPoly:
    """Right-hand side of the autocorrelation expansion from the coefficient tables."""
    vars = tuple(vars or default_vars(m))
    key = at.parse_group(H)
    if key in GENUS1:
        return column_sum(lambda j: genus1_m(key, j), m, vars) * _xmono(m, 1, vars)
    if key.startswith("USp") and key not in ALL_GROUPS:
        g = int(key[3:]) // 2
        return sp_poly((g,) * m, m, vars) * _xmono(m, g, vars)
    return character_sum(lambda z, b: m_coeff(key, z, b), m, vars) * _xmono(m, 2, vars)


def _sym(m, vars, power=1):
    """The polynomials x_i^power + x_i^-power."""
    out = []
    for i in range(m):
        e = [0] * m
        e[i] = power
        out.append(LaurentPoly.monomial(vars, e) + LaurentPoly.monomial(vars, [-v for v in e]))
    return out


def _doubled(p: LaurentPoly) -> LaurentPoly:
    gens = LaurentPoly.gens(p.vars)
    return p.substitute([g * g for g in gens], p.vars)


# ---------------------------------------------------------------------------
# identities

def check_dual_cauchy(m: int, g: int) -> VerificationReport:
    xs, ts = default_vars(m), default_vars(g, "t")
    vars = xs + ts
    X = [p.extend(vars, range(m)) for p in _sym(m, xs)]
    T = [p.extend(vars, range(m, m + g)) for p in _sym(g, ts)]
    lhs = LaurentPoly.const(vars, 1)
    for i in range(m):
        for j in range(g):
            lhs = lhs * (X[i] + T[j])
    rhs = LaurentPoly(vars)
    for lam in rect_subpartitions(g, m):
        a = sp_poly(lam, m, xs).extend(vars, range(m))
        b = sp_poly(lam_tilde(lam, m, g), g, ts).extend(vars, range(m, m + g))
        rhs = rhs + a * b
    return _report("dual-cauchy", {"m": m, "g": g}, lhs, rhs)


def check_usp(m: int, g: int) -> VerificationReport:
    """USp(2g) average = even-part Schur sum = rectangular symplectic character."""
    from .characters import schur
    vars = default_vars(m)
    lhs = at.autocorr_lhs(f"USp{2 * g}", m)
    schur_sum = LaurentPoly(vars)
    for lam in itertools.product(range(0, 2 * g + 1, 2), repeat=m):
        if list(lam) == sorted(lam, reverse=True):
            schur_sum = schur_sum + schur(lam, m, vars)
    rect = sp_poly((g,) * m, m, vars) * _xmono(m, g, vars)
    parts = [_report("usp-autocorr", {"m": m, "g": g, "side": "schur"}, lhs, schur_sum),
             _report("usp-autocorr", {"m": m, "g": g, "side": "rectangle"}, lhs, rect)]
    return _combine("usp-autocorr", {"m": m, "g": g}, parts)


def check_genus2(H: str, m: int, derived: bool = False) -> VerificationReport:
    key = canonical(H)
    lhs = at.autocorr_lhs(key, m, derived=derived)
    rhs = autocorr_rhs(key, m)
    method = "exact (derived cosets)" if key in PARTIAL else "exact"
    return _report("autocorr", {"group": key, "m": m}, lhs, rhs, method)


def check_partial_group(H: str, m: int = 2, a_max: int = 8, n_samples: int = 100_000,
                        seed: int = 7) -> VerificationReport:
    """Groups without a full exact atlas: branching counts plus Monte Carlo."""
    from . import montecarlo as mc
    key = canonical(H)
    parts = [check_branching_suite(a_max, only=("g13-count" if key == "NG1,3" else "g33-count",))]
    parts.append(mc.check_partial_rhs(key, n_samples=n_samples, seed=seed))
    r = _combine("autocorr", {"group": key, "m": m}, parts, method="branching + MC")
    return r


def check_identity_kappa(n: int, m: int) -> VerificationReport:
    vars = default_vars(m)
    k = KAPPA[n]
    lhs = LaurentPoly.const(vars, 1)
    for p in _sym(m, vars, 2):
        lhs = lhs * (p + k)
    rhs = character_sum(lambda z, b: psi(n, z, b), m, vars)
    parts = [_report("kappa-identity", {"n": n, "m": m}, lhs, rhs)]
    # the coset average over J * zeta_2n * C1 reproduces the product directly
    from . import matrices as mx
    rep = mx.mul(mx.J, mx.zeta_2n(n))
    det = at.coset_det_symbolic(rep, at._TORI["C1"][1], ("u",))
    x = LaurentPoly.gens(("x", "u"))[0]
    want = x ** 4 + x ** 2 * k + 1
    parts.append(_report("kappa-identity", {"n": n, "m": m, "side": "determinant"}, det, want))
    return _combine("kappa-identity", {"n": n, "m": m}, parts)


def e_identity_lhs(m: int, vars) -> LaurentPoly:
    ys = _sym(m, vars, 2)
    out = LaurentPoly(vars)
    for k in range(m + 1):
        out = out + elementary(ys, k, vars) * comb(m - k, (m - k) // 2)
    return out


def je_sum(m: int, vars) -> LaurentPoly:
    """sum over l, z of (-1)^z chi_(2^(m-2l-2z), 1^(2z))."""
    return character_sum(lambda z, b: (-1) ** z if b % 2 == 0 else 0, m, vars)


def check_identity_e(m: int) -> VerificationReport:
    vars = default_vars(m)
    lhs = e_identity_lhs(m, vars)
    parts = [_report("e-identity", {"m": m}, lhs, je_sum(m, vars))]
    # the J-coset average of E_1 equals (x_1...x_m)^2 times the left side
    coset = at.autocorr_lhs("JE1", m) * 2 - at.autocorr_lhs("E1", m)
    parts.append(_report("e-identity", {"m": m, "side": "coset"}, coset, lhs * _xmono(m, 2, vars)))
    return _combine("e-identity", {"m": m}, parts)


def check_identity_f(m: int) -> VerificationReport:
    vars = default_vars(m)
    lhs = prod(_sym(m, vars), vars) * column_sum(lambda j: 1, m, vars)
    rhs = character_sum(lambda z, b: xi(2, z, b), m, vars)
    parts = [_report("f-identity", {"m": m}, lhs, rhs)]
    # the twisted coset a*F, averaged exactly
    coset = at.autocorr_lhs("Fa", m) * 2 - at.autocorr_lhs("F", m)
    parts.append(_report("f-identity", {"m": m, "side": "coset"}, coset, rhs * _xmono(m, 2, vars)))
    return _combine("f-identity", {"m": m}, parts)


def check_genus1_suite(m: int) -> VerificationReport:
    vars = default_vars(m)
    parts = []
    for H in GENUS1:
        parts.append(_report("genus1-autocorr", {"group": H, "m": m},
                             at.autocorr_lhs(H, m), autocorr_rhs(H, m, vars)))
    X = _sym(m, vars)
    lhs_a = LaurentPoly(vars)
    for l in range(m // 2 + 1):
        lhs_a = lhs_a + elementary(X, m - 2 * l, vars) * comb(2 * l, l)
    parts.append(_report("genus1-binomial", {"m": m}, lhs_a, column_sum(lambda j: 1, m, vars)))
    parts.append(_report("genus1-sign", {"m": m}, prod(X, vars),
                         column_sum(lambda j: (-1) ** j, m, vars)))
    return _combine("genus1-suite", {"m": m}, parts)


def check_corollaries(m: int) -> VerificationReport:
    vars = default_vars(m)
    parts = []
    eta2 = character_sum(lambda z, b: eta(2, z, b), m, vars)
    Y = _sym(m, vars, 2)
    mid = LaurentPoly(vars)
    for l in range(m // 2 + 1):
        mid = mid + elementary(Y, m - 2 * l, vars) * comb(2 * l, l)
    dbl = _doubled(column_sum(lambda j: 1, m, vars))
    parts.append(_report("eta2-doubled", {"m": m, "side": "binomial"}, eta2, mid))
    parts.append(_report("eta2-doubled", {"m": m, "side": "doubled"}, eta2, dbl))
    p4 = character_sum(lambda z, b: psi(4, z, b), m, vars)
    parts.append(_report("psi4-doubled", {"m": m, "side": "product"}, prod(Y, vars), p4))
    parts.append(_report("psi4-doubled", {"m": m, "side": "doubled"}, p4,
                         _doubled(column_sum(lambda j: (-1) ** j, m, vars))))
    want = je_sum(m, vars) * _xmono(m, 2, vars)
    for n in NS:
        coset = at.autocorr_lhs(f"JE{n}", m) * 2 - at.autocorr_lhs(f"E{n}", m)
        parts.append(_report("je-coset", {"m": m, "n": n}, coset, want))
    return _combine("corollaries", {"m": m}, parts)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def check_catalan(k_max: int = 8) -> VerificationReport:
    parts = []
    z = LaurentPoly.gens(("z",))[0]
    for k in range(k_max + 1):
        p = (z + z ** -1) ** (2 * k)
        v = sum((c * at.SU2(e) for e, c in p.terms.items()), Fraction(0))
        parts.append(_report("catalan", {"k": k}, v, catalan(k)))
    return _combine("catalan", {"k_max": k_max}, parts)


def check_binomial_catalan(m_max: int = 10) -> VerificationReport:
    parts = []
    z = LaurentPoly.gens(("z",))[0]
    for m in range(m_max + 1):
        s = sum((-1) ** k * comb(m, k) * 2 ** (m - k) * catalan(k) for k in range(m + 1))
        parts.append(_report("binomial-catalan", {"m": m, "side": "sum"}, s, comb(m, m // 2)))
        p = (2 - (z + z ** -1) ** 2) ** m if m else LaurentPoly.const(("z",), 1)
        v = sum((c * at.SU2(e) for e, c in p.terms.items()), Fraction(0))
        parts.append(_report("binomial-catalan", {"m": m, "side": "su2"}, v, comb(m, m // 2)))
    return _combine("binomial-catalan", {"m_max": m_max}, parts)


def moments(H: str, g: int, k: int, m_max: int) -> list:
    """a_k(m) for m = 0..m_max: Haar averages of e_k(eigenvalues)^m."""
    key = at.parse_group(H)
    if at.components(key).genus != g:
        raise ValueError(f"{key} does not have genus {g}")
    if not 1 <= k <= g:
        raise ValueError("need 1 <= k <= g")
    out = []
    for m in range(m_max + 1):
        v = at.power_moment(key, k, m, derived=key in PARTIAL)
        if v.denominator != 1:
            raise ArithmeticError(f"non-integral moment {v}")
        out.append(int(v))
    return out


def check_table1(zb_max: int = 6, groups=None) -> VerificationReport:
    parts = []
    for H in groups or ALL_GROUPS:
        derived = H in PARTIAL
        if H in GENUS1:
            for a in range(zb_max + 1):
                want = genus1_m(H, a // 2) if a % 2 == 0 else 0
                parts.append(_report("table-oracle", {"group": H, "a": a},
                                     at.integrate_char(H, a), Fraction(want)))
            continue
        for z, b in zb_pairs(zb_max):
            got = at.integrate_char(H, b + 2 * z, b, derived=derived)
            parts.append(_report("table-oracle", {"group": H, "z": z, "b": b}, got, m_coeff(H, z, b)))
    return _combine("table-oracle", {"zb_max": zb_max}, parts)


def check_kn(a_max: int = 5) -> VerificationReport:
    from .characters import kn_character
    parts = []
    for a in range(a_max + 1):
        for b in range(a + 1):
            parts.append(_report("kn-character", {"a": a, "b": b},
                                 kn_character(a, b), sp_poly((a, b), 2, ("t1", "t2"))))
            parts.append(_report("kn-character", {"a": a, "b": b, "side": "count"},
                                 len(kn_enumerate(a, b)), dim_c2(a, b)))
    return _combine("kn-character", {"a_max": a_max}, parts)


# ---------------------------------------------------------------------------
# branching counts

def _pairs(a_max: int, even: bool = True):
    for a in range(a_max + 1):
        for b in range(a + 1):
            if not even or (a - b) % 2 == 0:
                yield a, b


def _zero_weight_sum(a, b, n):
    """Independent count: weight multiplicities with r + s = 0, r - s = 0 mod 2n."""
    chi = sp_poly((a, b), 2, ("t1", "t2"))
    return sum(c for (r, s), c in chi.terms.items() if r + s == 0 and (r - s) % (2 * n) == 0)


def _cn_closed(n, a, b):
    """The per-(p, q) counting formulas over the A1 x A1 constituents."""
    tot = 0
    for p, q in phi_set(a, b):
        mn = min(p, q)
        if n == 1:
            tot += mn + 1
        elif n == 2:
            tot += (mn + 1) if q % 2 == 0 else 0
        elif n == 3:
            tot += mn // 3 + 1 - (mn % 3 == 1)
        else:
            tot += (2 * (mn // n) + 1) if q % 2 == 0 else 0
    return tot


def _psi_diag(n, a, b):
    tot = 0
    for p, q in phi_set(a, b):
        if p != q:
            continue
        if n == 1:
            tot += p + 1
        elif n == 2:
            tot += (p + 1) if p % 2 == 0 else 0
        elif n == 3:
            tot += p // 3 + 1 - (p % 3 == 1)
        else:
            tot += (2 * (p // n) + 1) if p % 2 == 0 else 0
    return (-1) ** b * tot


def _isolated(a, b, i):
    return [T for T in kn_enumerate(a, b)
            if crystal_op("raise", i, T) is None and crystal_op("lower", i, T) is None]


def _levi_short_formula(a, b):
    eps = int((a + b) % 2 == 1)
    l = -(-(a - b - 1) // 2)
    out = {}
    for i in range(l):
        out[2 * i + eps] = out.get(2 * i + eps, 0) + (2 * i + 1 + eps) * (b + 1)
    for j in range(l, l + b + 1):
        out[2 * j + eps] = out.get(2 * j + eps, 0) + (2 * l + 1 + eps) * (l + b + 1 - j)
    return {k: v for k, v in out.items() if v}


def _levi_long_formula(a, b):
    k, l = b, a - b
    out = {}
    for i in range(k + 1):
        out[i] = out.get(i, 0) + (l + 1) * (i + 1)
    for i in range(k + 1, l + k + 1):
        out[i] = out.get(i, 0) + (k + 1) * (l + k + 1 - i)
    return out


def _en_closed(n, b):
    if n == 1:
        return b + 1
    if n == 2:
        return (b + 1) * (b % 2 == 0)
    if n == 3:
        return b // 3 + 1 - (b % 3 == 1)
    return (2 * (b // n) + 1) * (b % 2 == 0)


def _branch(statement, a_max, fn):
    parts = []
    for a, b in _pairs(a_max):
        for name, lhs, rhs in fn(a, b):
            parts.append(_report(statement, {"a": a, "b": b, "what": name}, lhs, rhs))
    return _combine(statement, {"a_max": a_max}, parts)


def _a1a1(a, b):
    chi = sp_poly((a, b), 2, ("t1", "t2"))
    vars = ("t1", "t2")
    s = LaurentPoly(vars)
    for p, q in phi_set(a, b):
        s = s + a1_character(p, "t1").extend(vars, [0]) * a1_character(q, "t2").extend(vars, [1])
    yield "restriction", chi, s
    yield "dimension", sum((p + 1) * (q + 1) for p, q in phi_set(a, b)), dim_c2(a, b)
    yield "trivial", int((0, 0) in phi_set(a, b)), int(a == b)


def _cn(a, b):
    z = (a - b) // 2
    for n in NS:
        want = tilde("eta", n, z, b)
        yield f"n={n} closed", _cn_closed(n, a, b), want
        yield f"n={n} weights", _zero_weight_sum(a, b, n), want
        yield f"n={n} atlas", at.integrate_char(f"C{n}", a, b), want


def _psi_tilde(a, b):
    z = (a - b) // 2
    for n in NS:
        want = tilde("psi", n, z, b)
        yield f"n={n} diagonal", _psi_diag(n, a, b), want
        coset = 2 * at.integrate_char(f"JC{n}", a, b) - at.integrate_char(f"C{n}", a, b)
        yield f"n={n} coset", coset, want


def _jcn(a, b):
    z = (a - b) // 2
    t1 = Fraction(z * (b + 1) * (z + b + 1), 2) if b % 2 else Fraction((z + 1) * (b + 1) * (z + b + 2), 2)
    yield "n=1 closed", t1, theta(1, z, b)
    for n in NS:
        want = tilde("theta", n, z, b)
        yield f"n={n} atlas", at.integrate_char(f"JC{n}", a, b), want
        yield f"n={n} halves", (tilde("eta", n, z, b) + tilde("psi", n, z, b)) / 2, want


def _levi_short(a_max):
    parts = []
    for a, b in _pairs(a_max, even=False):
        got = branch_levi(a, b, 1)
        parts.append(_report("levi-short", {"a": a, "b": b, "what": "multiset"},
                             got, _levi_short_formula(a, b)))
        parts.append(_report("levi-short", {"a": a, "b": b, "what": "trivial"},
                             got.get(0, 0), int((a + b) % 2 == 0) * (b + 1)))
    return _combine("levi-short", {"a_max": a_max}, parts)


def _levi_long(a_max):
    parts = []
    for a, b in _pairs(a_max, even=False):
        got = branch_levi(a, b, 2)
        parts.append(_report("levi-long", {"a": a, "b": b, "what": "multiset"},
                             got, _levi_long_formula(a, b)))
        parts.append(_report("levi-long", {"a": a, "b": b, "what": "trivial"},
                             got.get(0, 0), a - b + 1))
        iso = _isolated(a, b, 2)
        parts.append(_report("levi-long", {"a": a, "b": b, "what": "isolated weights"},
                             sorted(T.weight() for T in iso),
                             sorted((2 * k - (a - b), 0) for k in range(a - b + 1))))
    return _combine("levi-long", {"a_max": a_max}, parts)


def _exhaust(a, b):
    tk = [special_tableau(a, b, k) for k in range(b + 1)]
    yield "admissible", all(T in set(kn_enumerate(a, b)) for T in tk), True
    yield "killed", all(crystal_op("raise", 1, T) is None and crystal_op("lower", 1, T) is None
                        for T in tk), True
    yield "exhaust", set(_isolated(a, b, 1)), set(tk)
    yield "weights", [T.weight() for T in tk], [(2 * k - b, 2 * k - b) for k in range(b + 1)]


def _en(a, b):
    z = (a - b) // 2
    for n in NS:
        cnt = sum(1 for k in range(b + 1) if (2 * k - b) % n == 0)
        yield f"n={n} tableaux", cnt, _en_closed(n, b)
        yield f"n={n} table", m_coeff(f"E{n}", z, b), _en_closed(n, b)
        yield f"n={n} atlas", at.integrate_char(f"E{n}", a, b), _en_closed(n, b)


def _jen(a, b):
    z = (a - b) // 2
    closed = Fraction(b + 1, 2) + Fraction((-1) ** z * (b % 2 == 0), 2)
    yield "n=1 atlas", at.integrate_char("JE1", a, b), closed
    for n in NS:
        want = Fraction(_en_closed(n, b), 2) + Fraction((-1) ** z * (b % 2 == 0), 2)
        yield f"n={n} atlas", at.integrate_char(f"JE{n}", a, b), want


def _f(a, b):
    z = (a - b) // 2
    cnt = sum(1 for p, q in phi_set(a, b) if p % 2 == 0 and q % 2 == 0)
    yield "pairs", cnt, xi(1, z, b)
    yield "weight zero", weight_mult(a, b, (0, 0)), xi(1, z, b)
    yield "closed", z * (b + 1) + b // 2 + 1, xi(1, z, b)
    yield "atlas", at.integrate_char("F", a, b), xi(1, z, b)


def _fa(a, b):
    z = (a - b) // 2
    cnt = sum(1 for p, q in phi_set(a, b) if p % 4 == 0 and q % 2 == 0)
    want = (xi(1, z, b) + xi(2, z, b)) / 2
    yield "pairs", cnt, want
    yield "atlas", at.integrate_char("Fa", a, b), want


def _g13(a, b):
    z = (a - b) // 2
    iso0 = [T for T in _isolated(a, b, 2) if T.weight() == (0, 0)]
    yield "fixed line", len(iso0), 1
    yield "G13 atlas", at.integrate_char("G1,3", a, b), 1
    yield "twisted", m_coeff("NG1,3", z, b), int(z % 2 == 0)
    yield "derived atlas", at.integrate_char("NG1,3", a, b, derived=True), int(z % 2 == 0)


def _g33(a, b):
    z = (a - b) // 2
    # vectors killed by both A1 factors: trivial A1 x A1 constituents
    yield "fixed line", phi_set(a, b).count((0, 0)), int(a == b)
    yield "G33 atlas", at.integrate_char("G3,3", a, b), int(a == b)
    yield "twisted", m_coeff("NG3,3", z, b), int(a == b and b % 2 == 0)
    yield "derived atlas", at.integrate_char("NG3,3", a, b, derived=True), int(a == b and b % 2 == 0)


BRANCHING = {
    "a1a1-branching": _a1a1,
    "cn-weight-count": _cn,
    "psi-diagonal": _psi_tilde,
    "jcn-fixed": _jcn,
    "kn-exhaust": _exhaust,
    "en-count": _en,
    "jen-fixed": _jen,
    "f-weight-zero": _f,
    "fa-fixed": _fa,
    "g13-count": _g13,
    "g33-count": _g33,
}


def check_branching_suite(a_max: int = 8, only=None) -> VerificationReport:
    parts = []
    names = list(BRANCHING) + ["levi-short", "levi-long"]
    for name in names:
        if only and name not in only:
            continue
        if name == "levi-short":
            parts.append(_levi_short(a_max))
        elif name == "levi-long":
            parts.append(_levi_long(a_max))
        else:
            parts.append(_branch(name, a_max, BRANCHING[name]))
    return _combine("branching", {"a_max": a_max}, parts)


# ---------------------------------------------------------------------------
# registry

def _each(fn, values, **fixed):
    return lambda: [fn(v, **fixed) for v in values]


STATEMENTS = {
    "dual-cauchy": lambda: [check_dual_cauchy(m, g) for m in range(1, 7) for g in range(1, 7) if m * g <= 6],
    "usp-autocorr": lambda: [check_usp(m, g) for m, g in ((1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3))],
    "genus1-suite": lambda: [check_genus1_suite(m) for m in range(1, 7)],
    "autocorr": lambda: [check_genus2(H, m) for H in GENUS2 if H not in PARTIAL for m in (1, 2, 3)],
    "autocorr-partial": lambda: [check_partial_group(H) for H in PARTIAL],
    "kappa-identity": lambda: [check_identity_kappa(n, m) for n in NS for m in range(1, 6)],
    "e-identity": lambda: [check_identity_e(m) for m in range(1, 6)],
    "f-identity": lambda: [check_identity_f(m) for m in range(1, 6)],
    "corollaries": lambda: [check_corollaries(m) for m in range(1, 5)],
    "catalan": lambda: [check_catalan(8)],
    "binomial-catalan": lambda: [check_binomial_catalan(10)],
    "table-oracle": lambda: [check_table1(6)],
    "kn-character": lambda: [check_kn(5)],
    "levi-short": lambda: [_levi_short(8)],
    "levi-long": lambda: [_levi_long(8)],
}
for _name in BRANCHING:
    STATEMENTS[_name] = (lambda n: lambda: [check_branching_suite(8, only=(n,))])(_name)


def run(statement: str, **params) -> list:
    """Run one statement; with parameters, a single instance where supported."""
    if statement not in STATEMENTS:
        raise KeyError(f"unknown statement id {statement!r}")
    if params:
        single = {
            "dual-cauchy": lambda: check_dual_cauchy(params["m"], params["g"]),
            "usp-autocorr": lambda: check_usp(params["m"], params["g"]),
            "genus1-suite": lambda: check_genus1_suite(params["m"]),
            "autocorr": lambda: (check_partial_group(params["group"], params.get("m", 2))
                                 if canonical(params["group"]) in PARTIAL
                                 else check_genus2(params["group"], params["m"])),
            "kappa-identity": lambda: check_identity_kappa(params["n"], params["m"]),
            "e-identity": lambda: check_identity_e(params["m"]),
            "f-identity": lambda: check_identity_f(params["m"]),
            "corollaries": lambda: check_corollaries(params["m"]),
        }
        if statement in single:
            return [single[statement]()]
    return STATEMENTS[statement]()


def run_all(progress=None) -> list:
    out = []
    for sid in STATEMENTS:
        reps = STATEMENTS[sid]()
        out.extend(reps)
        if progress:
            for r in reps:
                progress(r)
    return out
