"""Coset atlases: every group as Haar-weighted components with exact moment
functionals.

A component is a coset representative times a parametrised torus of the
identity component.  Its eigenvalues are monomials zeta^k * p^e in the
parameters p, found by exactly factoring det(I + x * rep * torus).
Integration of a class function substitutes those monomials and applies the
component's functional, accumulating in 48 rational buckets (one per power of
zeta) so that the final sum is an exact element of Q(zeta_48) which must be
rational.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from . import matrices as mx
from .characters import default_vars, sp_poly
from .coeffs import GENUS1, UnknownGroup, canonical
from .exactnum import ORDER, CycloNum, NotRational, simplify, zeta_pow
from .laurent import LaurentPoly, lp_exact_div


class PartialAtlas(RuntimeError):
    pass


class FactorError(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# moment functionals

@lru_cache(maxsize=None)
def usp_density(g: int) -> dict:
    """(1/|W|) prod over roots of C_g of (1 - t^alpha), as exps -> Fraction."""
    roots = []
    for i in range(g):
        e = [0] * g
        e[i] = 2
        roots.append(tuple(e))
        for j in range(i + 1, g):
            for s in (1, -1):
                e = [0] * g
                e[i], e[j] = 1, s
                roots.append(tuple(e))
    roots += [tuple(-v for v in r) for r in roots]
    poly = {(0,) * g: Fraction(1)}
    for r in roots:
        nxt = dict(poly)
        for e, c in poly.items():
            k = tuple(a + b for a, b in zip(e, r))
            nxt[k] = nxt.get(k, 0) - c
        poly = {e: c for e, c in nxt.items() if c}
    w = Fraction(1, 2**g * factorial(g))
    return {e: c * w for e, c in poly.items()}


@dataclass(frozen=True)
class MomentFunctional:
    kind: str               # U1, SU2, U2, USp2g
    g: int = 1              # rank for USp2g
    stretch: int = 1        # v^k -> base(k / stretch), zero off multiples

    def __post_init__(self):
        if self.kind not in ("U1", "SU2", "U2", "USp2g"):
            raise ValueError(f"unknown functional kind {self.kind}")

    @property
    def arity(self) -> int:
        return {"U1": 1, "SU2": 1, "U2": 2}.get(self.kind, self.g)

    @property
    def label(self) -> str:
        s = f"USp2g({self.g})" if self.kind == "USp2g" else self.kind
        return s if self.stretch == 1 else f"{s}[stretch {self.stretch}]"

    def __call__(self, exps) -> Fraction:
        if isinstance(exps, int):
            exps = (exps,)
        exps = tuple(exps)
        if len(exps) != self.arity:
            raise ValueError(f"{self.kind} takes {self.arity} exponents")
        if self.stretch != 1:
            if any(k % self.stretch for k in exps):
                return Fraction(0)
            exps = tuple(k // self.stretch for k in exps)
        return _base_moment(self.kind, self.g, exps)


@lru_cache(maxsize=None)
def _base_moment(kind: str, g: int, exps: tuple) -> Fraction:
    if kind == "U1":
        return Fraction(int(exps[0] == 0))
    if kind == "SU2":
        k = exps[0]
        return Fraction(int(k == 0)) - Fraction(int(abs(k) == 2), 2)
    if kind == "U2":
        p, q = exps
        v = Fraction(int(p == 0 and q == 0))
        if (p, q) in ((-1, 1), (1, -1)):
            v -= Fraction(1, 2)
        return v
    return usp_density(g).get(tuple(-k for k in exps), Fraction(0))


U1 = MomentFunctional("U1")
SU2 = MomentFunctional("SU2")
U2 = MomentFunctional("U2")


def USp2g(g: int) -> MomentFunctional:
    return MomentFunctional("USp2g", g)


def haar_moment(f: MomentFunctional, exps) -> Fraction:
    return f(exps)


# ---------------------------------------------------------------------------
# atlas data

@dataclass
class AtlasComponent:
    weight: Fraction
    eigenvalues: tuple                  # ((k, exps), ...) meaning zeta^k * p^exps
    params: tuple                       # ((name, MomentFunctional), ...)
    rep: tuple | None = None
    torus: tuple | None = None          # diagonal of the torus as (k, exps)
    derived: bool = False
    label: str = ""

    def blocks(self):
        """Consecutive parameter slices sharing one functional."""
        out, i = [], 0
        while i < len(self.params):
            f = self.params[i][1]
            out.append((i, i + f.arity, f))
            i += f.arity
        return out

    def moment(self, exps) -> Fraction:
        v = Fraction(1)
        for lo, hi, f in self.blocks():
            v *= f(exps[lo:hi])
            if not v:
                break
        return v

    def pairing(self) -> list:
        """Eigenvalues sorted into inverse pairs, first member of each pair."""
        rest = sorted(self.eigenvalues, key=lambda e: (e[1], e[0]))
        out = []
        while rest:
            k, e = rest.pop(0)
            partner = ((-k) % ORDER, tuple(-v for v in e))
            rest.remove(partner)
            out.append((k, e))
        return out

    def charpoly(self, var: str = "x") -> LaurentPoly:
        """prod (1 + x*e) over the eigenvalues, in x and the parameters."""
        vars = (var,) + tuple(n for n, _ in self.params)
        out = LaurentPoly.const(vars, 1)
        for k, e in self.eigenvalues:
            out = out * LaurentPoly(vars, {(0,) * len(vars): 1, (1,) + tuple(e): simplify(zeta_pow(k))})
        return out


@dataclass
class GroupAtlas:
    group: str
    components: list
    exactness: str = "full"
    genus: int = 2
    derived: bool = False
    cosets: int = 0
    notes: list = field(default_factory=list)

    def total_weight(self) -> Fraction:
        return sum((c.weight for c in self.components), Fraction(0))

    def require_exact(self):
        if self.exactness != "full" and not self.derived:
            raise PartialAtlas(f"{self.group} has a partial atlas; pass derived=True to use derived cosets")


# ---------------------------------------------------------------------------
# symbolic determinants and exact eigenvalue extraction

def _torus_matrix_entries(torus, vars):
    return [LaurentPoly.monomial(vars, (0,) + tuple(e), simplify(zeta_pow(k))) for k, e in torus]


def coset_det_symbolic(rep, torus, params, var: str = "x") -> LaurentPoly:
    """det(I + x * rep * diag(torus)) in x and the parameter names ``params``.

    ``torus`` lists the diagonal as (k, exps) pairs: zeta^k * params^exps.
    """
    n = len(rep)
    vars = (var,) + tuple(params)
    diag = _torus_matrix_entries(torus, vars)
    xv = LaurentPoly.monomial(vars, (1,) + (0,) * len(params))
    ent = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = xv * diag[j] * rep[i][j] if rep[i][j] else LaurentPoly(vars)
            if i == j:
                v = v + 1
            ent[i][j] = v
    total = LaurentPoly(vars)
    for perm in itertools.permutations(range(n)):
        if any(ent[i][perm[i]].is_zero() for i in range(n)):
            continue
        term = LaurentPoly.const(vars, _perm_sign(perm))
        for i in range(n):
            term = term * ent[i][perm[i]]
        total = total + term
    return total


def _perm_sign(p) -> int:
    s, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            s = -s
    return s


def _root_ks(Q: LaurentPoly) -> list:
    """k with (1 + zeta^k x) dividing Q once the parameters are set to 1."""
    uni = {}
    for e, c in Q.terms.items():
        uni[e[0]] = uni.get(e[0], 0) + c
    out = []
    for k in range(ORDER):
        acc = 0
        for d, c in uni.items():
            if c:
                acc = acc + c * zeta_pow(-k * d) * (-1) ** d
        if not simplify(acc):
            out.append(k)
    return out


def _vanishes(Q: LaurentPoly, k: int, e: tuple) -> bool:
    # substitute x -> -zeta^{-k} p^{-e}
    acc = {}
    for exp, c in Q.terms.items():
        d = exp[0]
        key = tuple(a - d * b for a, b in zip(exp[1:], e))
        v = c * zeta_pow(-k * d) * (-1) ** d
        acc[key] = acc.get(key, 0) + v
    return all(not simplify(v) for v in acc.values())


def factor_charpoly(Q: LaurentPoly, size: int, bound: int = 2) -> list:
    """Split Q = prod (1 + zeta^k p^e x) exactly; returns the (k, e) list."""
    npar = len(Q.vars) - 1
    cands = list(itertools.product(range(-bound, bound + 1), repeat=npar))
    cands.sort(key=lambda e: (sum(abs(v) for v in e), e))
    out = []
    while len(out) < size:
        found = None
        for k in _root_ks(Q):
            for e in cands:
                if _vanishes(Q, k, e):
                    found = (k, e)
                    break
            if found:
                break
        if found is None:
            raise FactorError("characteristic polynomial does not split into monomials")
        k, e = found
        lin = LaurentPoly(Q.vars, {(0,) * len(Q.vars): 1, (1,) + e: simplify(zeta_pow(k))})
        Q = lp_exact_div(Q, lin)
        out.append(found)
    if Q != LaurentPoly.const(Q.vars, 1):
        raise FactorError("leftover factor after peeling eigenvalues")
    return out


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _line_direction(Q: LaurentPoly):
    """Primitive w with every parameter exponent of Q a multiple of w, else None."""
    pts = [e[1:] for e in Q.terms if any(e[1:])]
    if not pts:
        return None
    p0 = pts[0]
    for p in pts[1:]:
        if p0[0] * p[1] - p0[1] * p[0]:
            return None
    g = gcd(*p0)
    return tuple(v // g for v in p0)


# ---------------------------------------------------------------------------
# group definitions

def _zeta(n):
    return mx.zeta_2n(n)


_M = mx.mul
_Q1 = [mx.QI, mx.QJ, mx.QW]

# (identity kind, generators)
_GENERATED = {
    "C1": ("C1", []), "C2": ("C1", [_zeta(2)]), "C3": ("C1", [_zeta(3)]),
    "C4": ("C1", [_zeta(4)]), "C6": ("C1", [_zeta(6)]),
    "D2": ("C1", [_zeta(2), mx.QJ]), "D3": ("C1", [_zeta(3), mx.QJ]),
    "D4": ("C1", [_zeta(4), mx.QJ]), "D6": ("C1", [_zeta(6), mx.QJ]),
    "T": ("C1", _Q1), "O": ("C1", _Q1 + [mx.Q8]),
    "C2,1": ("C1", [_M(mx.J, _zeta(2))]), "C4,1": ("C1", [_M(mx.J, _zeta(4))]),
    "C6,1": ("C1", [_M(mx.J, _zeta(6))]),
    "D2,1": ("C1", [_M(mx.J, _zeta(2)), mx.QJ]), "D4,1": ("C1", [_M(mx.J, _zeta(4)), mx.QJ]),
    "D6,1": ("C1", [_M(mx.J, _zeta(6)), mx.QJ]),
    "D3,2": ("C1", [_zeta(3), _M(mx.J, mx.QJ)]), "D4,2": ("C1", [_zeta(4), _M(mx.J, mx.QJ)]),
    "D6,2": ("C1", [_zeta(6), _M(mx.J, mx.QJ)]),
    "O1": ("C1", _Q1 + [_M(mx.J, mx.Q8)]),
    "F": ("F", []), "Fa": ("F", [mx.A_]), "Fc": ("F", [mx.C_]),
    "Fab": ("F", [_M(mx.A_, mx.B_)]), "Fac": ("F", [_M(mx.A_, mx.C_)]),
    "Fa,b": ("F", [mx.A_, mx.B_]), "Fab,c": ("F", [_M(mx.A_, mx.B_), mx.C_]),
    "Fa,b,c": ("F", [mx.A_, mx.B_, mx.C_]),
}
for _g in ("C1", "C2", "C3", "C4", "C6", "D2", "D3", "D4", "D6", "T", "O"):
    _kind, _gens = _GENERATED[_g]
    _GENERATED["J" + _g] = (_kind, _gens + [mx.J])

_TORI = {
    "C1": (("u",), ((0, (1,)), (0, (1,)), (0, (-1,)), (0, (-1,))), (U1,)),
    "F": (("u1", "u2"), ((0, (1, 0)), (0, (0, 1)), (0, (-1, 0)), (0, (0, -1))), (U1, U1)),
}


def _in_identity(kind, g) -> bool:
    if not mx.is_diagonal(g):
        return False
    d = [g[i][i] for i in range(4)]
    cj = mx.conj_scalar
    if kind == "C1":
        return d[0] == d[1] and d[2] == d[3] and d[2] == cj(d[0])
    return d[2] == cj(d[0]) and d[3] == cj(d[1])


def coset_reps(H: str) -> tuple:
    """(identity kind, list of coset representatives) for a generated group."""
    kind, gens = _GENERATED[H]
    elems = mx.closure(gens)
    K = [g for g in elems if _in_identity(kind, g)]
    done, reps = set(), []
    for g in elems:
        if g in done:
            continue
        reps.append(g)
        for k in K:
            done.add(_M(g, k))
    return kind, reps


def _component_from_rep(rep, names, torus, funcs, weight, derived=False, label=""):
    params = tuple(zip(names, funcs))
    Q = coset_det_symbolic(rep, torus, names)
    try:
        eig = factor_charpoly(Q, len(rep))
    except FactorError:
        # the determinant depends on the parameters only through p^w: use a
        # single circle parameter v with p = v^(2r), w.r = 1
        w = _line_direction(Q)
        if w is None or len(names) != 2 or any(f != U1 for f in funcs):
            raise
        _, r0, r1 = _ext_gcd(w[0], w[1])
        r = (r0, r1)
        torus = tuple((k, (2 * sum(a * b for a, b in zip(e, r)),)) for k, e in torus)
        names, params = ("v",), (("v", U1),)
        Q = coset_det_symbolic(rep, torus, names)
        eig = factor_charpoly(Q, len(rep))
    return AtlasComponent(Fraction(weight), tuple(sorted(eig, key=lambda t: (t[1], t[0]))),
                          params, rep, tuple(torus), derived, label)


def _canonical_eigs(comp: AtlasComponent) -> tuple:
    """Smallest eigenvalue tuple over the measure-preserving parameter maps
    u -> zeta^j u^{+-1} (circle parameters) and z -> z^{+-1} (SU(2))."""
    choices = []
    for _, f in comp.params:
        if f.kind == "U1" and f.stretch == 1:
            choices.append([(j, s) for j in range(ORDER) for s in (1, -1)])
        elif f.kind == "SU2":
            choices.append([(0, 1), (0, -1)])
        else:
            choices.append([(0, 1)])
    best = None
    for combo in itertools.product(*choices):
        eig = []
        for k, e in comp.eigenvalues:
            kk = k + sum(j * v for (j, _), v in zip(combo, e))
            ee = tuple(s * v for (_, s), v in zip(combo, e))
            eig.append((kk % ORDER, ee))
        key = tuple(sorted(eig, key=lambda t: (t[1], t[0])))
        if best is None or key < best:
            best = key
    return best


def _merge(comps: list) -> list:
    out = {}
    for c in comps:
        key = (_canonical_eigs(c), tuple((n, f) for n, f in c.params), c.derived)
        if key in out:
            out[key].weight += c.weight
        else:
            c.eigenvalues = key[0]
            out[key] = c
    return list(out.values())


def _hand_components(H: str) -> tuple:
    """(components, exactness) for groups whose identity component is not a
    torus of the generated type."""
    SZ = ((0, (1,)), (0, (-1,)), (0, (-1,)), (0, (1,)))   # SU(2) block diag(z, 1/z)
    comps = []
    m = re.fullmatch(r"(J?)E(\d)", H)
    if m:
        n = int(m.group(2))
        reps = []
        for s in range(2 * n):
            k = s * 24 // n
            reps.append(mx.diag_root([k, k, -k, -k]))
        if m.group(1):
            reps += [_M(mx.J, r) for r in reps]
        w = Fraction(1, len(reps))
        comps = [_component_from_rep(r, ("z",), SZ, (SU2,), w) for r in reps]
        return comps, "full"
    AB = ((0, (1, 0)), (0, (0, 1)), (0, (-1, 0)), (0, (0, -1)))
    if H in ("U2", "NU2"):
        w = Fraction(1, 1 if H == "U2" else 2)
        comps = [_component_from_rep(mx.ONE, ("a", "b"), AB, (U2, U2), w)]
        if H == "NU2":
            comps.append(_component_from_rep(mx.J, ("z",), SZ, (SU2,), w))
        return comps, "full"
    UZ = ((0, (1, 0)), (0, (0, 1)), (0, (-1, 0)), (0, (0, -1)))
    if H in ("G1,3", "NG1,3"):
        w = Fraction(1, 1 if H == "G1,3" else 2)
        comps = [_component_from_rep(mx.ONE, ("u", "z"), UZ, (U1, SU2), w)]
        if H == "NG1,3":
            comps.append(_component_from_rep(mx.A_, ("u", "z"), UZ, (U1, SU2), w, derived=True,
                                             label="derived twisted coset"))
            return comps, "partial"
        return comps, "full"
    if H in ("G3,3", "NG3,3"):
        w = Fraction(1, 1 if H == "G3,3" else 2)
        comps = [_component_from_rep(mx.ONE, ("z1", "z2"), UZ, (SU2, SU2), w)]
        if H == "NG3,3":
            # J(A + B) on the planes (1,3), (2,4) is conjugate to J(AB' + 1);
            # its eigenvalues are square roots of those of a Haar SU(2) element
            V = ((0, (2,)), (0, (0,)), (0, (-2,)), (0, (0,)))
            comps.append(_component_from_rep(mx.J, ("v",), V, (MomentFunctional("SU2", stretch=2),),
                                             w, derived=True, label="derived twisted coset"))
            return comps, "partial"
        return comps, "full"
    raise UnknownGroup(H)


def _usp_component(g: int) -> AtlasComponent:
    names = tuple(f"t{i + 1}" for i in range(g))
    eig = []
    for i in range(g):
        e = [0] * g
        e[i] = 1
        eig.append((0, tuple(e)))
        eig.append((0, tuple(-v for v in e)))
    f = USp2g(g)
    return AtlasComponent(Fraction(1), tuple(sorted(eig, key=lambda t: (t[1], t[0]))),
                          tuple((n, f) for n in names), torus=tuple(eig))


def _genus1(H: str) -> list:
    tor = ((0, (1,)), (0, (-1,)))
    if H == "USp2":
        return [_component_from_rep(mx.identity(2), ("z",), tor, (SU2,), 1)]
    w = Fraction(1, 1 if H == "U1" else 2)
    comps = [_component_from_rep(mx.identity(2), ("u",), tor, (U1,), w)]
    if H == "NU1":
        comps.append(_component_from_rep(mx.J2, ("u",), tor, (U1,), w))
    return comps


def parse_group(H: str):
    """Canonical group id; USp(2g) for any g is accepted as 'USp<2g>'."""
    m = re.fullmatch(r"\s*usp\s*\(?\s*(\d+)\s*\)?\s*", H, re.I)
    if m:
        n = int(m.group(1))
        if n % 2 or n == 0:
            raise UnknownGroup(H)
        return f"USp{n}"
    return canonical(H)


_CACHE: dict = {}


def components(H: str, derived: bool = False) -> GroupAtlas:
    key = parse_group(H)
    if key not in _CACHE:
        _CACHE[key] = _build(key)
    a = _CACHE[key]
    return GroupAtlas(a.group, a.components, a.exactness, a.genus, derived, a.cosets, list(a.notes))


def _build(H: str) -> GroupAtlas:
    m = re.fullmatch(r"USp(\d+)", H)
    if m:
        g = int(m.group(1)) // 2
        return GroupAtlas(H, [_usp_component(g)], genus=g, cosets=1)
    if H in GENUS1:
        comps = _genus1(H)
        return GroupAtlas(H, comps, genus=1, cosets=len(comps))
    if H in _GENERATED:
        kind, reps = coset_reps(H)
        names, torus, funcs = _TORI[kind]
        w = Fraction(1, len(reps))
        comps = [_component_from_rep(r, names, torus, funcs, w) for r in reps]
        return GroupAtlas(H, _merge(comps), cosets=len(reps))
    comps, exact = _hand_components(H)
    n = len(comps)
    return GroupAtlas(H, _merge(comps), exactness=exact, cosets=n)


# ---------------------------------------------------------------------------
# integration

def _buckets_to_rat(buckets: dict) -> Fraction:
    acc = CycloNum.from_rat(0)
    rat = Fraction(0)
    for k, v in buckets.items():
        if not v:
            continue
        if k == 0:
            rat += v
        else:
            acc = acc + zeta_pow(k) * v
    out = simplify(acc + rat)
    if isinstance(out, CycloNum):
        raise NotRational(f"integral is not rational: {out!r}")
    return Fraction(out)


def integrate_terms(comp: AtlasComponent, terms) -> Fraction:
    """Functional of sum c * zeta^k * p^e over (k, e, c) triples (exact)."""
    buckets = {}
    for k, e, c in terms:
        v = comp.moment(e)
        if v:
            k %= ORDER
            buckets[k] = buckets.get(k, 0) + c * v
    return _buckets_to_rat(buckets)


def integrate_poly(H: str, poly: LaurentPoly, derived: bool = False) -> Fraction:
    """Haar average of a symmetric Laurent polynomial in g torus variables,
    evaluated at one eigenvalue of each inverse pair."""
    atlas = components(H, derived)
    atlas.require_exact()
    total = Fraction(0)
    for comp in atlas.components:
        pairs = comp.pairing()
        if len(pairs) != poly.nvars:
            raise ValueError("polynomial arity does not match the genus")
        terms = []
        for exp, c in poly.terms.items():
            k = sum(a * p[0] for a, p in zip(exp, pairs))
            e = tuple(sum(a * p[1][j] for a, p in zip(exp, pairs)) for j in range(len(comp.params)))
            if isinstance(c, CycloNum):
                raise NotRational("character coefficients must be rational")
            terms.append((k, e, c))
        total += comp.weight * integrate_terms(comp, terms)
    return total


def integrate_char(H: str, a: int, b: int = 0, derived: bool = False) -> Fraction:
    """Multiplicity of the trivial representation in chi_(a,b) restricted to H.

    Genus-1 groups take the Sp(2) character chi_(a) and need b = 0.
    """
    atlas = components(H, derived)
    if a < b or b < 0:
        raise ValueError("need a >= b >= 0")
    if atlas.genus == 1:
        if b:
            raise ValueError("genus-1 characters have one row")
        chi = sp_poly((a,), 1, ("t1",))
    elif atlas.genus == 2:
        chi = sp_poly((a, b), 2, ("t1", "t2"))
    else:
        raise ValueError("integrate_char handles genus 1 and 2")
    return integrate_poly(H, chi, derived)


def _charpoly_terms(comp: AtlasComponent) -> dict:
    """prod (1 + x e) as {(deg, k, exps): count}."""
    npar = len(comp.params)
    poly = {(0, 0, (0,) * npar): 1}
    for k, e in comp.eigenvalues:
        nxt = dict(poly)
        for (d, kk, ee), c in poly.items():
            key = (d + 1, (kk + k) % ORDER, tuple(a + b for a, b in zip(ee, e)))
            nxt[key] = nxt.get(key, 0) + c
        poly = nxt
    return poly


def autocorr_lhs(H: str, m: int, derived: bool = False, vars=None) -> LaurentPoly:
    """Haar average of prod_{i<=m} det(I + x_i g) as a polynomial in x_1..x_m."""
    if m < 1:
        raise ValueError("m must be positive")
    atlas = components(H, derived)
    atlas.require_exact()
    vars = tuple(vars or default_vars(m))
    out = {}
    for comp in atlas.components:
        P = _charpoly_terms(comp)
        state = {((), 0, (0,) * len(comp.params)): 1}
        for _ in range(m):
            nxt = {}
            for (dv, k, e), c in state.items():
                for (d, k2, e2), c2 in P.items():
                    key = (dv + (d,), (k + k2) % ORDER, tuple(a + b for a, b in zip(e, e2)))
                    nxt[key] = nxt.get(key, 0) + c * c2
            state = nxt
        buckets = {}
        for (dv, k, e), c in state.items():
            v = comp.moment(e)
            if v:
                b = buckets.setdefault(dv, {})
                b[k] = b.get(k, 0) + c * v
        for dv, b in buckets.items():
            val = _buckets_to_rat(b) * comp.weight
            if val:
                out[dv] = out.get(dv, 0) + val
    return LaurentPoly(vars, {e: simplify(c) for e, c in out.items() if c})


def power_moment(H: str, k: int, m: int, derived: bool = False) -> Fraction:
    """Haar average of e_k(eigenvalues)^m."""
    atlas = components(H, derived)
    atlas.require_exact()
    total = Fraction(0)
    for comp in atlas.components:
        npar = len(comp.params)
        ek = {}
        for sub in itertools.combinations(comp.eigenvalues, k):
            key = (sum(s[0] for s in sub) % ORDER, tuple(sum(s[1][j] for s in sub) for j in range(npar)))
            ek[key] = ek.get(key, 0) + 1
        acc = {(0, (0,) * npar): 1}
        for _ in range(m):
            nxt = {}
            for (k1, e1), c1 in acc.items():
                for (k2, e2), c2 in ek.items():
                    key = ((k1 + k2) % ORDER, tuple(a + b for a, b in zip(e1, e2)))
                    nxt[key] = nxt.get(key, 0) + c1 * c2
            acc = nxt
        total += comp.weight * integrate_terms(comp, ((kk, e, c) for (kk, e), c in acc.items()))
    return total


# ---------------------------------------------------------------------------
# serialisation

def dump_json(H: str, derived: bool = False) -> str:
    a = components(H, derived)
    data = {
        "group": a.group,
        "genus": a.genus,
        "exactness": a.exactness,
        "cosets": a.cosets,
        "components": [
            {
                "weight": f"{c.weight.numerator}/{c.weight.denominator}",
                "eigenvalues": [{"k": k, "exps": list(e)} for k, e in c.eigenvalues],
                "params": [{"name": n, "functional": f.label} for n, f in c.params],
                "derived": c.derived,
            }
            for c in a.components
        ],
    }
    return json.dumps(data, indent=2)
