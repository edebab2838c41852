"""Sparse multivariate Laurent polynomials with exact coefficients.

Terms live in a dict from exponent tuples to coefficients.  Rational
coefficients are kept as int/Fraction, everything else as CycloNum, so the
common case never pays for cyclotomic arithmetic.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from operator import add

from .exactnum import CycloNum, from_json as _c_from_json, simplify, to_json as _c_to_json


class VarMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


class NonUnitImage(ValueError):
    pass


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, CycloNum))


def _clean(terms: dict) -> dict:
    out = {}
    for e, c in terms.items():
        if c:
            out[e] = simplify(c)
    return out


class LaurentPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None, _clean_ok: bool = False):
        self.vars = tuple(vars)
        if terms is None:
            terms = {}
        self.terms = terms if _clean_ok else _clean({tuple(e): c for e, c in terms.items()})

    # -- constructors ----------------------------------------------------
    @classmethod
    def const(cls, vars, c=1) -> "LaurentPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, vars, exp, c=1) -> "LaurentPoly":
        return cls(vars, {tuple(exp): c})

    @classmethod
    def gens(cls, vars) -> list:
        vars = tuple(vars)
        n = len(vars)
        return [cls(vars, {tuple(int(j == i) for j in range(n)): 1}, True) for i in range(n)]

    # -- basics ----------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.vars)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise VarMismatch(f"{self.vars} vs {other.vars}")
            return other
        if _is_scalar(other):
            return LaurentPoly.const(self.vars, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return LaurentPoly(self.vars, _clean(t), True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()}, True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return LaurentPoly(self.vars, {}, True)
            return LaurentPoly(self.vars, _clean({e: c * other for e, c in self.terms.items()}), True)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly(self.vars, _clean(out), True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            inv = 1 / (c if not isinstance(c, int) else Fraction(c))
            return LaurentPoly(self.vars, {tuple(-x for x in e): inv}) ** (-n)
        out = LaurentPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.vars == other.vars and self.terms == other.terms
        if _is_scalar(other):
            return self.terms == LaurentPoly.const(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def coeff(self, exp):
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise VarMismatch("exponent length does not match")
        return self.terms.get(exp, 0)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def is_rational(self) -> bool:
        return all(not isinstance(c, CycloNum) for c in self.terms.values())

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def max_degree(self, i: int) -> int:
        return max(e[i] for e in self.terms)

    def min_degree(self, i: int) -> int:
        return min(e[i] for e in self.terms)

    def substitute(self, images, vars=None) -> "LaurentPoly":
        return lp_substitute(self, images, vars)

    def evaluate(self, values) -> complex:
        total = 0j
        for e, c in self.terms.items():
            v = complex(c)
            for x, k in zip(values, e):
                if k:
                    v *= x**k
            total += v
        return total

    def rename(self, vars) -> "LaurentPoly":
        vars = tuple(vars)
        if len(vars) != self.nvars:
            raise VarMismatch("rename needs the same number of variables")
        return LaurentPoly(vars, self.terms, True)

    def extend(self, vars, positions) -> "LaurentPoly":
        """Embed into a larger variable set; variable i goes to slot positions[i]."""
        vars = tuple(vars)
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            f = [0] * n
            for i, k in zip(positions, e):
                f[i] += k
            f = tuple(f)
            out[f] = out.get(f, 0) + c
        return LaurentPoly(vars, _clean(out), True)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            if isinstance(c, CycloNum):
                cs = f"({c!r})"
            else:
                cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            d = {"exp": list(e)}
            d.update(_c_to_json(c))
            terms.append(d)
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json(cls, d: dict) -> "LaurentPoly":
        t = {}
        for term in d["terms"]:
            t[tuple(term["exp"])] = _c_from_json(term)
        return cls(d["vars"], t)


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_coeff(p: LaurentPoly, exp):
    return p.coeff(exp)


def _key(e):
    # heap key; smallest key = largest term in graded-lex order
    return (-sum(e), tuple(-x for x in e))


def lp_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient of an exact division, by leading-term elimination in graded-lex order.

    Raises NotDivisible as soon as a quotient term would fall outside the
    per-variable degree box that an exact quotient must live in.
    """
    if num.vars != den.vars:
        raise VarMismatch(f"{num.vars} vs {den.vars}")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly(num.vars, {}, True)
    n = num.nvars
    lo = [num.min_degree(i) - den.min_degree(i) for i in range(n)]
    hi = [num.max_degree(i) - den.max_degree(i) for i in range(n)]
    if any(l > h for l, h in zip(lo, hi)):
        raise NotDivisible("degree bounds are inconsistent")

    lead_e, lead_c = min(den.terms.items(), key=lambda t: _key(t[0]))
    inv_lead = _inverse(lead_c)
    rest = [(e, c) for e, c in den.terms.items() if e != lead_e]

    r = dict(num.terms)
    heap = [(_key(e), e) for e in r]
    heapq.heapify(heap)
    q = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = r.pop(e, None)
        if c is None or not c:
            continue
        qe = tuple(x - y for x, y in zip(e, lead_e))
        for x, l, h in zip(qe, lo, hi):
            if x < l or x > h:
                raise NotDivisible(f"remainder term at exponent {e}")
        qc = simplify(c * inv_lead)
        q[qe] = qc
        for de, dc in rest:
            f = tuple(map(add, qe, de))
            old = r.get(f)
            if old is None:
                r[f] = -qc * dc
                heapq.heappush(heap, (_key(f), f))
            else:
                v = old - qc * dc
                if v:
                    r[f] = v
                else:
                    del r[f]
    return LaurentPoly(num.vars, _clean(q), True)


def _inverse(c):
    if isinstance(c, CycloNum):
        return c.inverse()
    return 1 / Fraction(c)


def lp_substitute(p: LaurentPoly, images, vars=None) -> LaurentPoly:
    """Substitute a unit monomial for each variable.

    ``images`` are LaurentPolys (single terms) in a common target variable set.
    """
    if len(images) != p.nvars:
        raise VarMismatch("one image per variable is required")
    if vars is None:
        vars = images[0].vars if images else ()
    vars = tuple(vars)
    m = len(vars)
    data = []
    for im in images:
        if isinstance(im, LaurentPoly):
            if im.vars != vars:
                raise VarMismatch("images must share a variable set")
            if len(im.terms) != 1:
                raise NonUnitImage(f"image {im} is not a unit monomial")
            (e, c), = im.terms.items()
        else:
            if not im:
                raise NonUnitImage("zero is not a unit")
            e, c = (0,) * m, im
        data.append((e, c))
    cache: dict = {}

    def cpow(i, k):
        key = (i, k)
        v = cache.get(key)
        if v is None:
            c = data[i][1]
            if k >= 0:
                v = c ** k
            else:
                v = _inverse(c) ** (-k)
            v = simplify(v)
            cache[key] = v
        return v

    trivial = [d[1] == 1 for d in data]
    out: dict = {}
    for e, c in p.terms.items():
        f = [0] * m
        coef = c
        for i, k in enumerate(e):
            if k:
                ie = data[i][0]
                for j in range(m):
                    if ie[j]:
                        f[j] += k * ie[j]
                if not trivial[i]:
                    coef = coef * cpow(i, k)
        f = tuple(f)
        out[f] = out.get(f, 0) + coef
    return LaurentPoly(vars, _clean(out), True)


def elementary(polys: list, k: int, vars) -> LaurentPoly:
    """k-th elementary symmetric function of a list of LaurentPolys."""
    e = [LaurentPoly.const(vars, 1)] + [LaurentPoly(vars, {}, True)] * k
    for p in polys:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * p
    return e[k]


def prod(polys, vars) -> LaurentPoly:
    out = LaurentPoly.const(vars, 1)
    for p in polys:
        out = out * p
    return out


class Packer:
    """Packs exponent vectors into integers, digits in balanced base 2^bits."""

    def __init__(self, n: int, bound: int):
        self.n = n
        self.bits = max(8, (4 * bound + 4).bit_length())
        self.half = 1 << (self.bits - 1)
        self.mask = (1 << self.bits) - 1
        self.off = sum(self.half << (self.bits * i) for i in range(n))

    def pack(self, e) -> int:
        b = self.bits
        return sum(x << (b * i) for i, x in enumerate(e))

    def unpack(self, v: int) -> tuple:
        v += self.off
        b, m, h = self.bits, self.mask, self.half
        return tuple(((v >> (b * i)) & m) - h for i in range(self.n))

    def coord(self, v: int, i: int) -> int:
        return (((v + self.off) >> (self.bits * i)) & self.mask) - self.half


def packed_div_binomial(terms: dict, pk: Packer, shift, d) -> dict:
    """Divide packed terms by x^shift * (1 - x^d); see lp_div_binomial."""
    c = next(i for i, v in enumerate(d) if v)
    dc = d[c]
    ps, pd = pk.pack(shift), pk.pack(d)
    sh, mask, half, off = pk.bits * c, pk.mask, pk.half, pk.off
    lines: dict = {}
    for e, v in terms.items():
        g = e - ps
        t = ((((g + off) >> sh) & mask) - half) // dc
        key = g - t * pd
        line = lines.get(key)
        if line is None:
            lines[key] = {t: v}
        else:
            line[t] = v
    out = {}
    for key, pts in lines.items():
        if len(pts) == 1:
            raise NotDivisible(f"nonzero remainder along the line through {pk.unpack(key)}")
        lo, hi = min(pts), max(pts)
        s = 0
        get = pts.get
        for t in range(lo, hi + 1):
            v = get(t)
            if v is not None:
                s = s + v
            if s:
                out[key + t * pd] = s
        if s:
            raise NotDivisible(f"nonzero remainder along the line through {pk.unpack(key)}")
    return out


def lp_div_binomial(p: LaurentPoly, shift, d) -> LaurentPoly:
    """Exact quotient of p by x^shift * (1 - x^d), in linear time.

    Along each line parallel to d the quotient is a running sum of the
    shifted coefficients; a nonzero sum left at the top of a line means the
    division is not exact.
    """
    if not p.terms:
        return LaurentPoly(p.vars, {}, True)
    bound = max(max(abs(x) for x in e) for e in p.terms) + max(map(abs, shift)) + max(map(abs, d))
    pk = Packer(p.nvars, bound)
    out = packed_div_binomial({pk.pack(e): c for e, c in p.terms.items()}, pk, shift, d)
    return LaurentPoly(p.vars, {pk.unpack(k): simplify(v) for k, v in out.items()}, True)
