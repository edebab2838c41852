"""Exact arithmetic in Q(zeta_48).

Rationals are plain ``fractions.Fraction``.  A ``CycloNum`` is an element of
the cyclotomic field Q(zeta), zeta = exp(i*pi/24), stored as 16 integer
numerators over one positive common denominator, reduced modulo the 48th
cyclotomic polynomial x^16 - x^8 + 1.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

Rat = Fraction

ORDER = 48
DEG = 16  # phi(48)
_HALF = 8


class NotRational(ArithmeticError):
    pass


def _reduce(c: list) -> list:
    # x^16 = x^8 - 1, applied from the top down
    for n in range(len(c) - 1, DEG - 1, -1):
        v = c[n]
        if v:
            c[n - _HALF] += v
            c[n - DEG] -= v
    del c[DEG:]
    return c


def _normalize(num: list, den: int) -> tuple:
    if den < 0:
        num = [-v for v in num]
        den = -den
    g = den
    for v in num:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g != 1:
        num = [v // g for v in num]
        den //= g
    return tuple(num), den


class CycloNum:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, coeffs=None, den: int = 1, _raw: bool = False):
        if _raw:
            self.num, self.den = coeffs, den
            self._hash = None
            return
        if coeffs is None:
            coeffs = ()
        vals = [Fraction(v) for v in coeffs]
        common = 1
        for v in vals:
            common = common * v.denominator // gcd(common, v.denominator)
        ints = [int(v * common) for v in vals] + [0] * max(0, DEG - len(vals))
        self.num, self.den = _normalize(_reduce(ints), common * den)
        self._hash = None

    @classmethod
    def _make(cls, num: list, den: int) -> "CycloNum":
        n, d = _normalize(num, den)
        return cls(n, d, _raw=True)

    @classmethod
    def from_rat(cls, q) -> "CycloNum":
        q = Fraction(q)
        return cls((q.numerator,) + (0,) * (DEG - 1), q.denominator, _raw=True)

    # -- inspection ------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_zero(self) -> bool:
        return not any(self.num)

    def to_rat(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def __complex__(self) -> complex:
        z = cmath.exp(1j * cmath.pi / 24)
        return sum(v * z**k for k, v in enumerate(self.num)) / self.den

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycloNum._make([a + b for a, b in zip(self.num, o.num)], self.den)
        d = self.den * o.den
        return CycloNum._make([a * o.den + b * self.den for a, b in zip(self.num, o.num)], d)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(tuple(-v for v in self.num), self.den, _raw=True)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloNum._make([v * q.numerator for v in self.num], self.den * q.denominator)
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        out = [0] * (2 * DEG - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CycloNum._make(_reduce(out), self.den * o.den)

    __rmul__ = __mul__

    def galois(self, j: int) -> "CycloNum":
        """Image under zeta -> zeta^j (j coprime to 48)."""
        out = [0] * DEG
        for k, v in enumerate(self.num):
            if v:
                z = _ZPOW[(j * k) % ORDER]
                for t in range(DEG):
                    if z[t]:
                        out[t] += v * z[t]
        return CycloNum._make(out, self.den)

    def conj(self) -> "CycloNum":
        return self.galois(-1)

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloNum.from_rat(1 / Fraction(self.num[0], self.den))
        # product of the other Galois conjugates, divided by the norm
        acc = CycloNum.from_rat(1)
        for j in _UNITS[1:]:
            acc = acc * self.galois(j)
        norm = (acc * self).to_rat()
        return acc * (1 / norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNum.from_rat(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.num == o.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den)) if not self.is_rational() else hash(Fraction(self.num[0], self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"CycloNum({Fraction(self.num[0], self.den)})"
        parts = [f"{Fraction(v, self.den)}*z^{k}" for k, v in enumerate(self.num) if v]
        return "CycloNum(" + " + ".join(parts) + ")"


def _coerce(x):
    if isinstance(x, CycloNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNum.from_rat(x)
    return None


def _build_powers():
    table = []
    for k in range(ORDER):
        c = [0] * max(DEG, k + 1)
        c[k] = 1
        table.append(tuple(_reduce(c)))
    return table


_ZPOW = _build_powers()
_UNITS = [j for j in range(1, ORDER) if gcd(j, ORDER) == 1]


def zeta_pow(k: int) -> CycloNum:
    return CycloNum(_ZPOW[k % ORDER], 1, _raw=True)


def cyclo_mul(a, b) -> CycloNum:
    return _coerce(a) * _coerce(b)


def cyclo_to_rat(a) -> Fraction:
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    return a.to_rat()


def simplify(c):
    """Collapse a rational CycloNum to int/Fraction; leave others alone."""
    if isinstance(c, CycloNum) and c.is_rational():
        q = Fraction(c.num[0], c.den)
        return q.numerator if q.denominator == 1 else q
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def sqrt2() -> CycloNum:
    return zeta_pow(6) + zeta_pow(-6)


def sqrt3() -> CycloNum:
    return zeta_pow(4) + zeta_pow(-4)


def root_index(c) -> int | None:
    """k such that c == zeta^k, or None."""
    if isinstance(c, (int, Fraction)):
        if c == 1:
            return 0
        if c == -1:
            return 24
        return None
    for k in range(ORDER):
        if c.den == 1 and c.num == _ZPOW[k]:
            return k
    return None


def to_json(c) -> dict:
    c = simplify(c)
    if isinstance(c, CycloNum):
        return {"cyclo": [str(Fraction(v, c.den)) for v in c.num]}
    q = Fraction(c)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def from_json(d: dict):
    if "cyclo" in d:
        return simplify(CycloNum([Fraction(v) for v in d["cyclo"]]))
    return simplify(Fraction(int(d["num"]), int(d["den"])))
