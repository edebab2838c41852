"""Closed-form multiplicities m_(b+2z, b) of the trivial representation.

The periodic families are stored as literal arrays indexed by
(z mod rows, b mod cols).  Table1 rows are rational combinations of the
families, written out group by group.
"""

from __future__ import annotations

import csv
import io
import re
from fractions import Fraction as F


class BadIndex(ValueError):
    pass


class UnknownGroup(KeyError):
    pass


class InternalMismatch(AssertionError):
    pass


def _d(p) -> int:
    return 1 if p else 0


# rows: z mod len(rows); columns: b mod len(row)
ETA_TABLE = {
    3: [[1, 0, 0],
        [1, -1, 0],
        [0, -1, 0]],
    4: [[1, 1, 0, 0],
        [2, 1, -1, 0],
        [1, -1, -2, 0],
        [0, -1, -1, 0]],
    6: [[1, 2, 2, 1, 0, 0],
        [3, 5, 4, 1, -1, 0],
        [4, 5, 2, -2, -3, 0],
        [3, 2, -2, -5, -4, 0],
        [1, -1, -4, -5, -3, 0],
        [0, -1, -2, -2, -1, 0]],
}

PSI_TABLE = {
    3: [[1, 0, 0, -1, 0, 0],
        [-1, 1, 0, 1, -1, 0],
        [0, -1, 0, 0, 1, 0]],
    4: [[1, -1, 0, 0],
        [0, 1, -1, 0],
        [-1, 1, 0, 0],
        [0, -1, 1, 0]],
    6: [[1, -2, 2, -1, 0, 0],
        [1, -1, 0, 1, -1, 0],
        [0, 1, -2, 2, -1, 0],
        [-1, 2, -2, 1, 0, 0],
        [-1, 1, 0, -1, 1, 0],
        [0, -1, 2, -2, 1, 0]],
}

THETA_TABLE = {
    3: [[1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, -1, 0],
        [0, -1, 0, 0, 0, 0]],
    4: [[1, 0, 0, 0],
        [1, 1, -1, 0],
        [0, 0, -1, 0],
        [0, -1, 0, 0]],
    6: [[1, 0, 2, 0, 0, 0],
        [2, 2, 2, 1, -1, 0],
        [2, 3, 0, 0, -2, 0],
        [1, 2, -2, -2, -2, 0],
        [0, 0, -2, -3, -1, 0],
        [0, -1, 0, -2, 0, 0]],
}

XI2_TABLE = [[1, 1, 0, 0],
             [0, -1, -1, 0]]

INDICES = (1, 2, 3, 4, 6)


def _lookup(table, z, b):
    row = table[z % len(table)]
    return F(row[b % len(row)])


def _check(z, b):
    if z < 0 or b < 0:
        raise ValueError("z and b must be nonnegative")


def eta(i: int, z: int, b: int) -> F:
    _check(z, b)
    if i == 1:
        return (b + 1) * (z * z + z * b + 2 * z + F(b, 2) + 1)
    if i == 2:
        if b % 2:
            return -F(b + 1, 2)
        return F(b, 2) + _d(z % 2 == 0)
    if i in ETA_TABLE:
        return _lookup(ETA_TABLE[i], z, b)
    raise BadIndex(f"eta_{i} is not defined")


def psi(i: int, z: int, b: int) -> F:
    _check(z, b)
    if i == 1:
        return (-1) ** b * (b + 1) * (z + F(b, 2) + 1)
    if i == 2:
        if b % 2:
            return (-1) ** z * F(b + 1, 2)
        return (-1) ** z * (z + F(b, 2) + 1)
    if i in PSI_TABLE:
        return _lookup(PSI_TABLE[i], z, b)
    raise BadIndex(f"psi_{i} is not defined")


def _theta_explicit(i: int, z: int, b: int) -> F:
    if i == 1:
        if b % 2:
            return F(z * (b + 1) * (z + b + 1), 2)
        return F((z + 1) * (b + 1) * (z + b + 2), 2)
    if i == 2:
        if b % 2:
            return -F(b + 1, 2) if z % 2 else F(0)
        return -F(z + 1, 2) if z % 2 else F(b, 2) + F(z, 2) + 1
    return _lookup(THETA_TABLE[i], z, b)


def theta(i: int, z: int, b: int) -> F:
    _check(z, b)
    if i not in INDICES:
        raise BadIndex(f"theta_{i} is not defined")
    explicit = _theta_explicit(i, z, b)
    halves = (eta(i, z, b) + psi(i, z, b)) / 2
    if explicit != halves:
        raise InternalMismatch(f"theta_{i}({z},{b}): {explicit} != {halves}")
    return explicit


def xi(i: int, z: int, b: int) -> F:
    _check(z, b)
    if i == 1:
        return F(z * (b + 1) + b // 2 + 1)
    if i == 2:
        return _lookup(XI2_TABLE, z, b)
    raise BadIndex(f"xi_{i} is not defined")


# weights of the averaged families over the cyclic group of order n
TILDE_WEIGHTS = {
    1: {1: F(1)},
    2: {1: F(1, 2), 2: F(1, 2)},
    3: {1: F(1, 3), 3: F(2, 3)},
    4: {1: F(1, 4), 2: F(1, 4), 4: F(1, 2)},
    6: {1: F(1, 6), 2: F(1, 6), 3: F(1, 3), 6: F(1, 3)},
}

FAMILIES = {"eta": eta, "psi": psi, "theta": theta, "xi": xi}


def tilde(family: str, n: int, z: int, b: int) -> F:
    if n not in TILDE_WEIGHTS:
        raise BadIndex(f"no averaged family for n = {n}")
    f = FAMILIES[family]
    return sum((w * f(i, z, b) for i, w in TILDE_WEIGHTS[n].items()), F(0))


# ---------------------------------------------------------------------------
# Groups

GENUS2 = (
    "C1", "C2", "C3", "C4", "C6", "D2", "D3", "D4", "D6", "T", "O",
    "JC1", "JC2", "JC3", "JC4", "JC6", "JD2", "JD3", "JD4", "JD6", "JT", "JO",
    "C2,1", "C4,1", "C6,1", "D2,1", "D4,1", "D6,1", "D3,2", "D4,2", "D6,2", "O1",
    "E1", "E2", "E3", "E4", "E6", "JE1", "JE2", "JE3", "JE4", "JE6",
    "U2", "NU2",
    "F", "Fa", "Fc", "Fab", "Fac", "Fa,b", "Fab,c", "Fa,b,c",
    "G1,3", "NG1,3", "G3,3", "NG3,3", "USp4",
)
GENUS1 = ("U1", "NU1", "USp2")
ALL_GROUPS = GENUS2 + GENUS1
PARTIAL = ("NG1,3", "NG3,3")

DISPLAY = {
    "JC1": "J(C_1)", "JC2": "J(C_2)", "JC3": "J(C_3)", "JC4": "J(C_4)", "JC6": "J(C_6)",
    "JD2": "J(D_2)", "JD3": "J(D_3)", "JD4": "J(D_4)", "JD6": "J(D_6)",
    "JT": "J(T)", "JO": "J(O)",
    "JE1": "J(E_1)", "JE2": "J(E_2)", "JE3": "J(E_3)", "JE4": "J(E_4)", "JE6": "J(E_6)",
    "U2": "U(2)", "NU2": "N(U(2))", "U1": "U(1)", "NU1": "N(U(1))",
    "USp4": "USp(4)", "USp2": "USp(2)",
    "Fa,b": "F_{a,b}", "Fab,c": "F_{ab,c}", "Fa,b,c": "F_{a,b,c}",
    "G1,3": "G_{1,3}", "NG1,3": "N(G_{1,3})", "G3,3": "G_{3,3}", "NG3,3": "N(G_{3,3})",
}

# extra spellings that the normaliser below cannot recover on its own
_EXTRA_ALIASES = {
    "fabc": "Fa,b,c", "fa_b_c": "Fa,b,c", "fa_b": "Fa,b", "fab_c": "Fab,c",
    "c21": "C2,1", "c41": "C4,1", "c61": "C6,1", "d21": "D2,1", "d41": "D4,1",
    "d61": "D6,1", "d32": "D3,2", "d42": "D4,2", "d62": "D6,2",
    "g13": "G1,3", "ng13": "NG1,3", "g33": "G3,3", "ng33": "NG3,3",
}


def _norm(name: str) -> str:
    s = re.sub(r"[\s{}()\\]", "", name)
    s = s.replace("mathtt", "").replace("operatorname", "")
    # C_{2,1} -> C2,1 ; C2_1 -> C2,1 ; F_a -> Fa
    s = re.sub(r"(?<=\d)_(?=\d)", ",", s)
    s = s.replace("_", "")
    return s.lower()


ALIASES = {_norm(g): g for g in ALL_GROUPS}
ALIASES.update({_norm(v): k for k, v in DISPLAY.items()})
ALIASES.update(_EXTRA_ALIASES)


def canonical(name: str) -> str:
    key = _norm(name)
    if key in ALIASES:
        return ALIASES[key]
    raise UnknownGroup(name)


def display(group: str) -> str:
    return DISPLAY.get(group, group)


def genus(group: str) -> int:
    return 1 if canonical(group) in GENUS1 else 2


def _comb(fam: str, parts: dict):
    f = FAMILIES[fam]
    return lambda z, b: sum((F(w) * f(i, z, b) for i, w in parts.items()), F(0))


def _sum(*fs):
    return lambda z, b: sum((f(z, b) for f in fs), F(0))


_h = F(1, 2)

TABLE1 = {
    "C1": _comb("eta", {1: 1}),
    "C2": _comb("eta", {1: _h, 2: _h}),
    "C3": _comb("eta", {1: F(1, 3), 3: F(2, 3)}),
    "C4": _comb("eta", {1: F(1, 4), 2: F(1, 4), 4: _h}),
    "C6": _comb("eta", {1: F(1, 6), 2: F(1, 6), 3: F(1, 3), 6: F(1, 3)}),
    "D2": _comb("eta", {1: F(1, 4), 2: F(3, 4)}),
    "D3": _comb("eta", {1: F(1, 6), 2: _h, 3: F(1, 3)}),
    "D4": _comb("eta", {1: F(1, 8), 2: F(5, 8), 4: F(1, 4)}),
    "D6": _comb("eta", {1: F(1, 12), 2: F(7, 12), 3: F(1, 6), 6: F(1, 6)}),
    "T": _comb("eta", {1: F(1, 12), 2: F(1, 4), 3: F(2, 3)}),
    "O": _comb("eta", {1: F(1, 24), 2: F(3, 8), 3: F(1, 3), 4: F(1, 4)}),
    "JC1": _comb("theta", {1: 1}),
    "JC2": _comb("theta", {1: _h, 2: _h}),
    "JC3": _comb("theta", {1: F(1, 3), 3: F(2, 3)}),
    "JC4": _comb("theta", {1: F(1, 4), 2: F(1, 4), 4: _h}),
    "JC6": _comb("theta", {1: F(1, 6), 2: F(1, 6), 3: F(1, 3), 6: F(1, 3)}),
    "JD2": _comb("theta", {1: F(1, 4), 2: F(3, 4)}),
    "JD3": _comb("theta", {1: F(1, 6), 2: _h, 3: F(1, 3)}),
    "JD4": _comb("theta", {1: F(1, 8), 2: F(5, 8), 4: F(1, 4)}),
    "JD6": _comb("theta", {1: F(1, 12), 2: F(7, 12), 3: F(1, 6), 6: F(1, 6)}),
    "JT": _comb("theta", {1: F(1, 12), 2: F(1, 4), 3: F(2, 3)}),
    "JO": _comb("theta", {1: F(1, 24), 2: F(3, 8), 3: F(1, 3), 4: F(1, 4)}),
    "C2,1": _sum(_comb("eta", {1: _h}), _comb("psi", {2: _h})),
    "C4,1": _sum(_comb("eta", {1: F(1, 4), 2: F(1, 4)}), _comb("psi", {4: _h})),
    "C6,1": _sum(_comb("eta", {1: F(1, 6), 3: F(1, 3)}), _comb("psi", {2: F(1, 6), 6: F(1, 3)})),
    "D2,1": _sum(_comb("eta", {1: F(1, 4), 2: F(1, 4)}), _comb("psi", {2: _h})),
    "D4,1": _sum(_comb("eta", {1: F(1, 8), 2: F(3, 8)}), _comb("psi", {2: F(1, 4), 4: F(1, 4)})),
    "D6,1": _sum(_comb("eta", {1: F(1, 12), 2: F(1, 4), 3: F(1, 6)}),
                 _comb("psi", {2: F(1, 3), 6: F(1, 6)})),
    "D3,2": _sum(_comb("eta", {1: F(1, 6), 3: F(1, 3)}), _comb("psi", {2: _h})),
    "D4,2": _sum(_comb("eta", {1: F(1, 8), 2: F(1, 8), 4: F(1, 4)}), _comb("psi", {2: _h})),
    "D6,2": _sum(_comb("eta", {1: F(1, 12), 2: F(1, 12), 3: F(1, 6), 6: F(1, 6)}),
                 _comb("psi", {2: _h})),
    "O1": _sum(_comb("eta", {1: F(1, 24), 2: F(1, 8), 3: F(1, 3)}),
               _comb("psi", {2: F(1, 4), 4: F(1, 4)})),
    "E1": lambda z, b: F(b + 1),
    "E2": lambda z, b: F((b + 1) * _d(b % 2 == 0)),
    "E3": lambda z, b: F(b // 3 + 1 - _d(b % 3 == 1)),
    "E4": lambda z, b: F((2 * (b // 4) + 1) * _d(b % 2 == 0)),
    "E6": lambda z, b: F((2 * (b // 6) + 1) * _d(b % 2 == 0)),
    "JE1": lambda z, b: F(b + 1, 2) + _h * (-1) ** z * _d(b % 2 == 0),
    "JE2": lambda z, b: (F(b, 2) + _d(z % 2 == 0)) * _d(b % 2 == 0),
    "JE3": lambda z, b: _h * (b // 3 + 1 - _d(b % 3 == 1)) + _h * (-1) ** z * _d(b % 2 == 0),
    "JE4": lambda z, b: F((b // 4 + _d(z % 2 == 0)) * _d(b % 2 == 0)),
    "JE6": lambda z, b: F((b // 6 + _d(z % 2 == 0)) * _d(b % 2 == 0)),
    "U2": lambda z, b: F(_d(b % 2 == 0)),
    "NU2": lambda z, b: F(_d(b % 2 == 0) * _d(z % 2 == 0)),
    "F": _comb("xi", {1: 1}),
    "Fa": _comb("xi", {1: _h, 2: _h}),
    "Fc": _sum(_comb("xi", {1: _h}), _comb("eta", {2: _h})),
    "Fab": _sum(_comb("xi", {1: _h}), _comb("psi", {2: _h})),
    "Fac": _sum(_comb("xi", {1: F(1, 4)}), _comb("psi", {2: F(1, 4), 4: _h})),
    "Fa,b": _sum(_comb("xi", {1: F(1, 4), 2: _h}), _comb("psi", {2: F(1, 4)})),
    "Fab,c": _sum(_comb("xi", {1: F(1, 4)}), _comb("psi", {2: F(1, 4)}), _comb("eta", {2: _h})),
    "Fa,b,c": _sum(_comb("xi", {1: F(1, 8), 2: F(1, 4)}), _comb("psi", {2: F(1, 8), 4: F(1, 4)}),
                   _comb("eta", {2: F(1, 4)})),
    "G1,3": lambda z, b: F(1),
    "NG1,3": lambda z, b: F(_d(z % 2 == 0)),
    "G3,3": lambda z, b: F(_d(z == 0)),
    "NG3,3": lambda z, b: F(_d(b % 2 == 0) * _d(z == 0)),
    "USp4": lambda z, b: F(_d(b == 0) * _d(z == 0)),
}


def m_coeff(H: str, z: int, b: int) -> F:
    H = canonical(H)
    if H not in TABLE1:
        raise UnknownGroup(f"{H} is a genus-1 group; use genus1_m")
    _check(z, b)
    return TABLE1[H](z, b)


def genus1_m(H: str, j: int) -> int:
    H = canonical(H)
    if j < 0:
        raise ValueError("j must be nonnegative")
    if H == "U1":
        return 1
    if H == "USp2":
        return _d(j == 0)
    if H == "NU1":
        return _d(j % 2 == 0)
    raise UnknownGroup(f"{H} is not a genus-1 group")


def table1_csv(groups=None, zb_max: int = 6) -> str:
    """Long-format CSV (group, z, b, value) for all b + 2z <= zb_max."""
    groups = [canonical(g) for g in (groups or GENUS2)]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "z", "b", "value"])
    for g in groups:
        for b in range(zb_max + 1):
            for z in range((zb_max - b) // 2 + 1):
                v = m_coeff(g, z, b)
                w.writerow([g, z, b, f"{v.numerator}/{v.denominator}"])
    return buf.getvalue()
