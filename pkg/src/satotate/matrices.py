"""Exact 4x4 (and 2x2) matrices over Q(zeta_48) and the generators of the
Sato-Tate groups inside USp(4).

The symplectic form is ((0, I), (-I, 0)).  A unitary 2x2 matrix A sits in
USp(4) as block(A, conj(A)); a quaternion a+bi+cj+dk is the 2x2 matrix
[[a+bi, c+di], [-c+di, a-bi]].
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import CycloNum, simplify, sqrt2, zeta_pow


def _s(x):
    return simplify(x)


def mat(rows) -> tuple:
    return tuple(tuple(_s(x) for x in row) for row in rows)


def identity(n: int = 4) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mul(A, B) -> tuple:
    n = len(A)
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(n):
            acc = 0
            for k in range(n):
                a = Ai[k]
                if a:
                    b = B[k][j]
                    if b:
                        acc = acc + a * b
            row.append(_s(acc))
        out.append(tuple(row))
    return tuple(out)


def conj_scalar(x):
    if isinstance(x, CycloNum):
        return _s(x.conj())
    return x


def conj(A) -> tuple:
    return tuple(tuple(conj_scalar(x) for x in row) for row in A)


def transpose(A) -> tuple:
    return tuple(zip(*A))


def adjoint(A) -> tuple:
    return transpose(conj(A))


def block(A, B) -> tuple:
    n = len(A)
    z = (0,) * n
    return tuple(tuple(A[i]) + z for i in range(n)) + tuple(z + tuple(B[i]) for i in range(n))


def embed(A) -> tuple:
    """A unitary 2x2 matrix as block(A, conj(A))."""
    return block(A, conj(A))


def omega(n: int = 4) -> tuple:
    h = n // 2
    return tuple(
        tuple(1 if j == i + h else (-1 if i == j + h else 0) for j in range(n)) for i in range(n)
    )


def is_symplectic(A) -> bool:
    n = len(A)
    return mul(mul(transpose(A), omega(n)), A) == omega(n)


def is_unitary(A) -> bool:
    return mul(adjoint(A), A) == identity(len(A))


def to_complex(A) -> list:
    return [[complex(x) for x in row] for row in A]


I_ = zeta_pow(12)


def quaternion(a, b, c, d) -> tuple:
    return mat([[a + b * I_, c + d * I_], [-c + d * I_, a - b * I_]])


def quat_embed(a, b, c, d) -> tuple:
    return embed(quaternion(a, b, c, d))


def zeta_2n(n: int) -> tuple:
    """diag(e^{pi i/n}, e^{-pi i/n}) in the SU(2) block."""
    k = 24 // n
    return embed(mat([[zeta_pow(k), 0], [0, zeta_pow(-k)]]))


ONE = identity(4)
J = mat([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
QI = quat_embed(0, 1, 0, 0)
QJ = quat_embed(0, 0, 1, 0)
QK = quat_embed(0, 0, 0, 1)
_h = Fraction(1, 2)
QW = quat_embed(_h, _h, _h, _h)            # (1+i+j+k)/2
_r = sqrt2().inverse()
Q8 = quat_embed(_r, _r, 0, 0)               # (1+i)/sqrt(2)
A_ = mat([[0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1]])
B_ = mat([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0]])
C_ = mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
J2 = mat([[0, 1], [-1, 0]])


def diag_root(ks) -> tuple:
    n = len(ks)
    return tuple(tuple(_s(zeta_pow(ks[i])) if i == j else 0 for j in range(n)) for i in range(n))


def is_diagonal(A) -> bool:
    return all(not A[i][j] for i in range(len(A)) for j in range(len(A)) if i != j)


def closure(gens, n: int = 4) -> list:
    """All elements of the finite group generated by ``gens`` (breadth first)."""
    start = identity(n)
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mul(g, s)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
        if len(order) > 10000:
            raise RuntimeError("generated group is not finite (or too large)")
    return order
