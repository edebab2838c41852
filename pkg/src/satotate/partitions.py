"""Partitions, conjugates, and the complement inside a g x m rectangle."""

from __future__ import annotations

from itertools import combinations


class NotInRectangle(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (zeros are trimmed)."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple:
        if len(self) > n:
            raise ValueError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self):
        return f"Partition{tuple(self)}"


def transpose(lam) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def fits(lam, g: int, m: int) -> bool:
    """lam sits inside the rectangle with m rows of length g."""
    lam = Partition(lam)
    return len(lam) <= m and (not lam or lam[0] <= g)


def tilde(lam, m: int, g: int) -> Partition:
    lam = Partition(lam)
    if not fits(lam, g, m):
        raise NotInRectangle(f"{tuple(lam)} is not inside ({g}^{m})")
    lt = transpose(lam).padded(g)
    return Partition(m - lt[g - 1 - i] for i in range(g))


def rect_subpartitions(g: int, m: int) -> list:
    """All partitions inside (g^m), in lexicographic order of their part tuples."""
    out = []
    # lattice paths: choose which of the g+m steps are vertical
    for cols in combinations(range(g + m), m):
        parts = sorted((c - i for i, c in enumerate(cols)), reverse=True)
        out.append(Partition(parts))
    return sorted(out, key=lambda p: p.padded(m))


def zb_to_lambda(z: int, b: int, m: int) -> tuple:
    """(lambda, lambda tilde) = ((2^(m-b-2z), 1^(2z)), (b+2z, b))."""
    if z < 0 or b < 0 or b + 2 * z > m:
        raise OutOfRange(f"(z, b) = ({z}, {b}) does not fit m = {m}")
    lam = Partition([2] * (m - b - 2 * z) + [1] * (2 * z))
    return lam, Partition((b + 2 * z, b))


def zb_pairs(m: int) -> list:
    return [(z, b) for b in range(m + 1) for z in range((m - b) // 2 + 1)]
