from math import comb

import pytest

from satotate.partitions import (
    NotInRectangle, OutOfRange, Partition, rect_subpartitions, tilde, transpose, zb_pairs,
    zb_to_lambda,
)


def test_transpose():
    assert transpose((2, 1, 1)) == (3, 1)
    assert transpose(()) == ()


def test_tilde_small_cases():
    assert tilde((1,), 1, 1).padded(1) == (0,)
    assert tilde((), 1, 1) == (1,)


def test_tilde_outside():
    with pytest.raises(NotInRectangle):
        tilde((3,), 2, 2)


@pytest.mark.parametrize("g,m", [(1, 1), (2, 3), (3, 2), (2, 4), (3, 3)])
def test_rectangle_count_and_involution(g, m):
    parts = rect_subpartitions(g, m)
    assert len(parts) == comb(g + m, g)
    assert len(set(parts)) == len(parts)
    tl = [tilde(p, m, g) for p in parts]
    assert sorted(tl) == sorted(rect_subpartitions(m, g))
    for p in parts:
        assert tilde(tilde(p, m, g), g, m) == p


def test_zb_examples():
    assert zb_to_lambda(0, 0, 1) == ((2,), ())
    assert zb_to_lambda(0, 1, 1) == ((), (1, 1))
    assert tilde((), 1, 2) == (1, 1)
    with pytest.raises(OutOfRange):
        zb_to_lambda(1, 0, 1)


def test_zb_round_trip_m4():
    for z, b in zb_pairs(4):
        lam, lt = zb_to_lambda(z, b, 4)
        assert tilde(lam, 4, 2) == lt


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert Partition((2, 1, 0)) == (2, 1)
