import math

import numpy as np
import pytest

from satotate import atlas as at
from satotate import montecarlo as mc
from satotate.coeffs import ALL_GROUPS

N = 40_000


@pytest.mark.parametrize("H", ALL_GROUPS + ("USp6",))
def test_samples_are_symplectic(H):
    M, c = mc.sample(H, np.random.default_rng(0), 300)
    assert mc.check_matrices(M)
    assert c.max() < mc.sampler(H).ncosets


@pytest.mark.parametrize("H", [H for H in ALL_GROUPS if H in at._GENERATED])
def test_coset_count_matches_atlas(H):
    assert mc.sampler(H).ncosets == at.components(H).cosets


def test_torus_mean_vanishes():
    M, _ = mc.sample("F", np.random.default_rng(1), N)
    v = (M[:, 0, 0] + M[:, 2, 2]).real
    assert abs(v.mean()) < 3 * math.sqrt(2 / N)


def test_su2_trace_second_moment():
    M, _ = mc.sample("E1", np.random.default_rng(2), N)
    t = np.abs(M[:, 0, 0] + M[:, 1, 1]) ** 2
    assert abs(t.mean() - 1) < 4 * t.std() / math.sqrt(N)


def test_jc2_twisted_cosets():
    S = mc.sampler("JC2")
    rng = np.random.default_rng(3)
    idx = rng.integers(len(S.gamma), size=4000)
    M = S.gamma[idx] @ mc.IDENTITY[S.kind](rng, 4000)
    twisted = np.array([abs(g[0, 0]) < 1e-12 for g in S.gamma])[idx]
    x = 0.37
    d = np.linalg.det(np.eye(4) + x * M).real
    allowed = np.array([1 - 2 * x ** 2 + x ** 4, 1 + 2 * x ** 2 + x ** 4])
    assert np.abs(d[twisted][:, None] - allowed).min(axis=1).max() < 1e-9
    assert 0.45 < twisted.mean() < 0.55


def test_usp4_autocorr():
    e = mc.estimate_autocorr("USp4", 1, [0.5], N, seed=5)
    assert e.sigma_distance <= 4


def test_ng33_autocorr_against_table():
    e = mc.estimate_autocorr("NG3,3", 1, [0.5], N, seed=6)
    assert e.sigma_distance <= 4


def test_c3_two_variables():
    e = mc.estimate_autocorr("C3", 2, [0.3, 0.7], N, seed=7)
    assert e.sigma_distance <= 4


@pytest.mark.parametrize("H,g,k,m", [("USp2", 1, 1, 4), ("USp4", 2, 2, 3), ("U1", 1, 1, 2)])
def test_moments(H, g, k, m):
    e = mc.estimate_moment(H, g, k, m, N, seed=8)
    assert e.sigma_distance <= 4
    assert e.exact == {("USp2", 4): 2, ("USp4", 3): 4}.get((H, m), e.exact)


def test_coset_frequencies():
    counts, p = mc.coset_frequencies("JO", 20_000, seed=9)
    assert counts.sum() == 20_000 and len(counts) == 48
    assert p > 1e-3


def test_deterministic_given_seed():
    a = mc.estimate_autocorr("D4", 1, [0.6], 5000, seed=11)
    b = mc.estimate_autocorr("D4", 1, [0.6], 5000, seed=11)
    assert a.estimate == b.estimate


def test_partial_group_report():
    r = mc.check_partial_rhs("NG1,3", n_samples=20_000)
    assert r.ok, r.detail
    assert r.method == "monte carlo"


def test_weyl_density_envelope():
    th = np.random.default_rng(0).random((20000, 3)) * np.pi
    assert mc.weyl_density(th).max() <= 4.0 ** 3
