"""Floating-point sampling of actual matrices from the Sato-Tate groups.

A group is sampled as (uniform element of a finite generating group Gamma)
times (Haar element of the identity component).  Gamma meets the identity
component in a subgroup K, so the coset of the finite factor in Gamma/K is
the connected component the sample lands in.  USp(2g) itself is sampled on
its maximal torus under the Weyl density, which suffices for class functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.stats import chisquare

from . import atlas as at
from . import matrices as mx
from .coeffs import GENUS1, PARTIAL
from .exactnum import simplify

DEFAULT_SEED = 20240229
CHUNK = 1 << 14


# ---------------------------------------------------------------------------
# identity components

def _circle(rng, n):
    return np.exp(2j * np.pi * rng.random(n))


def _su2(rng, n):
    """Haar SU(2) as unit quaternions a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]]."""
    q = rng.standard_normal((n, 4))
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    a, b, c, d = q.T
    out = np.empty((n, 2, 2), complex)
    out[:, 0, 0] = a + 1j * b
    out[:, 0, 1] = c + 1j * d
    out[:, 1, 0] = -c + 1j * d
    out[:, 1, 1] = a - 1j * b
    return out


def _embed(A):
    n = A.shape[0]
    out = np.zeros((n, 4, 4), complex)
    out[:, :2, :2] = A
    out[:, 2:, 2:] = A.conj()
    return out


def _diag(*cols):
    n = len(cols[0])
    out = np.zeros((n, len(cols), len(cols)), complex)
    for i, c in enumerate(cols):
        out[:, i, i] = c
    return out


def _planes(A, B):
    """A on coordinates (1, 3) and B on (2, 4)."""
    out = np.zeros((A.shape[0], 4, 4), complex)
    for (i, j), M in (((0, 2), A), ((1, 3), B)):
        out[:, i, i], out[:, i, j] = M[:, 0, 0], M[:, 0, 1]
        out[:, j, i], out[:, j, j] = M[:, 1, 0], M[:, 1, 1]
    return out


def weyl_density(theta):
    """Unnormalised USp(2g) density on eigen-angles: prod sin^2 * prod (cos - cos)^2."""
    c = np.cos(theta)
    w = np.prod(np.sin(theta) ** 2, axis=1)
    g = theta.shape[1]
    for i in range(g):
        for j in range(i + 1, g):
            w = w * (c[:, i] - c[:, j]) ** 2
    return w


def _usp_angles(rng, n, g):
    bound = 4.0 ** (g * (g - 1) // 2)
    out = np.empty((0, g))
    while len(out) < n:
        th = np.pi * rng.random((2 * n + 16, g))
        keep = rng.random(len(th)) * bound < weyl_density(th)
        out = np.concatenate([out, th[keep]])
    return out[:n]


def _usp(g):
    def sample(rng, n):
        t = np.exp(1j * _usp_angles(rng, n, g))
        return _diag(*([t[:, i] for i in range(g)] + [t[:, i].conj() for i in range(g)]))
    return sample


IDENTITY = {
    "C1": lambda rng, n: _diag(*(lambda u: (u, u, u.conj(), u.conj()))(_circle(rng, n))),
    "F": lambda rng, n: _diag(*(lambda u, v: (u, v, u.conj(), v.conj()))(_circle(rng, n), _circle(rng, n))),
    "SU2": lambda rng, n: _embed(_su2(rng, n)),
    "U2": lambda rng, n: _embed(_su2(rng, n) * _circle(rng, n)[:, None, None]),
    "G13": lambda rng, n: _planes(_diag(*(lambda u: (u, u.conj()))(_circle(rng, n))), _su2(rng, n)),
    "G33": lambda rng, n: _planes(_su2(rng, n), _su2(rng, n)),
    "U1g1": lambda rng, n: _diag(*(lambda u: (u, u.conj()))(_circle(rng, n))),
    "SU2g1": _su2,
}


# exact membership in the identity component, for elements of Gamma
def _support(g, allowed):
    n = len(g)
    return all(not g[i][j] for i in range(n) for j in range(n) if (i, j) not in allowed)


_DIAG4 = {(i, i) for i in range(4)}
_BLOCKS = {(i, j) for i in range(4) for j in range(4) if i // 2 == j // 2}
_PLANES = {(i, j) for i in range(4) for j in range(4) if i % 2 == j % 2}


def _is_embedded(g, special):
    if not _support(g, _BLOCKS):
        return False
    if any(g[i + 2][j + 2] != mx.conj_scalar(g[i][j]) for i in range(2) for j in range(2)):
        return False
    return not special or simplify(g[0][0] * g[1][1] - g[0][1] * g[1][0]) == 1


MEMBER = {
    "C1": lambda g: at._in_identity("C1", g),
    "F": lambda g: at._in_identity("F", g),
    "SU2": lambda g: _is_embedded(g, True),
    "U2": lambda g: _is_embedded(g, False),
    "G13": lambda g: _support(g, _PLANES) and not g[0][2] and not g[2][0]
    and g[2][2] == mx.conj_scalar(g[0][0]),
    "G33": lambda g: _support(g, _PLANES),
    "U1g1": lambda g: not g[0][1] and not g[1][0],
    "SU2g1": lambda g: True,
}


def _hand(H):
    if H[-2:-1] == "E" or H.startswith("JE"):
        n = int(H[-1])
        k = 24 // n
        gens = [mx.diag_root([k, k, -k, -k])] + ([mx.J] if H.startswith("J") else [])
        return "SU2", gens
    return {
        "U2": ("U2", []), "NU2": ("U2", [mx.J]),
        "G1,3": ("G13", []), "NG1,3": ("G13", [mx.A_]),
        "G3,3": ("G33", []), "NG3,3": ("G33", [mx.J]),
        "U1": ("U1g1", []), "NU1": ("U1g1", [mx.J2]), "USp2": ("SU2g1", []),
    }[H]


@dataclass
class GroupSampler:
    group: str
    kind: str
    gamma: np.ndarray          # finite factor as complex matrices
    coset: np.ndarray          # coset index of each element of gamma
    ncosets: int
    dim: int

    def sample(self, rng, n):
        """(matrices, coset ids) for n Haar samples."""
        if self.kind.startswith("USp"):
            return IDENTITY[self.kind](rng, n), np.zeros(n, int)
        idx = rng.integers(len(self.gamma), size=n)
        M = self.gamma[idx] @ IDENTITY[self.kind](rng, n)
        return M, self.coset[idx]


@lru_cache(maxsize=None)
def sampler(H: str) -> GroupSampler:
    key = at.parse_group(H)
    if key.startswith("USp") and key not in GENUS1:
        g = int(key[3:]) // 2
        IDENTITY.setdefault(f"USp{2 * g}", _usp(g))
        return GroupSampler(key, f"USp{2 * g}", np.zeros((1, 2 * g, 2 * g)), np.zeros(1, int), 1, 2 * g)
    if key in at._GENERATED:
        kind, gens = at._GENERATED[key]
    else:
        kind, gens = _hand(key)
    dim = 2 if key in GENUS1 else 4
    elems = mx.closure(gens, dim)
    member = MEMBER[kind]
    K = [g for g in elems if member(g)]
    coset = {}
    n = 0
    for g in elems:
        if g in coset:
            continue
        for k in K:
            coset[mx.mul(g, k)] = n
        n += 1
    gamma = np.array([mx.to_complex(g) for g in elems])
    return GroupSampler(key, kind, gamma, np.array([coset[g] for g in elems]), n, dim)


def sample(H: str, rng, n: int = 1):
    return sampler(H).sample(rng, n)


def check_matrices(M, tol: float = 1e-10) -> bool:
    """Unitarity and the symplectic condition, for a batch of matrices."""
    d = M.shape[-1]
    Om = np.array(mx.to_complex(mx.omega(d)))
    eye = np.eye(d)
    u = np.abs(np.conj(np.swapaxes(M, 1, 2)) @ M - eye).max()
    s = np.abs(np.swapaxes(M, 1, 2) @ Om @ M - Om).max()
    return bool(u < tol and s < tol)


# ---------------------------------------------------------------------------
# estimates

@dataclass
class Estimate:
    estimate: float
    stderr: float
    n: int
    exact: float | None = None

    @property
    def sigma_distance(self):
        if self.exact is None:
            return None
        if self.stderr == 0:
            return 0.0 if abs(self.estimate - self.exact) < 1e-12 else math.inf
        return abs(self.estimate - self.exact) / self.stderr

    def to_dict(self):
        return {"estimate": self.estimate, "stderr": self.stderr, "samples": self.n,
                "exact": self.exact, "sigma_distance": self.sigma_distance}


def _streams(seed, N):
    sizes = [CHUNK] * (N // CHUNK) + ([N % CHUNK] if N % CHUNK else [])
    seqs = np.random.SeedSequence(seed).spawn(len(sizes))
    return [(np.random.default_rng(s), n) for s, n in zip(seqs, sizes)]


def _mean(values) -> Estimate:
    vals = np.concatenate(values)
    n = len(vals)
    mu = math.fsum(vals) / n
    var = math.fsum((vals - mu) ** 2) / (n - 1)
    return Estimate(mu, math.sqrt(var / n), n)


def _sample_values(H, N, seed, f, coset=None):
    S = sampler(H)
    out = []
    for rng, n in _streams(seed, N):
        M, c = S.sample(rng, n)
        if coset is not None:
            M = M[c == coset]
        out.append(f(M))
    return out


def _det_products(M, xs):
    eye = np.eye(M.shape[-1])
    v = np.ones(len(M))
    for x in xs:
        v = v * np.linalg.det(eye + x * M).real
    return v


def exact_autocorr(H, xs) -> float:
    key = at.parse_group(H)
    m = len(xs)
    if key in PARTIAL:
        from .verify import autocorr_rhs
        p = autocorr_rhs(key, m)
    else:
        p = at.autocorr_lhs(key, m)
    return float(p.evaluate(list(xs)).real)


def estimate_autocorr(H: str, m: int, x_values, N: int = 100_000, seed: int = DEFAULT_SEED,
                      exact: bool = True, coset=None) -> Estimate:
    xs = [float(x) for x in x_values]
    if len(xs) != m:
        raise ValueError(f"need {m} x values, got {len(xs)}")
    est = _mean(_sample_values(H, N, seed, lambda M: _det_products(M, xs), coset))
    if exact and coset is None:
        est.exact = exact_autocorr(H, xs)
    return est


def _elementary(eigs, k):
    e = np.zeros((eigs.shape[0], k + 1), complex)
    e[:, 0] = 1
    for j in range(eigs.shape[1]):
        lam = eigs[:, j]
        for i in range(k, 0, -1):
            e[:, i] += lam * e[:, i - 1]
    return e[:, k].real


def estimate_moment(H: str, g: int, k: int, m: int, N: int = 100_000,
                    seed: int = DEFAULT_SEED, exact: bool = True) -> Estimate:
    key = at.parse_group(H)
    if sampler(key).dim != 2 * g:
        raise ValueError(f"{key} does not have genus {g}")
    est = _mean(_sample_values(key, N, seed, lambda M: _elementary(np.linalg.eigvals(M), k) ** m))
    if exact:
        est.exact = float(at.power_moment(key, k, m, derived=key in PARTIAL))
    return est


def coset_frequencies(H: str, N: int = 100_000, seed: int = DEFAULT_SEED):
    """(counts per coset, chi-square p-value against equal coset weights)."""
    S = sampler(H)
    counts = np.zeros(S.ncosets, int)
    for rng, n in _streams(seed, N):
        _, c = S.sample(rng, n)
        counts += np.bincount(c, minlength=S.ncosets)
    if S.ncosets == 1:
        return counts, 1.0
    return counts, float(chisquare(counts).pvalue)


def check_partial_rhs(H: str, n_samples: int = 100_000, seed: int = DEFAULT_SEED, sigmas: float = 4.0):
    """Table RHS against sampling for a group without a full exact atlas."""
    from .verify import VerificationReport, _combine, autocorr_rhs
    key = at.parse_group(H)
    parts = []
    trials = [(x,) for x in (0.3, 0.5, 0.8)] + [(0.3, 0.8)]
    for xs in trials:
        e = estimate_autocorr(key, len(xs), xs, n_samples, seed)
        ok = e.sigma_distance <= sigmas
        parts.append(VerificationReport("mc-rhs", {"group": key, "x": list(xs)},
                                        "pass" if ok else "fail", "monte carlo",
                                        "" if ok else f"{e.to_dict()}"))
    # the twisted coset on its own: 2 m(N) - m(identity)
    base = "G1,3" if key == "NG1,3" else "G3,3"
    for x in (0.3, 0.5, 0.8):
        e = estimate_autocorr(key, 1, (x,), n_samples, seed, exact=False, coset=1)
        e.exact = float((autocorr_rhs(key, 1) * 2 - autocorr_rhs(base, 1)).evaluate([x]).real)
        ok = e.sigma_distance <= sigmas
        parts.append(VerificationReport("mc-coset", {"group": key, "x": [x]},
                                        "pass" if ok else "fail", "monte carlo",
                                        "" if ok else f"{e.to_dict()}"))
    return _combine("mc-rhs", {"group": key}, parts, method="monte carlo")
