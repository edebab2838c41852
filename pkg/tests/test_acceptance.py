"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its runtime.  Run with
``pytest tests/test_acceptance.py -v`` (lines appear inline), or directly
with ``python3 tests/test_acceptance.py``.
"""

import time

from satotate import atlas as at
from satotate import montecarlo as mc
from satotate import verify as v
from satotate.characters import dim_c2, kn_character, kn_enumerate, sp_poly
from satotate.coeffs import ALL_GROUPS, GENUS1, GENUS2, PARTIAL, genus1_m, m_coeff

FULL = [H for H in ALL_GROUPS if H not in PARTIAL]
SPOT_M4 = ["C1", "JC6", "O1", "Fa,b,c", "E4", "U2", "USp4"]
SIGMAS = 4.0
MC_SAMPLES = 100_000


def report(capsys, n, title, ok, elapsed, limit, extra=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"[{status}] criterion {n:2d}: {title} ({elapsed:.1f}s, limit {limit:g}s){extra}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, f"criterion {n} failed{extra}"
    assert elapsed < limit, f"criterion {n} took {elapsed:.1f}s"


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_c01_catalan_moments(capsys):
    got, t = timed(lambda: v.moments("USp2", 1, 1, 12))
    report(capsys, 1, "USp(2) moments are Catalan numbers", got == [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132], t, 1)


def test_c02_genus2_moments(capsys):
    def run():
        return v.moments("USp4", 2, 1, 8), v.moments("USp4", 2, 2, 8)
    (a1, a2), t = timed(run)
    ok = a1 == [1, 0, 1, 0, 3, 0, 14, 0, 84] and a2 == [1, 1, 2, 4, 10, 27, 82, 268, 940]
    report(capsys, 2, "USp(4) moments a1, a2 for m <= 8", ok, t, 10)


def test_c03_genus3_moments(capsys):
    want = {
        1: [1, 0, 1, 0, 3, 0, 15],
        2: [1, 1, 2, 5, 16, 62, 282],
        3: [1, 0, 2, 0, 23, 0, 684],
    }
    got, t = timed(lambda: {k: v.moments("USp6", 3, k, 6) for k in (1, 2, 3)})
    report(capsys, 3, "USp(6) moments a1, a2, a3 for m <= 6", got == want, t, 60)


def test_c04_table_cross_validation(capsys):
    def run():
        bad = []
        for H in FULL:
            if H in GENUS1:
                for a in range(7):
                    want = genus1_m(H, a // 2) if a % 2 == 0 else 0
                    if at.integrate_char(H, a) != want:
                        bad.append((H, a))
                continue
            for b in range(7):
                for z in range((6 - b) // 2 + 1):
                    if at.integrate_char(H, b + 2 * z, b) != m_coeff(H, z, b):
                        bad.append((H, z, b))
        return bad
    bad, t = timed(run)
    report(capsys, 4, f"exact integration = table for {len(FULL)} groups, b+2z <= 6",
           not bad and len(FULL) == 58, t, 300, f" mismatches={bad[:5]}" if bad else "")


def test_c05_autocorrelation_expansion(capsys):
    def run():
        bad = [(H, m) for H in FULL for m in (1, 2, 3)
               if at.autocorr_lhs(H, m) != v.autocorr_rhs(H, m)]
        bad += [(H, 4) for H in SPOT_M4 if at.autocorr_lhs(H, 4) != v.autocorr_rhs(H, 4)]
        return bad
    bad, t = timed(run)
    report(capsys, 5, "autocorrelation = character expansion (m <= 3 all, m = 4 spot set)",
           not bad, t, 600, f" failing={bad}" if bad else "")


def test_c06_identity_suites(capsys):
    def run():
        reps = [v.check_dual_cauchy(m, g) for m in range(1, 7) for g in range(1, 7) if m * g <= 6]
        reps += [v.check_identity_kappa(n, m) for n in v.NS for m in range(1, 6)]
        reps += [v.check_identity_e(m) for m in range(1, 6)]
        reps += [v.check_identity_f(m) for m in range(1, 6)]
        reps += [v.check_genus1_suite(m) for m in range(1, 7)]
        reps += [v.check_corollaries(m) for m in range(1, 5)]
        return reps
    reps, t = timed(run)
    bad = [r.line() for r in reps if not r.ok]
    report(capsys, 6, f"identity suites ({len(reps)} reports)", not bad, t, 600,
           f" failing={bad}" if bad else "")


def test_c07_branching(capsys):
    r, t = timed(lambda: v.check_branching_suite(8))
    report(capsys, 7, f"branching counts for a <= 8 ({r.checked} checks)", r.ok, t, 600,
           f" {r.detail}" if not r.ok else "")


def test_c08_tableau_oracle(capsys):
    def run():
        return [(a, b) for a in range(6) for b in range(a + 1)
                if kn_character(a, b) != sp_poly((a, b), 2, ("t1", "t2"))
                or len(kn_enumerate(a, b)) != dim_c2(a, b)]
    bad, t = timed(run)
    report(capsys, 8, "tableau character = bialternant, count = Weyl dimension (a <= 5)", not bad, t, 120)


def test_c09_integrality(capsys):
    def run():
        return [(H, z, b) for H in GENUS2 for z in range(13) for b in range(13)
                if (lambda q: q.denominator != 1 or q < 0)(m_coeff(H, z, b))]
    bad, t = timed(run)
    report(capsys, 9, "table entries are nonnegative integers (z, b <= 12)", not bad, t, 60)


def test_c10_monte_carlo(capsys):
    def run():
        worst, bad = 0.0, []
        for H in ALL_GROUPS:
            for xs in ((0.5,), (0.3, 0.7)):
                e = mc.estimate_autocorr(H, len(xs), xs, MC_SAMPLES)
                worst = max(worst, e.sigma_distance)
                if e.sigma_distance > SIGMAS:
                    bad.append((H, xs, round(e.sigma_distance, 2)))
        for H in PARTIAL:
            r = mc.check_partial_rhs(H, MC_SAMPLES)
            if not r.ok:
                bad.append((H, r.detail))
        return worst, bad
    (worst, bad), t = timed(run)
    report(capsys, 10, f"Monte Carlo within {SIGMAS:g} SE for all groups, m <= 2 (worst {worst:.2f})",
           not bad, t, 300, f" failing={bad}" if bad else "")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn(None)
            except AssertionError:
                pass
