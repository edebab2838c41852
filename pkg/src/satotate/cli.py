"""Command-line front end: ``satotate <command> [flags]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import atlas as at
from .characters import default_vars, sp_poly
from .coeffs import ALIASES, ALL_GROUPS, FAMILIES, GENUS1, GENUS2, display, m_coeff, table1_csv
from .partitions import zb_pairs

THREADS_ENV = "SATOTATE_THREADS"


class UsageError(Exception):
    pass


def _rat(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _ints(s: str, flag: str) -> tuple:
    try:
        return tuple(int(v) for v in s.split(",") if v.strip())
    except ValueError:
        raise UsageError(f"{flag}: expected comma separated integers, got {s!r}")


def _floats(s: str, flag: str) -> list:
    try:
        return [float(v) for v in s.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{flag}: expected comma separated numbers, got {s!r}")


def _group(name: str) -> str:
    try:
        return at.parse_group(name)
    except KeyError:
        raise UsageError(f"--group: unknown group {name!r} (see `satotate groups`)")


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(obj)


# ---------------------------------------------------------------------------
# commands

def cmd_char(a):
    lam = _ints(a.lam, "--lambda")
    if len(lam) > a.m:
        raise UsageError(f"--lambda: {len(lam)} parts but --m is {a.m}")
    p = sp_poly(lam, a.m, default_vars(a.m, a.var))
    _emit(p.to_json() if a.format == "json" else str(p), a.format)
    return 0


def cmd_dim(a):
    lam = _ints(a.lam, "--lambda")
    m = a.m or max(len(lam), 1)
    if len(lam) > m:
        raise UsageError(f"--lambda: {len(lam)} parts but --m is {m}")
    print(sum(sp_poly(lam, m).terms.values()))
    return 0


def cmd_coeff(a):
    if a.group:
        H = _group(a.group)
        if H in GENUS1:
            raise UsageError("--group: coefficients are tabulated for genus-2 groups")
        v = m_coeff(H, a.z, a.b)
    elif a.family:
        v = FAMILIES[a.family](a.n, a.z, a.b)
    else:
        raise UsageError("coeff: give --group or --family")
    print(_rat(v))
    return 0


def cmd_table1(a):
    groups = [_group(a.group)] if a.group else list(GENUS2)
    sys.stdout.write(table1_csv(groups, a.range))
    return 0


def cmd_groups(a):
    rows = {g: sorted(k for k, v in ALIASES.items() if v == g) for g in ALL_GROUPS}
    if a.format == "json":
        _emit({g: {"display": display(g), "aliases": al} for g, al in rows.items()}, "json")
    else:
        for g, al in rows.items():
            print(f"{g}\t{display(g)}\t{' '.join(al)}")
    return 0


def cmd_atlas(a):
    H = _group(a.group)
    if a.format == "json":
        print(at.dump_json(H, a.derived))
        return 0
    atl = at.components(H, a.derived)
    print(f"{atl.group}: genus {atl.genus}, {atl.cosets} cosets, exactness {atl.exactness}")
    for c in atl.components:
        print(f"  {_rat(c.weight):>6}  {c.charpoly()}  [{', '.join(f'{n}:{f.label}' for n, f in c.params)}]"
              + ("  (derived)" if c.derived else ""))
    return 0


def cmd_autocorr(a):
    H = _group(a.group)
    poly = at.autocorr_lhs(H, a.m, derived=a.derived)
    out = {"group": H, "m": a.m}
    if H in GENUS2:
        out["coefficients"] = {f"{z},{b}": _rat(m_coeff(H, z, b)) for z, b in zb_pairs(a.m)}
    if a.poly or a.format != "json":
        out["polynomial"] = poly.to_json() if a.format == "json" else str(poly)
    if a.format == "json":
        _emit(out, "json")
    else:
        for k, v in out.get("coefficients", {}).items():
            print(f"m({k}) = {v}")
        print(out["polynomial"])
    return 0


def cmd_moments(a):
    from .verify import moments
    H = _group(a.group)
    g = at.components(H).genus
    if not 1 <= a.k <= g:
        raise UsageError(f"--k: must lie in 1..{g} for {H}")
    print(",".join(str(v) for v in moments(H, g, a.k, a.max_m)))
    return 0


def _verify_job(job):
    from . import verify
    sid, params = job
    return [r.to_dict() for r in verify.run(sid, **params)]


def cmd_verify(a):
    from . import verify
    if a.list:
        for sid in verify.STATEMENTS:
            print(sid)
        return 0
    params = {}
    for key in ("group", "m", "n", "g"):
        v = getattr(a, key)
        if v is not None:
            params[key] = _group(v) if key == "group" else v
    if a.all:
        jobs = [(sid, {}) for sid in verify.STATEMENTS]
    elif a.id:
        if a.id not in verify.STATEMENTS:
            raise UsageError(f"--id: unknown statement {a.id!r} (see `verify --list`)")
        jobs = [(a.id, params)]
    else:
        raise UsageError("verify: give --all, --id or --list")
    threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(threads) as ex:
            results = list(ex.map(_verify_job, jobs))
    else:
        results = [_verify_job(j) for j in jobs]
    ok = True
    for batch in results:
        for r in batch:
            ok &= r["status"] == "pass"
            print(json.dumps(r, sort_keys=True))
    return 0 if ok else 1


def cmd_mc(a):
    from . import montecarlo as mc
    H = _group(a.group)
    xs = _floats(a.x, "--x") if a.x else [0.5] * a.m
    if len(xs) != a.m:
        raise UsageError(f"--x: need {a.m} values, got {len(xs)}")
    e = mc.estimate_autocorr(H, a.m, xs, a.samples, a.seed)
    _emit({"group": H, "m": a.m, "x": xs, "seed": a.seed, **e.to_dict()}, "json")
    return 0 if e.sigma_distance is None or e.sigma_distance <= 4 else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="satotate", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    fmt = {"choices": ("text", "json"), "default": "text"}

    s = sub.add_parser("char", help="irreducible Sp(2m) character")
    s.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,1")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--var", default="x")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("dim", help="dimension of an Sp(2m) irreducible")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("coeff", help="multiplicity m(z, b) for a group, or a coefficient family")
    s.add_argument("--group")
    s.add_argument("--family", choices=sorted(FAMILIES))
    s.add_argument("--n", type=int, default=1)
    s.add_argument("--z", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(func=cmd_coeff)

    s = sub.add_parser("table1", help="multiplicity table as long CSV")
    s.add_argument("--group")
    s.add_argument("--range", type=int, default=6, help="largest b + 2z")
    s.set_defaults(func=cmd_table1)

    s = sub.add_parser("groups", help="group names and accepted aliases")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_groups)

    s = sub.add_parser("atlas", help="component atlas of a group")
    s.add_argument("--group", required=True)
    s.add_argument("--derived", action="store_true", help="include derived twisted cosets")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_atlas)

    s = sub.add_parser("autocorr", help="exact auto-correlation polynomial")
    s.add_argument("--group", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--derived", action="store_true")
    s.add_argument("--poly", action="store_true", help="include the polynomial in JSON output")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_autocorr)

    s = sub.add_parser("moments", help="moment sequence a_k(m)")
    s.add_argument("--group", required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--max-m", type=int, default=8)
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("verify", help="exact verification suite")
    s.add_argument("--all", action="store_true")
    s.add_argument("--id")
    s.add_argument("--list", action="store_true")
    s.add_argument("--group")
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--g", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("mc", help="Monte Carlo estimate of the auto-correlation")
    s.add_argument("--group", required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--x", help="comma separated x values")
    s.add_argument("--samples", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=42)
    s.set_defaults(func=cmd_mc)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, at.PartialAtlas) as e:
        print(f"satotate {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
