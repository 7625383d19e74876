"""Command-line driver: ``gl3bethe {verify,build,onshell,bench}``.

Exit codes: 0 success, 1 failed identity or no convergence, 2 bad usage or
configuration.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .actions import eigenvalue
from .bethe import METHODS, TRACE_MAX_ROOTS, TRACE_MAX_SITES, build
from .chain import MonodromyChain
from .errors import DegenerateRoots, Gl3BetheError, NoConvergence
from .onshell import FLOAT_EPS, check_onshell, float_chain, probe_points, solve_bethe
from .report import rational_str
from .scalars import GenericSampler, as_rational
from .suites import SUITES, SuiteConfig, run_suite

OK, FAILED, USAGE = 0, 1, 2


class ConfigError(Exception):
    pass


def _rationals(text: str | None) -> tuple | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(as_rational(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse rational list {text!r}: {exc}") from None


def _indices(text: str | None) -> tuple | None:
    if text is None:
        return None
    text = text.strip()
    if text in ("", "none"):
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse site indices {text!r}") from None


def _config(args) -> SuiteConfig:
    try:
        c = as_rational(args.c)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"cannot parse c = {args.c!r}") from None
    thetas = None if args.theta in (None, "random") else _rationals(args.theta)
    L = args.L if thetas is None or args.L_given else len(thetas)
    try:
        return SuiteConfig(
            c=c, L=L, thetas=thetas, dual=_indices(args.dual), seed=args.seed,
            trials=getattr(args, "trials", 25), draws=getattr(args, "draws", 5),
            a_max=getattr(args, "a_max", 2), b_max=getattr(args, "b_max", 2), n_max=getattr(args, "n_max", 2),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _single_chain(cfg: SuiteConfig) -> MonodromyChain:
    return MonodromyChain(cfg.resolved_thetas(), cfg.c, cfg.dual or ())


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    cfg = _config(args)
    report = run_suite(args.suite, cfg)
    rows = report.summary()
    width = max([len(r[0]) for r in rows] + [8])
    print(f"{'identity':<{width}}  {'trials':>6}  {'failed':>6}  status")
    for name, trials, failed in rows:
        print(f"{name:<{width}}  {trials:>6}  {failed:>6}  {'pass' if failed == 0 else 'FAIL'}")
    total, bad = len(report.cases), len(report.failures())
    print(f"{total} checks, {bad} failed")
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "trials", "failed"])
        writer.writerows(rows)
        _write(args.out, buf.getvalue())
    else:
        _write(args.out, report.dumps())
    return OK if report.passed else FAILED


# -- build -------------------------------------------------------------------

def _roots(args, cfg: SuiteConfig, chain: MonodromyChain) -> tuple[tuple, tuple]:
    us, vs = _rationals(args.u), _rationals(args.v)
    if us is not None and args.a is not None and len(us) != args.a:
        raise ConfigError(f"--a {args.a} disagrees with {len(us)} values in --u")
    if vs is not None and args.b is not None and len(vs) != args.b:
        raise ConfigError(f"--b {args.b} disagrees with {len(vs)} values in --v")
    sampler = GenericSampler(cfg.seed, cfg.c)
    taken = list(chain.thetas) + list(us or ()) + list(vs or ())
    if us is None:
        us = tuple(sampler.draw(args.a or 0, avoid=taken))
        taken += us
    if vs is None:
        vs = tuple(sampler.draw(args.b or 0, avoid=taken))
    return us, vs


def cmd_build(args) -> int:
    cfg = _config(args)
    chain = _single_chain(cfg)
    us, vs = _roots(args, cfg, chain)
    bv = build(chain, us, vs, args.method, args.pivot)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["word", "num", "den"])
        for e in bv.to_json()["entries"]:
            writer.writerow([e["word"], e["num"], e["den"]])
        _write(args.out, buf.getvalue())
    else:
        _write(args.out, json.dumps(bv.to_json(), indent=2, sort_keys=True))
    print(f"entries {len(bv.state)}", file=sys.stderr if args.out == "-" else sys.stdout)
    print(f"digest {bv.digest()}", file=sys.stderr if args.out == "-" else sys.stdout)
    return OK


# -- onshell -----------------------------------------------------------------

def _cstr(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}j"


def cmd_onshell(args) -> int:
    cfg = _config(args)
    chain = _single_chain(cfg)
    a, b = args.a or 0, args.b or 0
    if a + b < 1:
        raise ConfigError("nothing to solve: need a + b >= 1")
    if args.tol < 10 * FLOAT_EPS:
        raise ConfigError(f"tolerance {args.tol:g} is unreachable in double precision")
    try:
        roots = solve_bethe(chain, a, b, tol=args.tol, starts=args.starts, seed=cfg.seed)
    except (NoConvergence, DegenerateRoots) as exc:
        print(f"no solution: {exc}")
        return FAILED
    print("u roots:", ", ".join(_cstr(z) for z in roots.us) or "-")
    print("v roots:", ", ".join(_cstr(z) for z in roots.vs) or "-")
    print(f"max Bethe residual: {roots.max_residual:.3e}")
    probes = probe_points(chain, args.probes, cfg.seed)
    fchain = float_chain(chain)
    cases = check_onshell(chain, roots, probes, tol=args.eigen_tol)
    for w, case in zip(probes, cases):
        lam = eigenvalue(fchain, roots.us, roots.vs, complex(w))
        print(f"w = {rational_str(w):>8}  Lambda = {_cstr(complex(lam))}  residual = {case.residual:.3e}  {case.status}")
    return OK if all(c.passed for c in cases) else FAILED


# -- bench -------------------------------------------------------------------

def cmd_bench(args) -> int:
    cfg = _config(args)
    rows = []
    skipped = False
    for L in range(1, cfg.L + 1):
        thetas = GenericSampler(cfg.seed + L, cfg.c).draw(L)
        for a in range(cfg.a_max + 1):
            for b in range(cfg.b_max + 1):
                for method in METHODS:
                    if method == "trace" and (a + b > TRACE_MAX_ROOTS or L > TRACE_MAX_SITES):
                        skipped = True
                        continue
                    # a fresh chain per row keeps monodromy caching out of the timings
                    chain = MonodromyChain(thetas, cfg.c, cfg.dual or ())
                    sampler = GenericSampler(cfg.seed, cfg.c)
                    vals = sampler.draw(a + b, avoid=thetas)
                    start = time.perf_counter()
                    bv = build(chain, vals[:a], vals[a:], method)
                    millis = (time.perf_counter() - start) * 1000
                    rows.append({"method": method, "a": a, "b": b, "L": L, "terms": bv.terms, "millis": round(millis, 3)})
    if args.format == "json":
        _write(args.out, json.dumps(rows, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, ["method", "a", "b", "L", "terms", "millis"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _write(args.out, buf.getvalue())
    if skipped:
        print(f"note: trace rows omitted for a+b > {TRACE_MAX_ROOTS} or L > {TRACE_MAX_SITES}", file=sys.stderr)
    return OK


# -- parser ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c", default="1", help="nonzero rational constant, e.g. 1 or 3/2")
    p.add_argument("--L", type=int, default=None, help="number of sites (default 3)")
    p.add_argument("--theta", default=None, help='comma-separated "p/q" inhomogeneities, or "random"')
    p.add_argument("--dual", default=None, help='comma-separated 0-based sites carrying the dual representation')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gl3bethe", description="Exact checks of GL(3) Bethe vector formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run identity suites and write a JSON report")
    _common(p)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--draws", type=int, default=5, help="random draws for the heavier operator suites")
    p.add_argument("--a-max", dest="a_max", type=int, default=2)
    p.add_argument("--b-max", dest="b_max", type=int, default=2)
    p.add_argument("--n-max", dest="n_max", type=int, default=2)
    p.add_argument("--out", default="report.json", help='output file, "-" for stdout')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("build", help="build one Bethe vector and dump it")
    _common(p)
    p.add_argument("--method", choices=METHODS, default="explicit1")
    p.add_argument("--pivot", type=int, default=0, help="root removed first by the recursions")
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--u", default=None, help='comma-separated "p/q" values')
    p.add_argument("--v", default=None, help='comma-separated "p/q" values')
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("onshell", help="solve the Bethe equations numerically and test the eigenvector")
    _common(p)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--eigen-tol", dest="eigen_tol", type=float, default=1e-8)
    p.add_argument("--starts", type=int, default=200)
    p.add_argument("--probes", type=int, default=5)
    p.set_defaults(func=cmd_onshell)

    p = sub.add_parser("bench", help="time every construction over a grid of sizes")
    _common(p)
    p.add_argument("--a-max", dest="a_max", type=int, default=2)
    p.add_argument("--b-max", dest="b_max", type=int, default=2)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.L_given = args.L is not None
    if args.L is None:
        args.L = 3
    if args.format is None:
        args.format = "csv" if args.command == "bench" else "json"
    try:
        return args.func(args)
    except (ConfigError, Gl3BetheError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
