"""Acceptance criteria, each at its stated size, tolerance and time budget.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""
import math
import time
from fractions import Fraction as F

import pytest

from gl3bethe.chain import MonodromyChain
from gl3bethe.cli import main
from gl3bethe.errors import DegenerateRoots, NoConvergence
from gl3bethe.identities import check_ik_identities
from gl3bethe.onshell import chain_scale, check_onshell, eigen_residual, probe_points, solve_bethe
from gl3bethe.report import Report
from gl3bethe.scalars import GenericSampler
from gl3bethe.suites import (
    SuiteConfig,
    run_suite,
    suite_actions,
    suite_appendix,
    suite_bethe,
    suite_exchange,
    suite_r_matrix,
    suite_rtt,
)

SEED = 2024


def _chains(L):
    return SuiteConfig(L=L, seed=SEED).chains()


def _finish(criterion, name, report: Report, started: float, budget: float, required=()):
    elapsed = time.perf_counter() - started
    names = {n for n, _, _ in report.summary()}
    missing = [r for r in required if r not in names]
    ok = report.passed and elapsed < budget and not missing and len(report.cases) > 0
    detail = f"({len(report.cases)} checks, {len(report.failures())} failed, {elapsed:.1f} s of {budget:.0f} s)"
    if missing:
        detail += f" missing: {missing}"
    criterion(name, ok, detail)
    assert not missing, missing
    assert report.passed, [(c.identity, c.params) for c in report.failures()[:5]]
    assert elapsed < budget


def test_criterion_1_determinant_identities(criterion):
    start = time.perf_counter()
    report = check_ik_identities(trials=100, seed=SEED, n_max=3)
    per_identity = {n: t for n, t, _ in report.summary()}
    assert min(per_identity.values()) >= 100
    _finish(criterion, "criterion 1: determinant identities, partition lemma, big-K reductions", report, start, 30,
            required=("K residue at x_n = y_n", "K partition-sum lemma, second form", "big K reduction onto y, row type"))


def test_criterion_2_r_matrix(criterion):
    start = time.perf_counter()
    report = suite_r_matrix(SuiteConfig(trials=20, seed=SEED))
    _finish(criterion, "criterion 2: Yang-Baxter, unitarity, GL(3) invariance", report, start, 10,
            required=("Yang-Baxter equation", "R-matrix unitarity", "GL(3) invariance of R"))


def test_criterion_3_rtt_and_commutators(criterion):
    start = time.perf_counter()
    report = Report("chain")
    for L in (2, 3):
        report.extend(suite_rtt(SuiteConfig(L=L, seed=SEED), chains=_chains(L), draws=20))
    _finish(criterion, "criterion 3: RTT relation and both commutator forms, L = 2, 3", report, start, 60,
            required=("RTT relation", "commutator, first form", "commutator, second form"))


def test_criterion_4_exchange_relations(criterion):
    start = time.perf_counter()
    report = suite_exchange(SuiteConfig(L=2, seed=SEED), chains=_chains(2), draws=5)
    _finish(criterion, "criterion 4: multiple exchange relations, twins, gl2 indices, one-operator forms", report,
            start, 300, required=("exchange T_ij(y) T_ik(x)", "exchange T_ij(y) T_kj(x), twin",
                                  "exchange T_ij(y) T_ik(x), gl2 indices", "T11 past a product of T12",
                                  "product of T21 past T11", "T13 past T12, two-term form"))


def test_criterion_5_construction_routes(criterion):
    start = time.perf_counter()
    report = Report("bethe")
    for L in (2, 3):
        for draw in range(3):
            cfg = SuiteConfig(L=L, seed=SEED + draw)
            report.extend(suite_bethe(cfg, chains=_chains(L)))
    methods = {c.params["method"] for c in report.cases if "method" in c.params}
    assert methods == {"explicit2", "explicit3", "explicit4", "recursion-u", "recursion-v", "trace"}
    _finish(criterion, "criterion 5: all construction routes agree, permutation symmetry", report, start, 600,
            required=("construction routes agree", "symmetry under permuting u and v"))


def test_criterion_6_multiple_actions(criterion):
    start = time.perf_counter()
    report = Report("actions")
    for L in (2, 3):
        report.extend(suite_actions(SuiteConfig(L=L, seed=SEED, n_max=2), chains=_chains(L), draws=5))
    labels = {c.identity for c in report.cases}
    assert {f"multiple action of T{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)} <= labels
    _finish(criterion, "criterion 6: nine multiple actions, n = 1, 2, and composition", report, start, 900,
            required=("composition of T22 actions", "single action of T11"))


def test_criterion_7_transfer_action(criterion):
    from gl3bethe.actions import check_unwanted_vanishing, transfer_action_offshell

    start = time.perf_counter()
    report = Report("actions")
    sampler = GenericSampler(SEED)
    for L in (2, 3):
        for chain in _chains(L):
            for a, b in ((1, 1), (2, 1), (2, 2)):
                vals = sampler.draw(a + b + 1, avoid=chain.thetas)
                us, vs, w = tuple(vals[:a]), tuple(vals[a:a + b]), vals[-1]
                for case in transfer_action_offshell(chain, us, vs, w):
                    report.add(case)
                report.add(check_unwanted_vanishing(chain, us, vs, w))
    _finish(criterion, "criterion 7: off-shell transfer action and eigenvalue extraction", report, start, 300,
            required=("off-shell transfer action", "eigenvalue extracted from transfer action"))


def test_criterion_8_triangular_relation_and_g_identity(criterion):
    start = time.perf_counter()
    report = Report("appendix")
    for L in (2, 3):
        report.extend(suite_appendix(SuiteConfig(L=L, seed=SEED), chains=_chains(L)))
    bs = {c.params["b"] for c in report.cases if c.identity.startswith("G coefficient")}
    assert bs == {1, 2, 3, 4, 5}
    _finish(criterion, "criterion 8: triangular X_j relation, G coefficient identity", report, start, 300,
            required=("triangular X_j relation", "G coefficient, sum form equals product form"))


def _onshell(criterion, name, chain, a, b):
    start = time.perf_counter()
    try:
        roots = solve_bethe(chain, a, b, tol=1e-10)
    except (NoConvergence, DegenerateRoots) as exc:
        criterion(name, False, f"(solver: {exc})")
        raise
    cases = check_onshell(chain, roots, probe_points(chain, 5, seed=SEED), tol=1e-8)
    worst = max(c.residual for c in cases)
    ok = roots.max_residual < 1e-10 and all(c.passed for c in cases)
    criterion(name, ok, f"(Bethe residual {roots.max_residual:.1e}, eigenvector residual {worst:.1e}, "
                        f"{time.perf_counter() - start:.1f} s)")
    assert roots.max_residual < 1e-10
    assert all(c.passed for c in cases)


def test_criterion_9a_two_sites_one_root_each(criterion):
    # On the all-fundamental chain lambda_2 = lambda_3, so the v equation reads
    # f(v, u) = 1, i.e. g(v, u) = 0: no finite root set exists.
    _onshell(criterion, "criterion 9a: on-shell, L = 2, a = b = 1, fundamental chain",
             MonodromyChain([F(0), F(1, 3)]), 1, 1)


def test_criterion_9b_three_sites_two_and_one(criterion):
    _onshell(criterion, "criterion 9b: on-shell, L = 3, a = 2, b = 1, fundamental chain",
             MonodromyChain([F(0), F(1, 3), F(5, 2)]), 2, 1)


def test_criterion_9c_off_shell_anti_test(criterion):
    # off-shell roots at the same scale as genuine ones
    chain = MonodromyChain([F(0), F(1, 3), F(5, 2)])
    window = 2 * math.ceil(chain_scale(chain))
    vals = GenericSampler(SEED, window=window).draw(3, avoid=chain.thetas)
    residuals = [eigen_residual(chain, vals[:2], vals[2:], w) for w in probe_points(chain, 5, seed=SEED)]
    ok = min(residuals) > 1e-2
    criterion("criterion 9c: off-shell vector is not an eigenvector", ok, f"(smallest residual {min(residuals):.2e})")
    assert ok


def test_criterion_9d_two_sites_one_root_each_mixed_chain(criterion):
    _onshell(criterion, "criterion 9d: on-shell, L = 2, a = b = 1, one dual site (supplementary)",
             MonodromyChain([F(0), F(1, 3)], dual=(1,)), 1, 1)


def test_criterion_10_determinism(criterion, tmp_path):
    cfg = dict(L=3, seed=SEED, trials=5, draws=1)
    first = run_suite("all", SuiteConfig(**cfg)).dumps()
    second = run_suite("all", SuiteConfig(**cfg)).dumps()
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    codes = [main(["verify", "--suite", "all", "--L", "3", "--seed", str(SEED), "--trials", "5", "--draws", "1",
                   "--out", str(p)]) for p in paths]
    ok = first == second and paths[0].read_bytes() == paths[1].read_bytes() and codes == [0, 0]
    criterion("criterion 10: identical config and seed give byte-identical reports", ok,
              f"({len(first)} bytes in memory, {paths[0].stat().st_size} bytes via the CLI)")
    assert ok
