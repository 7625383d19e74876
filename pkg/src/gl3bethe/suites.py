"""Deterministic verification suites.

Each suite takes a :class:`SuiteConfig` and returns a :class:`Report`. All
random draws come from one seeded sampler per suite, so a given config always
produces the same report.

Chain-level suites run on two chains by default: the all-fundamental chain and
a companion in which every odd-indexed site carries the dual representation.
On the all-fundamental chain lambda_2 = lambda_3, T23 kills the vacuum and
several Bethe vectors vanish identically, so identities checked there alone
would be partly vacuous. The companion has three independent weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .actions import (
    GENERATORS,
    ActionSpec,
    check_action,
    check_action_composition,
    check_diagonal_action,
    check_unwanted_vanishing,
    transfer_action_offshell,
)
from .bethe import TRACE_MAX_ROOTS, TRACE_MAX_SITES, build, build_explicit, check_Xj_relation
from .chain import MonodromyChain
from .errors import CardinalityError
from .identities import check_allequal_remark, check_G_identity, check_ik_identities, check_k_symmetry
from .relations import (
    check_commutators,
    check_exchange_relations,
    check_highest_weight,
    check_rtt,
    check_same_entry,
    check_standard_exchanges,
    check_transfer,
    check_yang_baxter,
    random_state,
)
from .report import Case, Report, compare
from .scalars import ONE, GenericSampler

SUITES = ("scalars", "chain", "bethe", "actions", "appendix")
MAX_SITES = 6

BETHE_GRID = ((1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2))
TRANSFER_GRID = ((1, 1), (2, 1), (2, 2))
XJ_GRID = ((1, 1), (1, 2), (2, 2))


@dataclass
class SuiteConfig:
    c: Fraction = ONE
    L: int = 3
    thetas: tuple | None = None
    dual: tuple | None = None
    seed: int = 0
    trials: int = 25
    draws: int = 5
    a_max: int = 2
    b_max: int = 2
    n_max: int = 2
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if not 1 <= self.L <= MAX_SITES:
            raise ValueError(f"L must be between 1 and {MAX_SITES}")
        if self.thetas is not None:
            if len(self.thetas) != self.L:
                raise ValueError(f"expected {self.L} inhomogeneities, got {len(self.thetas)}")
            if len(set(self.thetas)) != self.L:
                raise ValueError("inhomogeneities must be distinct")
        if self.dual is not None and any(not 0 <= k < self.L for k in self.dual):
            raise ValueError("dual site index out of range")
        if min(self.trials, self.draws) < 1 or min(self.a_max, self.b_max, self.n_max) < 0:
            raise ValueError("trials, draws and size bounds must be positive")

    def resolved_thetas(self) -> tuple:
        if self.thetas is not None:
            return tuple(self.thetas)
        return tuple(GenericSampler(self.seed + 10_007, self.c).draw(self.L))

    def chains(self) -> list[MonodromyChain]:
        thetas = self.resolved_thetas()
        if self.dual is not None:
            return [MonodromyChain(thetas, self.c, self.dual)]
        out = [MonodromyChain(thetas, self.c)]
        if self.L >= 2:
            out.append(MonodromyChain(thetas, self.c, companion_dual(self.L)))
        return out


def companion_dual(L: int) -> tuple:
    return tuple(range(1, L, 2))


def _chain_tag(chain: MonodromyChain) -> str:
    return "dual sites " + ",".join(map(str, sorted(chain.dual))) if chain.dual else "fundamental"


def _tagged(case: Case, chain: MonodromyChain) -> Case:
    case.params = dict(case.params, chain=_chain_tag(chain))
    return case


def _draw(sampler: GenericSampler, count: int, chain: MonodromyChain) -> tuple:
    return tuple(sampler.draw(count, avoid=chain.thetas))


# -- scalars -----------------------------------------------------------------

def suite_scalars(cfg: SuiteConfig) -> Report:
    report = check_ik_identities(cfg.trials, cfg.seed, cfg.c, n_max=3)
    sampler = GenericSampler(cfg.seed + 1, cfg.c)
    report.extend(suite_g_identity(cfg, sampler))
    for trial in range(cfg.trials):
        n_x, n_y = trial % 3 + 1, (trial // 3) % 3
        report.extend(check_allequal_remark(n_x, n_y, sampler.draw(n_x + n_y), cfg.c))
        n = 1 + trial % 3
        vals = sampler.draw(2 * n)
        px = list(range(n))
        py = list(range(n))
        sampler.rng.shuffle(px)
        sampler.rng.shuffle(py)
        report.add(check_k_symmetry(vals[:n], vals[n:], px, py, cfg.c))
    return report


def suite_g_identity(cfg: SuiteConfig, sampler: GenericSampler | None = None, b_max: int = 5) -> Report:
    sampler = sampler or GenericSampler(cfg.seed + 1, cfg.c)
    report = Report("appendix")
    for b in range(1, b_max + 1):
        vs = sampler.draw(b)
        for j in range(1, b + 1):
            for k in range(j, b + 1):
                report.extend(check_G_identity(b, j, k, vs, cfg.c))
    return report


# -- chain -------------------------------------------------------------------

def suite_r_matrix(cfg: SuiteConfig) -> Report:
    report = Report("chain")
    sampler = GenericSampler(cfg.seed + 2, cfg.c)
    for _ in range(cfg.trials):
        x, y, z = sampler.draw(3)
        for case in check_yang_baxter(x, y, z, cfg.c, sampler):
            report.add(case)
    return report


def suite_rtt(cfg: SuiteConfig, chains=None, draws: int | None = None) -> Report:
    report = Report("chain")
    sampler = GenericSampler(cfg.seed + 3, cfg.c)
    for chain in chains or cfg.chains():
        for _ in range(draws or cfg.trials):
            u, v = _draw(sampler, 2, chain)
            report.add(_tagged(check_rtt(chain, u, v), chain))
            state = random_state(chain, sampler)
            for case in check_commutators(chain, u, v, state):
                report.add(_tagged(case, chain))
            xs = _draw(sampler, 4, chain)
            report.add(_tagged(check_same_entry(chain, xs[:2], xs[2:], state), chain))
    return report


def suite_exchange(cfg: SuiteConfig, chains=None, draws: int | None = None, sizes=(1, 2)) -> Report:
    report = Report("chain")
    sampler = GenericSampler(cfg.seed + 4, cfg.c)
    for chain in chains or cfg.chains():
        for _ in range(draws or 1):
            state = random_state(chain, sampler)
            for nx, ny in product(sizes, repeat=2):
                vals = _draw(sampler, nx + ny, chain)
                xs, ys = vals[:nx], vals[nx:]
                for i, j, k in product((1, 2, 3), repeat=3):
                    for case in check_exchange_relations(chain, i, j, k, xs, ys, state):
                        report.add(_tagged(case, chain))
                for i, j, k in product((1, 2), repeat=3):
                    for case in check_exchange_relations(chain, i, j, k, xs, ys, state, label=", gl2 indices"):
                        report.add(_tagged(case, chain))
                for case in check_standard_exchanges(chain, xs, ys[0], state):
                    report.add(_tagged(case, chain))
    return report


def suite_highest_weight(cfg: SuiteConfig, chains=None) -> Report:
    report = Report("chain")
    sampler = GenericSampler(cfg.seed + 5, cfg.c)
    for chain in chains or cfg.chains():
        for case in check_highest_weight(chain, _draw(sampler, 2 * (chain.L + 1), chain)):
            report.add(_tagged(case, chain))
        state = random_state(chain, sampler)
        w, w2 = _draw(sampler, 2, chain)
        for case in check_transfer(chain, w, w2, state):
            report.add(_tagged(case, chain))
    return report


def suite_chain(cfg: SuiteConfig) -> Report:
    report = suite_r_matrix(cfg)
    report.extend(suite_rtt(cfg, draws=cfg.draws))
    report.extend(suite_exchange(cfg))
    report.extend(suite_highest_weight(cfg))
    return report


# -- Bethe vectors -----------------------------------------------------------

def routes(a: int, b: int, L: int) -> list[tuple[str, int]]:
    """Every (method, pivot) pair that applies to B^{a,b} on L sites."""
    out = [(f"explicit{k}", 0) for k in (1, 2, 3, 4)]
    out += [("recursion-u", p) for p in range(a)]
    out += [("recursion-v", p) for p in range(b)]
    if a + b <= TRACE_MAX_ROOTS and L <= TRACE_MAX_SITES:
        out.append(("trace", 0))
    return out


def check_construction_routes(chain: MonodromyChain, us, vs) -> list[Case]:
    reference = build_explicit(chain, us, vs, 1)
    note = "zero vector on this chain" if not reference.state else None
    params = {"u": us, "v": vs, "L": chain.L}
    cases = []
    for method, pivot in routes(len(us), len(vs), chain.L)[1:]:
        bv = build(chain, us, vs, method, pivot)
        p = dict(params, method=method, pivot=pivot)
        cases.append(compare("construction routes agree", p, bv.state, reference.state, note))
    return cases


def check_permutation_symmetry(chain: MonodromyChain, us, vs, sampler: GenericSampler) -> Case:
    pu, pv = list(us), list(vs)
    sampler.rng.shuffle(pu)
    sampler.rng.shuffle(pv)
    if len(pu) > 1 and pu == list(us):
        pu = pu[1:] + pu[:1]
    if len(pv) > 1 and pv == list(vs):
        pv = pv[1:] + pv[:1]
    lhs = build_explicit(chain, us, vs, 1).state
    rhs = build_explicit(chain, pu, pv, 1).state
    return compare("symmetry under permuting u and v", {"u": us, "v": vs, "u_perm": tuple(pu), "v_perm": tuple(pv),
                                                       "L": chain.L}, lhs, rhs)


def suite_bethe(cfg: SuiteConfig, chains=None, grid=None) -> Report:
    report = Report("bethe")
    sampler = GenericSampler(cfg.seed + 6, cfg.c)
    grid = grid or [(a, b) for a, b in BETHE_GRID if a <= cfg.a_max and b <= cfg.b_max]
    for chain in chains or cfg.chains():
        for a, b in grid:
            vals = _draw(sampler, a + b, chain)
            us, vs = vals[:a], vals[a:]
            for case in check_construction_routes(chain, us, vs):
                report.add(_tagged(case, chain))
            report.add(_tagged(check_permutation_symmetry(chain, us, vs, sampler), chain))
    return report


# -- actions -----------------------------------------------------------------

def suite_actions(cfg: SuiteConfig, chains=None, draws: int | None = None) -> Report:
    report = Report("actions")
    sampler = GenericSampler(cfg.seed + 7, cfg.c)
    for chain in chains or cfg.chains():
        for _ in range(draws or cfg.draws):
            for a, b in product(range(cfg.a_max + 1), range(cfg.b_max + 1)):
                for n in range(1, cfg.n_max + 1):
                    vals = _draw(sampler, a + b + n, chain)
                    us, vs, ws = vals[:a], vals[a:a + b], vals[a + b:]
                    for i, j in GENERATORS:
                        try:
                            case = check_action(chain, ActionSpec(i, j, ws, us, vs))
                        except CardinalityError:
                            continue
                        report.add(_tagged(case, chain))
                        if n == 2:
                            report.add(_tagged(check_action_composition(chain, i, j, ws, us, vs), chain))
                    if n == 1:
                        for i in (1, 2, 3):
                            for case in check_diagonal_action(chain, i, us, vs, ws[0]):
                                report.add(_tagged(case, chain))
        for a, b in TRANSFER_GRID:
            if a > cfg.a_max or b > cfg.b_max:
                continue
            vals = _draw(sampler, a + b + 1, chain)
            us, vs, w = vals[:a], vals[a:a + b], vals[-1]
            for case in transfer_action_offshell(chain, us, vs, w):
                report.add(_tagged(case, chain))
            report.add(_tagged(check_unwanted_vanishing(chain, us, vs, w), chain))
    return report


# -- appendix ----------------------------------------------------------------

def suite_appendix(cfg: SuiteConfig, chains=None) -> Report:
    report = Report("appendix")
    sampler = GenericSampler(cfg.seed + 8, cfg.c)
    for chain in chains or cfg.chains():
        if chain.L > TRACE_MAX_SITES:
            continue
        for a, b in XJ_GRID:
            vals = _draw(sampler, a + b, chain)
            us, vs = vals[:a], vals[a:]
            for j in range(1, b + 1):
                report.add(_tagged(check_Xj_relation(chain, us, vs, j), chain))
    report.extend(suite_g_identity(cfg))
    return report


RUNNERS = {
    "scalars": suite_scalars,
    "chain": suite_chain,
    "bethe": suite_bethe,
    "actions": suite_actions,
    "appendix": suite_appendix,
}


def run_suite(name: str, cfg: SuiteConfig) -> Report:
    if name == "all":
        report = Report("all")
        for key in SUITES:
            report.extend(RUNNERS[key](cfg))
        return report
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}; expected all or one of {', '.join(SUITES)}")
    return RUNNERS[name](cfg)


