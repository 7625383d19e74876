"""Numeric Bethe roots and the on-shell eigenvector check.

This is the only floating-point code in the package. Newton runs on the Bethe
equations with every denominator cleared (weights times the product of their
pole factors, f-functions times their differences). The ratio form
log(lhs / rhs) decays like 1/z and pulls almost every start to infinity; the
cleared form does not. A candidate is accepted only on the original residuals.
The Bethe vector is then rebuilt at the complex roots and tested as an
eigenvector of the transfer matrix.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .actions import bethe_residuals, eigenvalue
from .bethe import build_explicit
from .chain import MonodromyChain
from .errors import DegenerateRoots, NoConvergence
from .partitions import without
from .report import Case

FLOAT_EPS = 2.220446049250313e-16


@dataclass
class BetheRoots:
    us: tuple
    vs: tuple
    residuals: list = field(default_factory=list)
    start: int = -1
    iterations: int = 0

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def float_chain(chain: MonodromyChain) -> MonodromyChain:
    """A fresh chain with its own cache, so float points never mix with exact ones."""
    return MonodromyChain(chain.thetas, chain.c, chain.dual)


def _cleared(chain, us, vs) -> np.ndarray:
    c = complex(chain.c)
    poles = [complex(p) for p in chain.weight_poles()]

    def lam(x):
        d = math.prod((x - p for p in poles), start=1 + 0j)
        l1, l2, l3 = chain.weights(x)
        return l1 * d, l2 * d, l3 * d

    out = []
    a, b = len(us), len(vs)
    for i, ui in enumerate(us):
        l1, l2, _ = lam(ui)
        rest = without(us, i)
        lhs = l1 * math.prod((uk - ui + c for uk in rest), start=1 + 0j) * math.prod((v - ui for v in vs), start=1 + 0j)
        rhs = l2 * math.prod((ui - uk + c for uk in rest), start=1 + 0j) * math.prod((v - ui + c for v in vs), start=1 + 0j)
        out.append(lhs - (-1) ** (a - 1) * rhs)
    for i, vi in enumerate(vs):
        _, l2, l3 = lam(vi)
        rest = without(vs, i)
        lhs = l3 * math.prod((vi - vk + c for vk in rest), start=1 + 0j) * math.prod((vi - u for u in us), start=1 + 0j)
        rhs = l2 * math.prod((vk - vi + c for vk in rest), start=1 + 0j) * math.prod((vi - u + c for u in us), start=1 + 0j)
        out.append(lhs - (-1) ** (b - 1) * rhs)
    return np.array(out, dtype=complex)


def _system(chain, a, z):
    return _cleared(chain, tuple(complex(x) for x in z[:a]), tuple(complex(x) for x in z[a:]))


def _min_gap(values) -> float:
    vals = list(values)
    gaps = [abs(x - y) for i, x in enumerate(vals) for y in vals[i + 1:]]
    return min(gaps, default=math.inf)


def _newton(chain, a, z, max_iter):
    F = _system(chain, a, z)
    norm = np.linalg.norm(F)
    for it in range(max_iter):
        if norm < 1e-14 * max(1.0, float(np.max(np.abs(z)))) ** (2 * len(z) + chain.L):
            return z, it
        h = 1e-7 * max(1.0, float(np.max(np.abs(z))))
        J = np.empty((len(z), len(z)), dtype=complex)
        for k in range(len(z)):
            dz = z.copy()
            dz[k] += h
            J[:, k] = (_system(chain, a, dz) - F) / h
        step = np.linalg.solve(J, -F)
        damping = 1.0
        while damping > 1e-6:
            trial = z + damping * step
            try:
                Ft = _system(chain, a, trial)
            except (ZeroDivisionError, ValueError):
                damping /= 2
                continue
            nt = np.linalg.norm(Ft)
            if np.isfinite(nt) and nt < norm:
                z, F, norm = trial, Ft, nt
                break
            damping /= 2
        else:
            return z, it
    return z, max_iter


def solve_bethe(chain: MonodromyChain, a: int, b: int, tol: float = 1e-10, max_iter: int = 100,
                starts: int = 200, seed: int = 0) -> BetheRoots:
    """Multistart damped Newton for a u-roots and b v-roots.

    Accepts a root set when every residual of both equation families is below
    ``tol``, all values are finite and within a generous bound, and no two
    roots of the same kind are closer than ``sqrt(tol)``.
    """
    if a + b < 1:
        raise ValueError("nothing to solve: a + b must be at least 1")
    if tol < 10 * FLOAT_EPS:
        raise ValueError(f"tolerance {tol:g} is below what double precision can certify")
    chain = float_chain(chain)
    rng = random.Random(seed)
    scale = float(chain_scale(chain))
    bound = 1e4 * scale
    collided = False
    for start in range(starts):
        z = np.array([complex(*_disk(rng, scale)) for _ in range(a + b)], dtype=complex)
        try:
            z, iters = _newton(chain, a, z, max_iter)
            if not np.all(np.isfinite(z)) or np.max(np.abs(z)) > bound:
                continue
            us, vs = tuple(complex(x) for x in z[:a]), tuple(complex(x) for x in z[a:])
            res = [abs(r) for r in bethe_residuals(chain, us, vs)]
        except (ZeroDivisionError, ValueError, np.linalg.LinAlgError):
            continue
        if not all(math.isfinite(r) and r < tol for r in res):
            continue
        if _min_gap(us) < math.sqrt(tol) or _min_gap(vs) < math.sqrt(tol):
            collided = True
            continue
        return BetheRoots(us, vs, res, start, iters)
    if collided:
        raise DegenerateRoots("every converged start had colliding roots")
    raise NoConvergence(f"no admissible root set after {starts} starts")


def _disk(rng, radius):
    r = radius * math.sqrt(rng.random())
    phi = 2 * math.pi * rng.random()
    return r * math.cos(phi), r * math.sin(phi)


def eigen_residual(chain: MonodromyChain, us: Sequence, vs: Sequence, w) -> float:
    """||t(w) B - Lambda(w) B|| / ||B||, with B built at the given (possibly float) roots."""
    chain = float_chain(chain) if any(isinstance(x, complex) for x in tuple(us) + tuple(vs)) else chain
    state = build_explicit(chain, us, vs, 1).state
    norm = state.norm()
    if norm == 0:
        raise ArithmeticError("Bethe vector vanishes at these roots")
    image = chain.transfer(w)(state)
    diff = image - state.scaled(eigenvalue(chain, us, vs, w))
    return diff.norm() / norm


def check_onshell(chain: MonodromyChain, roots: BetheRoots, probes: Sequence, tol: float = 1e-8) -> list[Case]:
    fchain = float_chain(chain)
    cases = []
    for w in probes:
        r = eigen_residual(fchain, roots.us, roots.vs, w)
        params = {"u": roots.us, "v": roots.vs, "w": w, "L": chain.L}
        cases.append(Case("on-shell eigenvector", params, r < tol, residual=r))
    return cases


def chain_scale(chain: MonodromyChain):
    """max|theta| + |c|, the radius within which roots and probes are drawn."""
    return max((abs(t) for t in chain.thetas), default=0) + abs(chain.c)


def probe_points(chain: MonodromyChain, count: int = 5, seed: int = 0) -> list[Fraction]:
    """Rational probes within twice the chain scale; far probes would see t(w) close to its asymptote."""
    rng = random.Random(seed)
    poles = set(chain.poles())
    span = chain_scale(chain)
    out = []
    while len(out) < count:
        q = rng.randint(1, 9)
        m = math.ceil(2 * span * q)
        w = Fraction(rng.randint(-m, m), q)
        if w not in poles and w not in out:
            out.append(w)
    return out
