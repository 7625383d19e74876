"""Exact checks of the scalar identities behind the Bethe vector formulas:
reductions of the Izergin-Korepin determinant, its residue, the partition-sum
lemma, the big-K reductions, the G-coefficient identity and the all-equal
sums.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .partitions import split
from .report import Case, Report, compare
from .scalars import (
    ONE,
    GenericSampler,
    f,
    f_inv,
    g,
    h_inv,
    ik_determinant,
    negate,
    prod,
    prod_over_sets,
    regular_value_at_zero,
    shift,
)

K = ik_determinant


def _params(**kw) -> dict:
    return {k: tuple(v) if isinstance(v, (list, tuple)) else v for k, v in kw.items()}


def ik_residue(xs: Sequence, ys: Sequence, c=ONE):
    """lim eps * K_n(xs | ys) with y_n = x_n + eps, computed as an exact limit."""
    xs, ys = tuple(xs), tuple(ys)
    xn = xs[-1]
    n = len(xs)

    def scaled(eps):
        return eps * K(xs, ys[:-1] + (xn + eps,), c)

    roots = [x - xn for x in xs[:-1]]
    return regular_value_at_zero(scaled, roots, 2 * n + 2, c)


def check_ik_reductions(xs, ys, z, c=ONE) -> list[Case]:
    n = len(xs)
    p = _params(x=xs, y=ys, z=z, c=c)
    base = K(xs, ys, c)
    cases = [
        compare("K with x shifted down equals K with y shifted up", p, K(shift(xs, -c), ys, c), K(xs, shift(ys, c), c)),
        compare("K with y shifted up equals swapped K over f", p, K(xs, shift(ys, c), c),
                (-1) ** n * K(ys, xs, c) / prod_over_sets(f, ys, xs, c)),
        compare("K pair reduction, lowered z", p, K(xs + (z - c,), ys + (z,), c), -base),
        compare("K pair reduction, raised z", p, K(xs + (z,), ys + (z + c,), c), -base),
        compare("K under negation and swap", p, base, K(negate(ys), negate(xs), c)),
        compare("K_1 equals g", _params(x=xs[0], y=ys[0], c=c), K(xs[:1], ys[:1], c), g(xs[0], ys[0], c)),
    ]
    xn = xs[-1]
    expected = -c * prod_over_sets(f, (xn,), ys[:-1], c) * prod_over_sets(f, xs[:-1], (xn,), c) * K(xs[:-1], ys[:-1], c)
    cases.append(compare("K residue at x_n = y_n", p, ik_residue(xs, ys, c), expected))
    return cases


def lemma_sum(gammas, alphas, betas, c=ONE):
    m1, m2 = len(alphas), len(betas)
    total = Fraction(0)
    for gI, gII in split(gammas, m1, m2):
        total += K(gI, alphas, c) * K(betas, gII, c) * prod_over_sets(f, gII, gI, c)
    return total


def check_partition_lemma(gammas, alphas, betas, c=ONE) -> list[Case]:
    m1, m2 = len(alphas), len(betas)
    p = _params(gamma=gammas, alpha=alphas, beta=betas, c=c)
    lhs = lemma_sum(gammas, alphas, betas, c)
    first = (-1) ** m1 * prod_over_sets(f, gammas, alphas, c) * K(shift(alphas, -c) + tuple(betas), gammas, c)
    second = (-1) ** m2 * prod_over_sets(f, betas, gammas, c) * K(gammas, tuple(alphas) + shift(betas, c), c)
    return [
        compare("K partition-sum lemma, first form", p, lhs, first),
        compare("K partition-sum lemma, second form", p, lhs, second),
    ]


def check_big_k_reductions(xs, ys, c=ONE) -> list[Case]:
    """Reductions of K_{n_x+n_y} used to turn exchange relations into their twins,
    for every partition of w = {x, y} with #w_I = n_y."""
    xs, ys = tuple(xs), tuple(ys)
    nx, ny = len(xs), len(ys)
    w = xs + ys
    cases = []
    for wI, wII in split(w, ny, nx):
        p = _params(x=xs, y=ys, w_I=wI, c=c)
        big = K(w, shift(wI, c) + shift(xs, c), c)
        cases.append(compare("big K reduction onto x, column type", p, big, (-1) ** ny * K(wII, shift(xs, c), c)))
        cases.append(compare("big K reduction onto y, column type", p, big, (-1) ** nx * K(ys, shift(wI, c), c)))
        big = K(xs + wI, shift(w, c), c)
        cases.append(compare("big K reduction onto x, row type", p, big, (-1) ** ny * K(xs, shift(wII, c), c)))
        cases.append(compare("big K reduction onto y, row type", p, big, (-1) ** nx * K(wI, shift(ys, c), c)))
    return cases


def check_ik_identities(trials: int = 25, seed: int = 0, c=ONE, n_max: int = 3) -> Report:
    """Random exact trials of every determinant identity; sizes cycle through 1..n_max."""
    report = Report("scalars")
    sampler = GenericSampler(seed, c)
    for trial in range(trials):
        n = 1 + trial % n_max
        vals = sampler.draw(2 * n + 1)
        xs, ys, z = tuple(vals[:n]), tuple(vals[n:2 * n]), vals[-1]
        for case in check_ik_reductions(xs, ys, z, c):
            report.add(case)
        m1 = 1 + trial % 2
        m2 = 1 + (trial // 2) % 2
        vals = sampler.draw(2 * (m1 + m2))
        gammas, alphas, betas = tuple(vals[:m1 + m2]), tuple(vals[m1 + m2:2 * m1 + m2]), tuple(vals[2 * m1 + m2:])
        for case in check_partition_lemma(gammas, alphas, betas, c):
            report.add(case)
        nx, ny = 1 + trial % 2, 1 + (trial // 2) % 2
        vals = sampler.draw(nx + ny)
        for case in check_big_k_reductions(vals[:nx], vals[nx:], c):
            report.add(case)
    return report


# -- G coefficients ----------------------------------------------------------

def G_sum(vs: Sequence, j: int, k: int, c=ONE):
    """Sum form of G^(j)_k, 1-based indices."""
    b = len(vs)
    v = lambda m: vs[m - 1]
    total = ONE
    for i in range(k + 1, b + 1):
        term = h_inv(v(j), v(i), c) * h_inv(v(i), v(j), c)
        for l in range(k + 1, i):
            term *= f_inv(v(j), v(l), c) * f_inv(v(l), v(j), c)
        total -= term
    return total


def G_product(vs: Sequence, j: int, k: int, c=ONE):
    v = lambda m: vs[m - 1]
    return prod(f_inv(v(j), v(l), c) * f_inv(v(l), v(j), c) for l in range(k + 1, len(vs) + 1))


def I_coefficient(vs: Sequence, j: int, k: int, c=ONE):
    v = lambda m: vs[m - 1]
    return -h_inv(v(j), v(k), c) * f_inv(v(k), v(j), c) * prod(f_inv(v(j), v(i), c) for i in range(j + 1, k))


def check_G_identity(b: int, j: int, k: int, vs: Sequence, c=ONE) -> Report:
    """Sum form equals product form for G^(j)_k; for k > j also that
    I_jk G^(j)_k / G^(j)_j is the coefficient g(v_k, v_j) prod f(v_l, v_j)
    appearing in the triangular relation between the X_j."""
    vs = tuple(vs)
    if len(vs) != b:
        raise ValueError(f"expected {b} values, got {len(vs)}")
    if not 1 <= j <= k <= b:
        raise ValueError(f"need 1 <= j <= k <= b, got j={j}, k={k}, b={b}")
    p = _params(b=b, j=j, k=k, v=vs, c=c)
    report = Report("scalars")
    report.add(compare("G coefficient, sum form equals product form", p, G_sum(vs, j, k, c), G_product(vs, j, k, c)))
    if k > j:
        lhs = I_coefficient(vs, j, k, c) * G_product(vs, j, k, c) / G_product(vs, j, j, c)
        rhs = g(vs[k - 1], vs[j - 1], c) * prod(f(vs[l - 1], vs[j - 1], c) for l in range(j + 1, k))
        report.add(compare("I coefficient normalised by G", p, lhs, rhs))
    return report


# -- all indices equal -------------------------------------------------------

def allequal_row_sum(xs, ws, c=ONE):
    """Sum of K(x | w_II + c) f(w_II, w_I) over partitions with #w_II = #x."""
    nx = len(xs)
    total = Fraction(0)
    for wI, wII in split(ws, len(ws) - nx, nx):
        total += K(xs, shift(wII, c), c) * prod_over_sets(f, wII, wI, c)
    return total


def allequal_column_sum(xs, ws, c=ONE):
    """Sum of K(w_II | x + c) f(w_I, w_II) over partitions with #w_II = #x."""
    nx = len(xs)
    total = Fraction(0)
    for wI, wII in split(ws, len(ws) - nx, nx):
        total += K(wII, shift(xs, c), c) * prod_over_sets(f, wI, wII, c)
    return total


def check_allequal_remark(n_x: int, n_y: int, ws: Sequence, c=ONE) -> Report:
    """With all indices equal the exchange relations reduce to sums equal to (-1)^n_x."""
    ws = tuple(ws)
    if len(ws) != n_x + n_y:
        raise ValueError(f"expected {n_x + n_y} values, got {len(ws)}")
    xs = ws[:n_x]
    p = _params(n_x=n_x, n_y=n_y, w=ws, c=c)
    report = Report("scalars")
    report.add(compare("all-equal sum, row type", p, allequal_row_sum(xs, ws, c), Fraction((-1) ** n_x)))
    report.add(compare("all-equal sum, column type", p, allequal_column_sum(xs, ws, c), Fraction((-1) ** n_x)))
    return report


def check_k_symmetry(xs, ys, perm_x, perm_y, c=ONE) -> Case:
    return compare("K symmetric within each set", _params(x=xs, y=ys, c=c), K(xs, ys, c),
                   K([xs[i] for i in perm_x], [ys[i] for i in perm_y], c))


__all__ = [
    "check_ik_identities", "check_ik_reductions", "check_partition_lemma", "check_big_k_reductions",
    "check_G_identity", "check_allequal_remark", "check_k_symmetry", "ik_residue", "lemma_sum",
    "G_sum", "G_product", "I_coefficient", "allequal_row_sum", "allequal_column_sum",
]
