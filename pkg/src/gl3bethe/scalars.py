"""Rational functions of two variables, set-product shorthands and the
Izergin-Korepin determinant.

All functions are exact on :class:`fractions.Fraction` arguments; they also
accept ``complex`` values, which is how the on-shell numerics reuse them.
The constant ``c`` is passed explicitly and defaults to one.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import CardinalityError, GenericityError, PoleError
from .linalg import det

ONE = Fraction(1)
ZERO = Fraction(0)


def as_rational(value) -> Fraction:
    """Parse ``"p/q"``, ints and decimal strings into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact parameters")
    return Fraction(value)


def g(x, y, c=ONE):
    d = x - y
    if d == 0:
        raise PoleError(f"g({x}, {y}) has a pole", pair=(x, y))
    return c / d


def f(x, y, c=ONE):
    d = x - y
    if d == 0:
        raise PoleError(f"f({x}, {y}) has a pole", pair=(x, y))
    return (d + c) / d


def f_inv(x, y, c=ONE):
    """1/f(x, y). Finite (and zero) at x = y; poles at x - y = -c."""
    d = x - y
    if d + c == 0:
        raise PoleError(f"1/f({x}, {y}) has a pole", pair=(x, y))
    return d / (d + c)


def h(x, y, c=ONE):
    return (x - y + c) / c


def h_inv(x, y, c=ONE):
    d = x - y + c
    if d == 0:
        raise PoleError(f"1/h({x}, {y}) has a pole", pair=(x, y))
    return c / d


def t(x, y, c=ONE):
    d = x - y
    if d == 0 or d + c == 0:
        raise PoleError(f"t({x}, {y}) has a pole", pair=(x, y))
    return c * c / ((d + c) * d)


def g_inv(x, y, c=ONE):
    return (x - y) / c


def prod_over_sets(fn: Callable, xs: Iterable, ys: Iterable, c=ONE):
    """Product of ``fn(x, y)`` over the Cartesian product; empty product is 1."""
    ys = tuple(ys)
    result = ONE
    for x in xs:
        for y in ys:
            try:
                result *= fn(x, y, c)
            except PoleError as exc:
                raise PoleError(f"{fn.__name__} pole at pair ({x}, {y})", pair=(x, y)) from exc
    return result


def prod(values: Iterable):
    return math.prod(values, start=ONE)


def shift(values: Iterable, amount) -> tuple:
    return tuple(v + amount for v in values)


def negate(values: Iterable) -> tuple:
    return tuple(-v for v in values)


def _duplicate(values: Sequence):
    for i, j in combinations(range(len(values)), 2):
        if values[i] == values[j]:
            return j
    return None


def _vandermonde_like(xs, ys, c):
    result = ONE
    for l, m in combinations(range(len(xs)), 2):
        result *= g(xs[l], xs[m], c) * g(ys[m], ys[l], c)
    return result


def regular_value_at_zero(fn: Callable, roots: Sequence, degree: int, c=ONE, avoid: Callable | None = None):
    """Exact value at 0 of a rational function regular there.

    ``fn(eps)`` must equal ``P(eps) / prod(root - eps)`` with ``P`` a polynomial
    of degree at most ``degree``. ``P`` is sampled at ``degree + 1`` points away
    from 0, interpolated to 0, and cross-checked on one extra point.
    ``avoid(eps)`` may veto sample points that hit other singularities.
    """
    if any(r == 0 for r in roots):
        raise PoleError("the function has a genuine pole at 0")
    samples = []
    k = 0
    while len(samples) < degree + 2:
        k += 1
        eps = c * Fraction(k, 7 * k + 3) if k % 2 else -c * Fraction(k, 11 * k + 2)
        if any(eps == r for r in roots) or (avoid is not None and avoid(eps)):
            continue
        samples.append((eps, fn(eps) * prod(r - eps for r in roots)))
        if k > 10 * degree + 50:
            raise GenericityError("could not find regular sample points")
    *fit, check = samples

    def interpolate(at):
        total = ZERO
        for i, (ei, pi) in enumerate(fit):
            term = pi
            for j, (ej, _) in enumerate(fit):
                if j != i:
                    term *= (at - ej) / (ei - ej)
            total += term
        return total

    if interpolate(check[0]) != check[1]:
        raise ArithmeticError("degree bound violated while taking a limit")
    return interpolate(ZERO) / prod(roots)


def ik_determinant(xs: Sequence, ys: Sequence, c=ONE):
    """Izergin-Korepin determinant K_k(xs | ys).

    The product of h-factors is absorbed row by row into the matrix, so
    coincidences x_i - y_j = -c are harmless. Coinciding values inside ``xs``
    or inside ``ys`` are removable singularities and are resolved by an exact
    limit. Genuine poles x_i = y_j raise :class:`PoleError`.
    """
    xs, ys = tuple(xs), tuple(ys)
    k = len(xs)
    if len(ys) != k:
        raise CardinalityError(f"K needs equal cardinalities, got {len(xs)} and {len(ys)}")
    if k == 0:
        return ONE
    for x in xs:
        for y in ys:
            if x == y:
                raise PoleError(f"K has a pole at x = y = {x}", pair=(x, y))

    dup = _duplicate(ys)
    if dup is not None:
        def perturbed(eps):
            return ik_determinant(xs, ys[:dup] + (ys[dup] + eps,) + ys[dup + 1:], c)
        roots = [x - ys[dup] for x in xs]
        return regular_value_at_zero(perturbed, roots, k + 1, c, avoid=lambda e: ys[dup] + e in ys)
    dup = _duplicate(xs)
    if dup is not None:
        def perturbed(eps):
            return ik_determinant(xs[:dup] + (xs[dup] + eps,) + xs[dup + 1:], ys, c)
        roots = [y - xs[dup] for y in ys]
        return regular_value_at_zero(perturbed, roots, k + 1, c, avoid=lambda e: xs[dup] + e in xs)

    matrix = [
        [g(x, ys[j], c) * prod(h(x, ys[m], c) for m in range(k) if m != j) for j in range(k)]
        for x in xs
    ]
    return _vandermonde_like(xs, ys, c) * det(matrix)


def ik_over_f(xs: Sequence, ys: Sequence, c=ONE):
    """K_k(xs | ys) / f(xs, ys), regular where some x_i = y_j.

    Entry (i, j) of the matrix is 1/h(x_i, y_j) times the product of
    1/g(x_i, y_m) over m != j; the only poles left are at x_i - y_j = -c.
    """
    xs, ys = tuple(xs), tuple(ys)
    k = len(xs)
    if len(ys) != k:
        raise CardinalityError(f"K needs equal cardinalities, got {len(xs)} and {len(ys)}")
    if k == 0:
        return ONE
    matrix = [
        [h_inv(x, ys[j], c) * prod(g_inv(x, ys[m], c) for m in range(k) if m != j) for j in range(k)]
        for x in xs
    ]
    return _vandermonde_like(xs, ys, c) * det(matrix)


class GenericSampler:
    """Seeded source of rationals in generic position.

    Values are ``n / d`` with ``|n| <= window`` and ``1 <= d <= max_den``. A draw is
    rejected while its difference with any already-active value lies in
    ``{0, +-c, +-2c}``.
    """

    def __init__(self, seed=0, c=ONE, window=1000, max_den=9, max_tries=10_000):
        self.rng = random.Random(seed)
        self.c = as_rational(c)
        self.window = window
        self.max_den = max_den
        self.max_tries = max_tries
        self._forbidden = tuple(k * self.c for k in (-2, -1, 0, 1, 2))

    def rational(self) -> Fraction:
        return Fraction(self.rng.randint(-self.window, self.window), self.rng.randint(1, self.max_den))

    def is_generic_with(self, x, taken: Iterable) -> bool:
        return all(x - y not in self._forbidden for y in taken)

    def draw(self, count: int, avoid: Iterable = ()) -> list[Fraction]:
        taken = list(avoid)
        out = []
        for _ in range(count):
            for _ in range(self.max_tries):
                x = self.rational()
                if self.is_generic_with(x, taken):
                    break
            else:
                raise GenericityError("could not draw a generic parameter")
            taken.append(x)
            out.append(x)
        return out

    def sparse_coefficients(self, count: int) -> list[Fraction]:
        values = []
        while len(values) < count:
            x = Fraction(self.rng.randint(-50, 50), self.rng.randint(1, 7))
            if x:
                values.append(x)
        return values


def is_generic(values: Sequence, c=ONE) -> bool:
    forbidden = {k * c for k in (-2, -1, 0, 1, 2)}
    return all(a - b not in forbidden for a, b in combinations(values, 2))
