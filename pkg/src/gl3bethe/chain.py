"""The Yangian realised on an inhomogeneous chain of C^3 sites.

Basis words are tuples of letters 1..3, one per site; the all-ones word is
the highest-weight vector. The monodromy matrix is the ordered product of
site operators, T(u) = L_L(u) ... L_1(u). A fundamental site uses the
normalised R-matrix unchanged, L(u) = R(u, theta), so lambda_1 = 1 and
lambda_2 = lambda_3 on an all-fundamental chain.

A site may instead be dual: its entries are L'_ij(u) = (delta_ij + g(theta, u)
e_{4-i,4-j}) / f(theta, u), the fundamental site pulled back through the
automorphism T(u) -> T^t(-u). Mixing both kinds gives three independent
weights, which keeps every identity non-degenerate.
"""
from __future__ import annotations

import threading
from collections import defaultdict
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import DegenerateWeightError, DuplicateError, PoleError
from .scalars import ONE, as_rational, f_inv, h_inv

Word = tuple


class SparseState(dict):
    """Sparse vector: basis word -> coefficient, zeros never stored."""

    def __init__(self, data=()):
        super().__init__()
        items = data.items() if isinstance(data, dict) else data
        for word, x in items:
            self.add_term(word, x)

    def add_term(self, word, x):
        if x == 0:
            return
        y = self.get(word, 0) + x
        if y == 0:
            del self[word]
        else:
            self[word] = y

    def axpy(self, coef, other: "SparseState") -> "SparseState":
        """In place ``self += coef * other``."""
        if coef == 0:
            return self
        for word, x in other.items():
            self.add_term(word, coef * x)
        return self

    def scaled(self, coef) -> "SparseState":
        if coef == 0:
            return SparseState()
        return SparseState((w, coef * x) for w, x in self.items())

    def __add__(self, other):
        return SparseState(self).axpy(1, other)

    def __sub__(self, other):
        return SparseState(self).axpy(-1, other)

    def __neg__(self):
        return self.scaled(-1)

    def norm(self) -> float:
        return sum(abs(complex(x)) ** 2 for x in self.values()) ** 0.5

    def __repr__(self):
        body = ", ".join(f"{''.join(map(str, w))}: {x}" for w, x in sorted(self.items()))
        return f"SparseState({{{body}}})"


class SparseOperator:
    """Column-oriented sparse matrix acting on :class:`SparseState`."""

    __slots__ = ("cols",)

    def __init__(self, cols=None):
        self.cols: dict[Word, dict[Word, object]] = cols if cols is not None else {}

    def __call__(self, state: SparseState) -> SparseState:
        out: dict = defaultdict(int)
        for word, x in state.items():
            col = self.cols.get(word)
            if col:
                for row, m in col.items():
                    out[row] += m * x
        return SparseState(out)

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        cols = {w: dict(col) for w, col in self.cols.items()}
        for w, col in other.cols.items():
            target = cols.setdefault(w, {})
            for row, m in col.items():
                v = target.get(row, 0) + m
                if v == 0:
                    target.pop(row, None)
                else:
                    target[row] = v
        return SparseOperator(cols)

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        return SparseOperator({w: dict(self(SparseState(col))) for w, col in other.cols.items()})

    def scaled(self, coef) -> "SparseOperator":
        return SparseOperator({w: {r: coef * m for r, m in col.items()} for w, col in self.cols.items()})

    def entries(self) -> dict:
        return {(r, w): m for w, col in self.cols.items() for r, m in col.items() if m != 0}

    def __eq__(self, other):
        return isinstance(other, SparseOperator) and self.entries() == other.entries()

    __hash__ = None


def r_matrix(x, y, c=ONE) -> list[list]:
    """Normalised R(x, y) = (I + g(x, y) P) / f(x, y) as a 9x9 matrix.

    Row and column index ``3 * (i - 1) + (j - 1)`` stands for e_i (x) e_j.
    """
    if x - y + c == 0:
        raise PoleError(f"R({x}, {y}) has a pole", pair=(x, y))
    a = f_inv(x, y, c)
    b = h_inv(x, y, c)
    zero = Fraction(0)
    m = [[zero] * 9 for _ in range(9)]
    for i in range(3):
        for j in range(3):
            m[3 * i + j][3 * i + j] += a
            m[3 * i + j][3 * j + i] += b
    return m


class MonodromyChain:
    """Inhomogeneous chain with parameters ``thetas`` and constant ``c``.

    Sites listed in ``dual`` carry the dual of the fundamental representation;
    all others are fundamental. Operators T_ij(u) are built once per
    evaluation point and cached.
    """

    def __init__(self, thetas: Iterable, c=ONE, dual: Iterable[int] = ()):
        self.thetas = tuple(as_rational(x) for x in thetas)
        self.dual = frozenset(dual)
        if any(not 0 <= k < len(self.thetas) for k in self.dual):
            raise ValueError("dual site index out of range")
        self.c = as_rational(c)
        if self.c == 0:
            raise ValueError("c must be nonzero")
        if len(set(self.thetas)) != len(self.thetas):
            raise DuplicateError("inhomogeneities must be pairwise distinct")
        self.L = len(self.thetas)
        self._cache: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        extra = f", dual={sorted(self.dual)}" if self.dual else ""
        return f"MonodromyChain(L={self.L}, thetas={[str(t) for t in self.thetas]}, c={self.c}{extra})"

    @property
    def key(self):
        return (self.thetas, self.c, tuple(sorted(self.dual)))

    def poles(self) -> tuple:
        """Evaluation points where some site operator is singular."""
        out = []
        for k, th in enumerate(self.thetas):
            out += [th, th + self.c] if k in self.dual else [th, th - self.c]
        return tuple(out)

    def vacuum(self) -> SparseState:
        return SparseState({(1,) * self.L: ONE})

    def words(self) -> list[Word]:
        return list(product((1, 2, 3), repeat=self.L))

    def weight_poles(self) -> tuple:
        """Poles of the vacuum weights: theta - c on fundamental sites, theta + c on dual ones."""
        return tuple(th + self.c if k in self.dual else th - self.c for k, th in enumerate(self.thetas))

    def check_point(self, u) -> None:
        for p in self.poles():
            if u == p:
                raise PoleError(f"u = {u} hits a pole of a site operator", pair=(u, p))

    def monodromy(self, u) -> dict[tuple[int, int], SparseOperator]:
        """All nine T_ij(u), keyed by (i, j) with 1-based indices."""
        with self._lock:
            block = self._cache.get(u)
        if block is None:
            block = self._build(u)
            with self._lock:
                self._cache[u] = block
        return block

    def clear_cache(self) -> None:
        with self._lock:
            self._cache.clear()

    def _site_factors(self, u):
        self.check_point(u)
        keep, swap = [], []
        for k, th in enumerate(self.thetas):
            x, y = (th, u) if k in self.dual else (u, th)
            keep.append(f_inv(x, y, self.c))
            swap.append(h_inv(x, y, self.c))
        return keep, swap

    def _column(self, word, j, keep, swap) -> dict:
        """{(i, image word): amplitude} for T_ij(u) applied to one basis word."""
        # state: (aux index, output letters so far) -> amplitude
        paths = {(j, ()): ONE}
        for site, letter in enumerate(word):
            nxt: dict = defaultdict(int)
            for (m, out), amp in paths.items():
                nxt[(m, out + (letter,))] += amp * keep[site]
                if site in self.dual:
                    # e_{4-m', 4-m} needs letter 4-m and leaves 4-m'
                    if letter == 4 - m:
                        for m2 in (1, 2, 3):
                            nxt[(m2, out + (4 - m2,))] += amp * swap[site]
                else:
                    nxt[(letter, out + (m,))] += amp * swap[site]
            paths = nxt
        return paths

    def _build(self, u) -> dict[tuple[int, int], SparseOperator]:
        keep, swap = self._site_factors(u)
        cols = {(i, j): {} for i in (1, 2, 3) for j in (1, 2, 3)}
        for word in self.words():
            for j in (1, 2, 3):
                for (i, out), amp in self._column(word, j, keep, swap).items():
                    if amp != 0:
                        cols[(i, j)].setdefault(word, {})[out] = amp
        return {ij: SparseOperator(col) for ij, col in cols.items()}

    def op(self, i: int, j: int, u) -> SparseOperator:
        return self.monodromy(u)[(i, j)]

    def apply(self, i: int, j: int, u, state: SparseState) -> SparseState:
        return self.monodromy(u)[(i, j)](state)

    def apply_product(self, i: int, j: int, us: Sequence, state: SparseState) -> SparseState:
        """T_ij(u_1) ... T_ij(u_n) applied to ``state`` (rightmost first)."""
        for u in reversed(tuple(us)):
            state = self.apply(i, j, u, state)
        return state

    def weights(self, u) -> tuple:
        """(lambda_1, lambda_2, lambda_3) read off T_ii(u) acting on the vacuum.

        Only the vacuum column is contracted, so no operator block is cached.
        """
        (word,) = self.vacuum()
        keep, swap = self._site_factors(u)
        out = []
        for i in (1, 2, 3):
            image = {k: x for k, x in self._column(word, i, keep, swap).items() if x != 0 and k[0] == i}
            if set(image) - {(i, word)}:
                raise ArithmeticError("vacuum is not an eigenvector of T_ii")
            out.append(image.get((i, word), 0))
        return tuple(out)

    def lam2(self, u):
        lam = self.weights(u)[1]
        if lam == 0:
            raise DegenerateWeightError(f"lambda_2({u}) vanishes")
        return lam

    def ratio(self, j: int, u):
        """r_j(u) = lambda_j(u) / lambda_2(u)."""
        w = self.weights(u)
        if w[1] == 0:
            raise DegenerateWeightError(f"lambda_2({u}) vanishes")
        return w[j - 1] / w[1]

    def transfer(self, w) -> SparseOperator:
        block = self.monodromy(w)
        return block[(1, 1)] + block[(2, 2)] + block[(3, 3)]

    def closed_form_weights(self, u) -> tuple:
        """Product formulas for the three weights, used only as a test oracle."""
        lam = [ONE, ONE, ONE]
        for k, th in enumerate(self.thetas):
            if k in self.dual:
                x = f_inv(th, u, self.c)
                lam[0] *= x
                lam[1] *= x
            else:
                x = f_inv(u, th, self.c)
                lam[1] *= x
                lam[2] *= x
        return tuple(lam)


class OperatorWords:
    """Memoised application of operator words to the vacuum.

    A word is a tuple of ``(i, j, u)`` read left to right as an operator
    product; the rightmost letter acts first. Suffixes are shared.
    """

    def __init__(self, chain: MonodromyChain, start: SparseState | None = None):
        self.chain = chain
        self.memo: dict[tuple, SparseState] = {(): start if start is not None else chain.vacuum()}
        self.applications = 0

    def __call__(self, word: tuple) -> SparseState:
        word = tuple(word)
        hit = self.memo.get(word)
        if hit is not None:
            return hit
        inner = self(word[1:])
        i, j, u = word[0]
        self.applications += 1
        out = self.chain.apply(i, j, u, inner) if inner else SparseState()
        self.memo[word] = out
        return out


def ops(i: int, j: int, us: Sequence) -> tuple:
    return tuple((i, j, u) for u in us)


def word_string(word: Word) -> str:
    return "".join(str(x) for x in word)


def parse_word(text: str) -> Word:
    return tuple(int(ch) for ch in text)
