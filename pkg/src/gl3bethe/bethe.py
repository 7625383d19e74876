"""Bethe vectors B^{a,b}(u; v) built by independent routes.

Four explicit partition sums, two recursions (peeling a root off u or off v)
and the trace formula over a+b auxiliary spaces. Coefficients are assembled
as scalars first; the operator words they multiply are applied to the vacuum
through a memo that shares common suffixes.

The explicit sums are written with K/f(v_I, u_I) and 1/f factors, so they stay
finite when u and v share a value. The multiple-action formulas rely on that.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .chain import MonodromyChain, OperatorWords, SparseState, ops, word_string
from .errors import DuplicateError, ResourceError
from .partitions import split, without
from .report import Case, compare, rational_str, state_digest
from .scalars import ONE, f, f_inv, g, h_inv, ik_over_f, prod, prod_over_sets

PAPER = "paper"
TARASOV_VARCHENKO = "tarasov-varchenko"

METHODS = ("explicit1", "explicit2", "explicit3", "explicit4", "recursion-u", "recursion-v", "trace")
TRACE_MAX_ROOTS = 4
TRACE_MAX_SITES = 4


@dataclass
class BetheVector:
    state: SparseState
    us: tuple
    vs: tuple
    method: str
    chain: MonodromyChain
    normalization: str = PAPER
    terms: int = 0
    meta: dict = field(default_factory=dict)

    @property
    def a(self) -> int:
        return len(self.us)

    @property
    def b(self) -> int:
        return len(self.vs)

    def digest(self) -> str:
        return state_digest(self.state)

    def to_json(self) -> dict:
        entries = []
        for word in sorted(self.state):
            x = Fraction(self.state[word])
            entries.append({"word": word_string(word), "num": str(x.numerator), "den": str(x.denominator)})
        return {
            "L": self.chain.L,
            "c": rational_str(self.chain.c),
            "theta": [rational_str(t) for t in self.chain.thetas],
            "a": self.a,
            "b": self.b,
            "u": [rational_str(x) for x in self.us],
            "v": [rational_str(x) for x in self.vs],
            "method": self.method,
            "normalization": self.normalization,
            "entries": entries,
        }


def _distinct(values: Sequence, name: str) -> tuple:
    values = tuple(values)
    if len(set(values)) != len(values):
        raise DuplicateError(f"{name} has repeated values")
    return values


def lam2_of(chain: MonodromyChain, values) -> object:
    return prod(chain.lam2(x) for x in values)


# -- explicit sums -----------------------------------------------------------

def _explicit_terms(chain, us, vs, variant):
    c = chain.c
    l2u, l2v = lam2_of(chain, us), lam2_of(chain, vs)
    for k in range(min(len(us), len(vs)) + 1):
        for v1, v2 in split(vs, k, len(vs) - k):
            for u1, u2 in split(us, k, len(us) - k):
                kf = ik_over_f(v1, u1, c)
                if variant == 1:
                    coef = kf * prod_over_sets(f, v2, v1, c) * prod_over_sets(f, u2, u1, c)
                    coef *= prod_over_sets(f_inv, v2, us, c) / (lam2_of(chain, v2) * l2u)
                    word = ops(1, 2, u2) + ops(1, 3, u1) + ops(2, 3, v2)
                elif variant == 2:
                    coef = kf * prod_over_sets(f, v1, v2, c) * prod_over_sets(f, u1, u2, c)
                    coef *= prod_over_sets(f_inv, vs, u2, c) / (lam2_of(chain, u2) * l2v)
                    word = ops(2, 3, v2) + ops(1, 3, v1) + ops(1, 2, u2)
                else:
                    coef = kf * prod_over_sets(f, v2, v1, c) * prod_over_sets(f, u1, u2, c)
                    coef *= prod_over_sets(f_inv, v1, u2, c) * prod_over_sets(f_inv, v2, us, c)
                    if variant == 3:
                        coef /= lam2_of(chain, v2) * l2u
                        word = ops(1, 3, u1) + ops(1, 2, u2) + ops(2, 3, v2)
                    else:
                        coef /= lam2_of(chain, u2) * l2v
                        word = ops(1, 3, v1) + ops(2, 3, v2) + ops(1, 2, u2)
                yield coef, word


def build_explicit(chain: MonodromyChain, us: Sequence, vs: Sequence, variant: int = 1) -> BetheVector:
    """Partition-sum formula number ``variant`` (1-4).

    1: T12 T13 T23 order, 2: T23 T13 T12, 3: T13 T12 T23, 4: T13 T23 T12.
    """
    if variant not in (1, 2, 3, 4):
        raise ValueError(f"unknown explicit variant {variant}")
    us, vs = _distinct(us, "u"), _distinct(vs, "v")
    words = OperatorWords(chain)
    state = SparseState()
    terms = 0
    for coef, word in _explicit_terms(chain, us, vs, variant):
        terms += 1
        if coef != 0:
            state.axpy(coef, words(word))
    return BetheVector(state, us, vs, f"explicit{variant}", chain, terms=terms)


# -- recursions --------------------------------------------------------------

def _base(chain, us, vs, words):
    if not us:
        return words(ops(2, 3, vs)).scaled(1 / lam2_of(chain, vs))
    return words(ops(1, 2, us)).scaled(1 / lam2_of(chain, us))


def build_recursive(chain: MonodromyChain, us: Sequence, vs: Sequence, direction: str = "u", pivot: int = 0) -> BetheVector:
    """Build B^{a,b} by peeling one root at a time.

    ``direction`` is ``"u"`` or ``"v"``; ``pivot`` picks the root removed at
    the top level (deeper levels use the same index, clamped to the set size).
    """
    if direction not in ("u", "v"):
        raise ValueError("direction must be 'u' or 'v'")
    us, vs = _distinct(us, "u"), _distinct(vs, "v")
    c = chain.c
    words = OperatorWords(chain)
    memo: dict = {}
    count = [0]

    def rec(uu: tuple, vv: tuple) -> SparseState:
        key = (uu, vv)
        if key in memo:
            return memo[key]
        count[0] += 1
        if not uu or not vv:
            out = _base(chain, uu, vv, words)
        elif direction == "u":
            k = min(pivot, len(uu) - 1)
            uk, rest = uu[k], without(uu, k)
            out = chain.apply(1, 2, uk, rec(rest, vv))
            for i, vi in enumerate(vv):
                vrest = without(vv, i)
                coef = g(vi, uk, c) * prod_over_sets(f, vrest, (vi,), c)
                out.axpy(coef, chain.apply(1, 3, uk, rec(rest, vrest)))
            out = out.scaled(1 / (chain.lam2(uk) * prod_over_sets(f, vv, (uk,), c)))
        else:
            k = min(pivot, len(vv) - 1)
            vk, rest = vv[k], without(vv, k)
            out = chain.apply(2, 3, vk, rec(uu, rest))
            for j, uj in enumerate(uu):
                urest = without(uu, j)
                coef = g(vk, uj, c) * prod_over_sets(f, (uj,), urest, c)
                out.axpy(coef, chain.apply(1, 3, vk, rec(urest, rest)))
            out = out.scaled(1 / (chain.lam2(vk) * prod_over_sets(f, (vk,), uu, c)))
        memo[key] = out
        return out

    state = rec(us, vs)
    return BetheVector(state, us, vs, f"recursion-{direction}", chain, terms=count[0], meta={"pivot": pivot})


# -- trace formula -----------------------------------------------------------

def default_insertion(a: int, b: int) -> tuple:
    return ((2, 1),) * a + ((3, 2),) * b


def xj_insertion(a: int, b: int, j: int) -> tuple:
    """e21^(a-1) (x) e32^(j-1) (x) e22 (x) e32^(b-j), for 1 <= j <= b."""
    return ((2, 1),) * (a - 1) + ((3, 2),) * (j - 1) + ((2, 2),) + ((3, 2),) * (b - j)


def _apply_r(vec: dict, pos_b: int, pos_a: int, x, y, c) -> dict:
    """R_{B A}(x, y) = (I + g P_{BA}) / f on a sparse aux-index vector."""
    keep, swap = f_inv(x, y, c), h_inv(x, y, c)
    out: dict = {}
    for idx, amp in vec.items():
        out[idx] = out.get(idx, 0) + keep * amp
        s = list(idx)
        s[pos_b], s[pos_a] = s[pos_a], s[pos_b]
        s = tuple(s)
        out[s] = out.get(s, 0) + swap * amp
    return {k: v for k, v in out.items() if v != 0}


def r_product_column(us, vs, column, c, order="literal") -> dict:
    """The column ``R_{b,a}(v; u) e_column`` as {aux multi-index: coefficient}.

    The product is [R_{B1 Aa} ... R_{B1 A1}] ... [R_{Bb Aa} ... R_{Bb A1}]
    ("literal"); ``order="reversed"`` flips the inner products to
    R_{Bi A1} ... R_{Bi Aa}. The rightmost factor acts first.
    """
    a = len(us)
    vec = {tuple(column): ONE}
    inner = range(a) if order == "literal" else range(a - 1, -1, -1)
    for i in range(len(vs) - 1, -1, -1):
        for j in inner:
            vec = _apply_r(vec, a + i, j, vs[i], us[j], c)
    return vec


def trace_with_insertion(chain: MonodromyChain, us: Sequence, vs: Sequence, insertion: Sequence,
                         order: str = "literal", words: OperatorWords | None = None) -> SparseState:
    """tr over a+b aux spaces of T_a(u) T_b(v) R_{b,a}(v; u) E, applied to |0>.

    ``insertion`` lists one elementary matrix ``(p, q)`` per aux space, the
    u-spaces first. No lambda_2 normalisation is applied.
    """
    us, vs = tuple(us), tuple(vs)
    n = len(us) + len(vs)
    if len(insertion) != n:
        raise ValueError("insertion needs one factor per auxiliary space")
    if n > TRACE_MAX_ROOTS or chain.L > TRACE_MAX_SITES:
        raise ResourceError(f"trace formula limited to a+b <= {TRACE_MAX_ROOTS} and L <= {TRACE_MAX_SITES}")
    # tr(M e_pq) = M_qp: the row index comes from q, the column from p
    rows = tuple(q for p, q in insertion)
    cols = tuple(p for p, q in insertion)
    points = us + vs
    words = words or OperatorWords(chain)
    state = SparseState()
    for mid, coef in sorted(r_product_column(us, vs, cols, chain.c, order).items()):
        word = tuple((rows[k], mid[k], points[k]) for k in range(n))
        state.axpy(coef, words(word))
    return state


def build_trace(chain: MonodromyChain, us: Sequence, vs: Sequence, order: str = "literal") -> BetheVector:
    us, vs = _distinct(us, "u"), _distinct(vs, "v")
    raw = trace_with_insertion(chain, us, vs, default_insertion(len(us), len(vs)), order)
    scale = 1 / (lam2_of(chain, us) * lam2_of(chain, vs))
    terms = len(r_product_column(us, vs, default_insertion(len(us), len(vs)), chain.c, order))
    return BetheVector(raw.scaled(scale), us, vs, "trace", chain, terms=terms, meta={"order": order})


def build(chain: MonodromyChain, us: Sequence, vs: Sequence, method: str = "explicit1", pivot: int = 0) -> BetheVector:
    if method.startswith("explicit"):
        return build_explicit(chain, us, vs, int(method[-1]))
    if method == "recursion-u":
        return build_recursive(chain, us, vs, "u", pivot)
    if method == "recursion-v":
        return build_recursive(chain, us, vs, "v", pivot)
    if method == "trace":
        return build_trace(chain, us, vs)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def bethe_state(chain: MonodromyChain, us: Sequence, vs: Sequence) -> SparseState:
    """B^{a,b} from the first explicit sum; tolerates values shared by u and v."""
    return build_explicit(chain, us, vs, 1).state


# -- X_j relation and normalisation -----------------------------------------

def xj_state(chain: MonodromyChain, us: Sequence, vs: Sequence, j: int, words=None) -> SparseState:
    """X_j: trace over the spaces of (u minus u_1; v) with the E_j insertion."""
    us, vs = tuple(us), tuple(vs)
    return trace_with_insertion(chain, us[1:], vs, xj_insertion(len(us), len(vs), j), words=words)


def check_Xj_relation(chain: MonodromyChain, us: Sequence, vs: Sequence, j: int) -> Case:
    """X_j + sum_{k>j} g(v_k, v_j) prod f(v_l, v_j) X_k against the B^{a-1,b-1} side."""
    us, vs = tuple(us), tuple(vs)
    a, b = len(us), len(vs)
    if a < 1 or b < 1 or not 1 <= j <= b:
        raise ValueError("need a >= 1, b >= 1 and 1 <= j <= b")
    c = chain.c
    words = OperatorWords(chain)
    vj = vs[j - 1]
    lhs = SparseState(xj_state(chain, us, vs, j, words))
    for k in range(j + 1, b + 1):
        vk = vs[k - 1]
        coef = g(vk, vj, c) * prod(f(vs[l - 1], vj, c) for l in range(j + 1, k))
        lhs.axpy(coef, xj_state(chain, us, vs, k, words))
    scale = lam2_of(chain, us[1:]) * lam2_of(chain, vs) * prod(f(vs[l - 1], vj, c) for l in range(j + 1, b + 1))
    rhs = build_explicit(chain, us[1:], without(vs, j - 1), 1).state.scaled(scale)
    return compare("triangular X_j relation", {"u": us, "v": vs, "j": j, "L": chain.L}, lhs, rhs)


def normalization_factor(chain: MonodromyChain, us: Sequence, vs: Sequence):
    return prod_over_sets(f, vs, us, chain.c) * lam2_of(chain, us) * lam2_of(chain, vs)


def renormalize(bv: BetheVector, to: str) -> BetheVector:
    if to not in (PAPER, TARASOV_VARCHENKO):
        raise ValueError(f"unknown normalization {to!r}")
    if to == bv.normalization:
        return bv
    factor = normalization_factor(bv.chain, bv.us, bv.vs)
    if to == PAPER:
        factor = 1 / factor
    return replace(bv, state=bv.state.scaled(factor), normalization=to)
