"""Defining relations of the Yangian checked on the chain.

Every check returns :class:`Case` records; nothing here raises on a failed
identity. Operator identities are tested either on the full basis (true
matrix equality) or on random sparse states.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .chain import MonodromyChain, OperatorWords, SparseOperator, SparseState, ops, r_matrix
from .linalg import identity, inverse, kron, matmul
from .partitions import split, without
from .report import Case, compare, digest
from .scalars import GenericSampler, f, g, ik_determinant, prod_over_sets, shift

INDICES = (1, 2, 3)


def _matrix_case(identity_name, params, lhs, rhs) -> Case:
    ok = lhs == rhs
    flat = lambda m: {(i, j): x for i, row in enumerate(m) for j, x in enumerate(row) if x != 0}
    return Case(identity_name, params, ok, digest(flat(lhs)), digest(flat(rhs)))


def _perm_matrix(perm: Sequence[int]) -> list[list]:
    """Permutation of three tensor factors of C^3 as a 27x27 matrix."""
    n = 27
    m = [[Fraction(0)] * n for _ in range(n)]
    for idx in product(range(3), repeat=3):
        src = idx[0] * 9 + idx[1] * 3 + idx[2]
        moved = [0, 0, 0]
        for pos, target in enumerate(perm):
            moved[target] = idx[pos]
        dst = moved[0] * 9 + moved[1] * 3 + moved[2]
        m[dst][src] = Fraction(1)
    return m


def check_yang_baxter(x, y, z, c=Fraction(1), sampler: GenericSampler | None = None) -> list[Case]:
    """Yang-Baxter on C^3 (x) C^3 (x) C^3, unitarity and GL(3) invariance."""
    i3 = identity(3)
    r12 = kron(r_matrix(x, y, c), i3)
    r23 = kron(i3, r_matrix(y, z, c))
    swap23 = _perm_matrix((0, 2, 1))
    r13 = matmul(swap23, matmul(kron(r_matrix(x, z, c), i3), swap23))
    lhs = matmul(matmul(r12, r13), r23)
    rhs = matmul(matmul(r23, r13), r12)
    params = {"x": x, "y": y, "z": z, "c": c}
    cases = [_matrix_case("Yang-Baxter equation", params, lhs, rhs)]

    unit = matmul(r_matrix(x, y, c), r_matrix(y, x, c))
    cases.append(_matrix_case("R-matrix unitarity", {"x": x, "y": y, "c": c}, unit, identity(9)))

    sampler = sampler or GenericSampler(0, c)
    while True:
        gmat = [[sampler.rational() for _ in range(3)] for _ in range(3)]
        try:
            ginv = inverse(gmat)
            break
        except ZeroDivisionError:
            continue
    gg, gginv = kron(gmat, gmat), kron(ginv, ginv)
    conj = matmul(matmul(gg, r_matrix(x, y, c)), gginv)
    cases.append(_matrix_case("GL(3) invariance of R", {"x": x, "y": y, "c": c, "g": gmat}, conj, r_matrix(x, y, c)))
    return cases


def random_state(chain: MonodromyChain, sampler: GenericSampler, density: int = 6) -> SparseState:
    words = chain.words()
    picks = sorted({words[sampler.rng.randrange(len(words))] for _ in range(density)})
    return SparseState(zip(picks, sampler.sparse_coefficients(len(picks))))


def check_rtt(chain: MonodromyChain, u, v) -> Case:
    """R12(u,v) T1(u) T2(v) = T2(v) T1(u) R12(u,v) as operators on aux (x) aux (x) quantum."""
    c = chain.c
    R = r_matrix(u, v, c)
    Tu, Tv = chain.monodromy(u), chain.monodromy(v)
    prods_l = {(k, p, l, q): Tu[(k, p)] @ Tv[(l, q)] for k, p, l, q in product(INDICES, repeat=4)}
    prods_r = {(j, l, i, k): Tv[(j, l)] @ Tu[(i, k)] for j, l, i, k in product(INDICES, repeat=4)}
    ok = True
    lhs_all, rhs_all = {}, {}
    for i, j, p, q in product(INDICES, repeat=4):
        lhs, rhs = SparseOperator(), SparseOperator()
        for k, l in product(INDICES, repeat=2):
            a = R[3 * (i - 1) + j - 1][3 * (k - 1) + l - 1]
            if a:
                lhs = lhs + prods_l[(k, p, l, q)].scaled(a)
            b = R[3 * (k - 1) + l - 1][3 * (p - 1) + q - 1]
            if b:
                rhs = rhs + prods_r[(j, l, i, k)].scaled(b)
        ok &= lhs == rhs
        for (row, col), m in lhs.entries().items():
            lhs_all[(i, j, p, q) + row + (0,) + col] = m
        for (row, col), m in rhs.entries().items():
            rhs_all[(i, j, p, q) + row + (0,) + col] = m
    return Case("RTT relation", {"u": u, "v": v, "L": chain.L}, ok, digest(lhs_all), digest(rhs_all))


def check_commutators(chain: MonodromyChain, u, v, state: SparseState) -> list[Case]:
    """Both commutator forms for all 81 index choices, applied to ``state``."""
    c = chain.c
    gc = g(u, v, c)
    A = lambda i, j, x, s: chain.apply(i, j, x, s)
    ok1 = ok2 = True
    l1, r1, r2 = SparseState(), SparseState(), SparseState()
    for i, j, k, l in product(INDICES, repeat=4):
        comm = A(i, j, u, A(k, l, v, state)) - A(k, l, v, A(i, j, u, state))
        form1 = (A(k, j, v, A(i, l, u, state)) - A(k, j, u, A(i, l, v, state))).scaled(gc)
        form2 = (A(i, l, u, A(k, j, v, state)) - A(i, l, v, A(k, j, u, state))).scaled(gc)
        ok1 &= comm == form1
        ok2 &= comm == form2
        tag = (i, j, k, l)
        for w, x in comm.items():
            l1.add_term(tag + w, x)
        for w, x in form1.items():
            r1.add_term(tag + w, x)
        for w, x in form2.items():
            r2.add_term(tag + w, x)
    params = {"u": u, "v": v, "L": chain.L}
    return [
        Case("commutator, first form", params, ok1, digest(l1), digest(r1)),
        Case("commutator, second form", params, ok2, digest(l1), digest(r2)),
    ]


def check_same_entry(chain: MonodromyChain, xs: Sequence, ys: Sequence, state: SparseState) -> Case:
    """T_ij(y) T_ij(x) = T_ij(x) T_ij(y) for products, every (i, j)."""
    ok = True
    lhs_all, rhs_all = SparseState(), SparseState()
    for i, j in product(INDICES, repeat=2):
        lhs = chain.apply_product(i, j, tuple(ys) + tuple(xs), state)
        rhs = chain.apply_product(i, j, tuple(xs) + tuple(ys), state)
        ok &= lhs == rhs
        for w, x in lhs.items():
            lhs_all.add_term((i, j) + w, x)
        for w, x in rhs.items():
            rhs_all.add_term((i, j) + w, x)
    return Case("same-entry commutativity", {"x": xs, "y": ys, "L": chain.L}, ok, digest(lhs_all), digest(rhs_all))


# -- multiple exchange relations --------------------------------------------

def exchange_rhs(chain, form, i, j, k, xs, ys, state, words=None) -> SparseState:
    """Right-hand side of one of the four multiple exchange relations.

    ``form`` is "row" (T_ij(y) T_ik(x)), "column" (T_ij(y) T_kj(x)) or their
    twins "row-twin" and "column-twin". The sum runs over w = {x, y} split as
    (w_I, w_II) with #w_II = #x.
    """
    c = chain.c
    nx, ny = len(xs), len(ys)
    w = tuple(xs) + tuple(ys)
    words = words or OperatorWords(chain, state)
    out = SparseState()
    for wI, wII in split(w, ny, nx):
        if form == "row":
            coef = (-1) ** nx * ik_determinant(xs, shift(wII, c), c) * prod_over_sets(f, wII, wI, c)
        elif form == "row-twin":
            coef = (-1) ** ny * ik_determinant(wI, shift(ys, c), c) * prod_over_sets(f, wII, wI, c)
        elif form == "column":
            coef = (-1) ** nx * ik_determinant(wII, shift(xs, c), c) * prod_over_sets(f, wI, wII, c)
        elif form == "column-twin":
            coef = (-1) ** ny * ik_determinant(ys, shift(wI, c), c) * prod_over_sets(f, wI, wII, c)
        else:
            raise ValueError(f"unknown exchange form {form!r}")
        if coef == 0:
            continue
        left = ops(i, k, wII) if form.startswith("row") else ops(k, j, wII)
        out.axpy(coef, words(left + ops(i, j, wI)))
    return out


def exchange_lhs(chain, form, i, j, k, xs, ys, state) -> SparseState:
    inner = ops(i, k, xs) if form.startswith("row") else ops(k, j, xs)
    return OperatorWords(chain, state)(ops(i, j, ys) + inner)


EXCHANGE_NAMES = {
    "row": "exchange T_ij(y) T_ik(x)",
    "row-twin": "exchange T_ij(y) T_ik(x), twin",
    "column": "exchange T_ij(y) T_kj(x)",
    "column-twin": "exchange T_ij(y) T_kj(x), twin",
}


def check_exchange_relations(chain: MonodromyChain, i: int, j: int, k: int, xs: Sequence, ys: Sequence,
                             state: SparseState, label: str = "") -> list[Case]:
    xs, ys = tuple(xs), tuple(ys)
    cases = []
    params = {"i": i, "j": j, "k": k, "x": xs, "y": ys, "L": chain.L}
    for form, name in EXCHANGE_NAMES.items():
        lhs = exchange_lhs(chain, form, i, j, k, xs, ys, state)
        rhs = exchange_rhs(chain, form, i, j, k, xs, ys, state)
        cases.append(compare(name + label, params, lhs, rhs))
    return cases


def check_standard_exchanges(chain: MonodromyChain, xs: Sequence, y, state: SparseState) -> list[Case]:
    """The textbook one-operator exchanges of T11 past T12 and of T21 past T11, plus T13 past T12."""
    c = chain.c
    xs = tuple(xs)
    words = OperatorWords(chain, state)
    cases = []

    lhs = words(ops(1, 1, (y,)) + ops(1, 2, xs))
    rhs = words(ops(1, 2, xs) + ops(1, 1, (y,))).scaled(prod_over_sets(f, xs, (y,), c))
    for l, xl in enumerate(xs):
        rest = without(xs, l)
        coef = -g(xl, y, c) * prod_over_sets(f, rest, (xl,), c)
        rhs.axpy(coef, words(ops(1, 2, rest + (y,)) + ops(1, 1, (xl,))))
    cases.append(compare("T11 past a product of T12", {"x": xs, "y": y, "L": chain.L}, lhs, rhs))

    # roles swapped: one x against a product over ys
    ys, x = xs, y
    lhs = words(ops(2, 1, ys) + ops(1, 1, (x,)))
    rhs = words(ops(1, 1, (x,)) + ops(2, 1, ys)).scaled(prod_over_sets(f, ys, (x,), c))
    for l, yl in enumerate(ys):
        rest = without(ys, l)
        coef = -g(yl, x, c) * prod_over_sets(f, rest, (yl,), c)
        rhs.axpy(coef, words(ops(1, 1, (yl,)) + ops(2, 1, rest + (x,))))
    cases.append(compare("product of T21 past T11", {"x": x, "y": ys, "L": chain.L}, lhs, rhs))

    if len(xs) == 1:
        (x1,) = xs
        lhs = words(ops(1, 3, (y,)) + ops(1, 2, (x1,)))
        rhs = words(ops(1, 2, (x1,)) + ops(1, 3, (y,))).scaled(f(x1, y, c))
        rhs.axpy(g(y, x1, c), words(ops(1, 2, (y,)) + ops(1, 3, (x1,))))
        cases.append(compare("T13 past T12, two-term form", {"x": x1, "y": y, "L": chain.L}, lhs, rhs))
    return cases


# -- highest weight data -----------------------------------------------------

def check_highest_weight(chain: MonodromyChain, points: Sequence) -> list[Case]:
    """Lowering entries kill |0>, T_ii|0> is a multiple of |0>, and the weights
    agree with their product formulas at every given point."""
    vac = chain.vacuum()
    cases = []
    for u in points:
        killed = SparseState()
        for i, j in ((2, 1), (3, 1), (3, 2)):
            for w, x in chain.apply(i, j, u, vac).items():
                killed.add_term((i, j) + w, x)
        cases.append(compare("lowering entries annihilate the vacuum", {"u": u, "L": chain.L}, killed, SparseState()))
        diag = SparseState()
        expect = SparseState()
        lam = chain.weights(u)
        for i in INDICES:
            for w, x in chain.apply(i, i, u, vac).items():
                diag.add_term((i,) + w, x)
            expect.add_term((i,) + next(iter(vac)), lam[i - 1])
        cases.append(compare("diagonal entries on the vacuum", {"u": u, "L": chain.L}, diag, expect))
        cases.append(compare("weights match product formulas", {"u": u, "L": chain.L},
                             SparseState({(i,): x for i, x in enumerate(lam)}),
                             SparseState({(i,): x for i, x in enumerate(chain.closed_form_weights(u))})))
    return cases


def check_transfer(chain: MonodromyChain, w, w2, state: SparseState) -> list[Case]:
    tw, tw2 = chain.transfer(w), chain.transfer(w2)
    params = {"w": w, "w2": w2, "L": chain.L}
    vac = chain.vacuum()
    return [
        compare("transfer matrices commute", params, tw(tw2(state)), tw2(tw(state))),
        compare("transfer matrix on the vacuum", {"w": w, "L": chain.L}, tw(vac), vac.scaled(sum(chain.weights(w)))),
    ]
