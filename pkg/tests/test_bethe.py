from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import generic_lists
from gl3bethe.bethe import (
    METHODS,
    PAPER,
    TARASOV_VARCHENKO,
    build,
    build_explicit,
    build_recursive,
    build_trace,
    check_Xj_relation,
    normalization_factor,
    renormalize,
    trace_with_insertion,
)
from gl3bethe.chain import MonodromyChain, SparseState
from gl3bethe.errors import DuplicateError, ResourceError
from gl3bethe.scalars import GenericSampler, f
from gl3bethe.suites import check_construction_routes, routes

THETAS = (F(0), F(1, 3), F(5, 2))
GRID = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)]


def mixed(L):
    return MonodromyChain(THETAS[:L], dual=(1,))


def test_empty_vector_is_vacuum():
    chain = MonodromyChain(THETAS)
    for method in METHODS:
        assert build(chain, (), (), method).state == chain.vacuum()


def test_single_root_single_site():
    chain = MonodromyChain([0])
    for method in ("explicit1", "explicit4", "recursion-u", "trace"):
        assert build(chain, (F(2),), (), method).state == SparseState({(2,): F(1, 2)})


@pytest.mark.parametrize("L", [2, 3])
@pytest.mark.parametrize("a,b", GRID)
def test_all_routes_agree_on_nonzero_states(L, a, b):
    chain = mixed(L)
    vals = GenericSampler(100 * a + 10 * b + L).draw(a + b, avoid=chain.thetas)
    us, vs = vals[:a], vals[a:]
    assert build_explicit(chain, us, vs).state, "companion chain should give a nonzero vector"
    cases = check_construction_routes(chain, us, vs)
    assert len(cases) == len(routes(a, b, L)) - 1
    assert all(c.passed for c in cases)


def test_fundamental_chain_vectors_can_vanish():
    chain = MonodromyChain(THETAS)
    assert build_explicit(chain, (), (F(7, 2),)).state == SparseState()
    assert build_explicit(chain, (F(9, 4),), (F(7, 2), F(-3, 5))).state == SparseState()


def test_trace_reversed_reading_disagrees():
    chain = mixed(3)
    us, vs = (F(9, 4), F(-13, 3)), (F(7, 2),)
    literal = build_trace(chain, us, vs).state
    reversed_ = build_trace(chain, us, vs, order="reversed").state
    assert literal == build_explicit(chain, us, vs).state
    assert reversed_ != literal


def test_trace_with_diagonal_insertion():
    chain = mixed(2)
    u = F(17, 6)
    state = trace_with_insertion(chain, (u,), (), ((1, 1),))
    assert state == chain.vacuum().scaled(chain.weights(u)[0])


def test_trace_default_insertion_unnormalised():
    chain = mixed(2)
    us, vs = (F(9, 4),), (F(7, 2),)
    raw = trace_with_insertion(chain, us, vs, ((2, 1), (3, 2)))
    scale = chain.lam2(us[0]) * chain.lam2(vs[0])
    assert raw == build_explicit(chain, us, vs).state.scaled(scale)


def test_trace_resource_bound():
    chain = mixed(2)
    vals = GenericSampler(1).draw(5, avoid=chain.thetas)
    with pytest.raises(ResourceError):
        build_trace(chain, vals[:3], vals[3:])


def test_repeated_roots_rejected():
    chain = mixed(2)
    with pytest.raises(DuplicateError):
        build_explicit(chain, (F(1, 7), F(1, 7)), ())


@pytest.mark.parametrize("a,b,j", [(1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 1), (2, 2, 2)])
def test_xj_relation(a, b, j):
    chain = mixed(3)
    vals = GenericSampler(7 * a + b).draw(a + b, avoid=chain.thetas)
    assert check_Xj_relation(chain, vals[:a], vals[a:], j).passed


def test_renormalize_round_trip():
    chain = mixed(2)
    us, vs = (F(9, 4),), (F(7, 2),)
    bv = build_explicit(chain, us, vs)
    tv = renormalize(bv, TARASOV_VARCHENKO)
    assert tv.normalization == TARASOV_VARCHENKO
    expected = f(vs[0], us[0]) * chain.lam2(us[0]) * chain.lam2(vs[0])
    assert normalization_factor(chain, us, vs) == expected
    assert tv.state == bv.state.scaled(expected)
    assert renormalize(tv, PAPER).state == bv.state
    assert renormalize(build_explicit(chain, (), ()), TARASOV_VARCHENKO).state == chain.vacuum()
    with pytest.raises(ValueError):
        renormalize(bv, "other")


def test_json_schema():
    chain = MonodromyChain([0])
    data = build(chain, (F(2),), (), "explicit2").to_json()
    assert set(data) == {"L", "c", "theta", "a", "b", "u", "v", "method", "normalization", "entries"}
    assert data["entries"] == [{"word": "2", "num": "1", "den": "2"}]
    assert data["method"] == "explicit2" and data["u"] == ["2"]


def test_recursion_pivots_agree():
    chain = mixed(3)
    vals = GenericSampler(3).draw(4, avoid=chain.thetas)
    us, vs = vals[:2], vals[2:]
    ref = build_explicit(chain, us, vs).state
    for d in ("u", "v"):
        for p in range(2):
            assert build_recursive(chain, us, vs, d, p).state == ref


@given(generic_lists(4), st.permutations(range(2)), st.permutations(range(2)))
def test_symmetric_in_each_root_set(vals, pu, pv):
    chain = mixed(2)
    if any(v in chain.poles() or v in chain.weight_poles() for v in vals):
        return
    us, vs = vals[:2], vals[2:]
    assert build_explicit(chain, us, vs).state == build_explicit(chain, [us[i] for i in pu], [vs[i] for i in pv]).state
