from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import generic_lists, rationals
from gl3bethe.errors import CardinalityError, GenericityError, PoleError
from gl3bethe.identities import (
    G_product,
    G_sum,
    check_allequal_remark,
    check_big_k_reductions,
    check_G_identity,
    check_ik_identities,
    check_ik_reductions,
    check_partition_lemma,
    ik_residue,
    lemma_sum,
)
from gl3bethe.scalars import (
    GenericSampler,
    as_rational,
    f,
    f_inv,
    g,
    h,
    ik_determinant,
    ik_over_f,
    is_generic,
    prod_over_sets,
    t,
)


def test_g_values():
    assert g(3, 1) == F(1, 2)
    assert g(0, 2) == F(-1, 2)
    assert g(5, 1, c=2) == F(1, 2)


def test_f_h_t_values():
    assert f(2, 1) == 2
    assert h(2, 1) == 2
    assert t(2, 1) == F(1, 2)


def test_f_product_with_its_swap():
    assert f(3, 1) * f(1, 3) == F(3, 4) == 1 - g(3, 1) ** 2


def test_poles_raise():
    with pytest.raises(PoleError):
        g(1, 1)
    with pytest.raises(PoleError):
        f(F(1, 2), F(1, 2))
    with pytest.raises(PoleError):
        t(0, 1)
    with pytest.raises(ZeroDivisionError):
        f_inv(0, 1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == F(3, 4)


def test_set_products():
    assert prod_over_sets(f, (3, 5), (1,)) == F(15, 8)
    assert prod_over_sets(f, (), (1, 2)) == 1
    assert prod_over_sets(g, (2,), (0, 1)) == F(1, 2)


def test_set_product_names_pole_pair():
    with pytest.raises(PoleError) as info:
        prod_over_sets(f, (1, 2), (2,))
    assert info.value.pair == (2, 2)


def test_ik_small_values():
    assert ik_determinant((0,), (2,)) == F(-1, 2)
    assert ik_determinant((1, 7), (4, 8)) == F(1, 3) == -ik_determinant((1,), (4,))
    assert ik_determinant((), ()) == 1


def test_ik_cardinality_and_poles():
    with pytest.raises(CardinalityError):
        ik_determinant((1, 2), (3,))
    with pytest.raises(PoleError):
        ik_determinant((1, 2), (2, 5))


def test_ik_allows_minus_c_coincidence():
    # x - y = -c is a zero of h, which the determinant absorbs
    assert ik_determinant((0,), (1,)) == g(0, 1)
    assert ik_determinant((0, 5), (1, 9)) == -ik_determinant((5,), (9,))


def test_ik_over_f_is_regular_at_coincidence():
    xs, ys = (F(1, 3), F(7, 2)), (F(1, 3), F(-5, 4))
    eps = F(1, 10**9)
    near = ik_determinant(xs, (ys[0] + eps, ys[1])) / prod_over_sets(f, xs, (ys[0] + eps, ys[1]))
    exact = ik_over_f(xs, ys)
    assert abs(near - exact) < F(1, 10**6)


def test_one_term_all_equal_sum():
    x = F(3, 7)
    assert ik_determinant((x,), (x + 1,)) == -1


def test_g_identity_example():
    vs = (F(0), F(3))
    assert G_sum(vs, 1, 1) == F(9, 8) == G_product(vs, 1, 1)
    assert G_sum(vs, 1, 2) == 1 == G_product(vs, 1, 2)


def test_g_identity_random_b4():
    vs = GenericSampler(11).draw(4)
    for j in range(1, 5):
        for k in range(j, 5):
            assert check_G_identity(4, j, k, vs).passed


def test_g_identity_bounds():
    with pytest.raises(ValueError):
        check_G_identity(2, 2, 1, (0, 3))


@pytest.mark.parametrize("nx,ny,expected", [(1, 0, -1), (1, 1, -1), (2, 1, 1), (3, 1, -1)])
def test_allequal_sums(nx, ny, expected):
    ws = GenericSampler(nx * 10 + ny).draw(nx + ny)
    report = check_allequal_remark(nx, ny, ws)
    assert report.passed
    assert all(c.passed for c in report.cases) and (-1) ** nx == expected


def test_partition_lemma_two_term():
    gammas, alphas, betas = (F(1), F(5)), (F(11, 2),), (F(-7, 3),)
    direct = sum(
        ik_determinant(gI, alphas) * ik_determinant(betas, gII) * prod_over_sets(f, gII, gI)
        for gI, gII in (((gammas[0],), (gammas[1],)), ((gammas[1],), (gammas[0],)))
    )
    assert lemma_sum(gammas, alphas, betas) == direct
    assert all(c.passed for c in check_partition_lemma(gammas, alphas, betas))


def test_residue_limit_n1():
    # eps * g(x, x + eps) = -c exactly
    assert ik_residue((F(2),), (F(9),)) == -1


def test_identity_report_is_clean_and_deterministic():
    r1 = check_ik_identities(trials=12, seed=5)
    r2 = check_ik_identities(trials=12, seed=5)
    assert r1.passed
    assert r1.dumps() == r2.dumps()
    names = {name for name, _, _ in r1.summary()}
    assert "K residue at x_n = y_n" in names and "big K reduction onto y, row type" in names


def test_sampler_genericity():
    s = GenericSampler(0, window=3, max_den=1, max_tries=50)
    with pytest.raises(GenericityError):
        s.draw(10)
    vals = GenericSampler(1).draw(8)
    assert is_generic(vals)


@given(generic_lists(4), st.permutations(range(2)), st.permutations(range(2)))
def test_ik_symmetric_within_sets(vals, px, py):
    xs, ys = vals[:2], vals[2:]
    assert ik_determinant(xs, ys) == ik_determinant([xs[i] for i in px], [ys[i] for i in py])


@given(generic_lists(7))
def test_ik_reductions_property(vals):
    xs, ys, z = tuple(vals[:3]), tuple(vals[3:6]), vals[6]
    assert all(case.passed for case in check_ik_reductions(xs, ys, z))


@given(generic_lists(4))
def test_big_k_reductions_property(vals):
    assert all(case.passed for case in check_big_k_reductions(vals[:2], vals[2:]))


@given(generic_lists(6))
def test_partition_lemma_property(vals):
    assert all(case.passed for case in check_partition_lemma(vals[:3], vals[3:5], vals[5:]))


@given(rationals(), rationals(), st.sampled_from([F(1), F(2), F(-1, 3)]))
def test_f_g_h_t_relations(x, y, c):
    if x == y or x - y + c == 0:
        return
    assert f(x, y, c) == 1 + g(x, y, c)
    assert h(x, y, c) == f(x, y, c) / g(x, y, c)
    assert t(x, y, c) == g(x, y, c) / h(x, y, c)
    assert f(x, y, c) * f(y, x, c) == 1 - g(x, y, c) ** 2
