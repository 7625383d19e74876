from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl3bethe.errors import DuplicateError, SignatureError
from gl3bethe.partitions import enumerate_partitions, multinomial, split, union, without


def test_counts():
    assert len(list(enumerate_partitions("abc", (1, 2)))) == 3
    assert len(list(enumerate_partitions(range(5), (2, 2, 1)))) == 30


def test_empty_first_block():
    (p,) = enumerate_partitions((F(1), F(2)), (0, 2))
    assert p.parts == ((), (F(1), F(2)))


def test_bad_signature():
    with pytest.raises(SignatureError):
        list(enumerate_partitions("abc", (1, 1)))
    with pytest.raises(SignatureError):
        list(enumerate_partitions("abc", (3,)))


def test_blocks_keep_source_order():
    for p in enumerate_partitions((5, 3, 9, 1), (2, 2)):
        for block in p.blocks:
            assert list(block) == sorted(block)


def test_union():
    assert union((2,), (5, 7))[0] == (2, 5, 7)
    assert union((), (5, 7))[0] == (5, 7)
    merged, prov = union((2,), (5, 7))
    assert prov == (("a", 0), ("b", 0), ("b", 1))
    with pytest.raises(DuplicateError):
        union((2, 5), (5,))


def test_without_keeps_order():
    assert without((4, 1, 9, 2), 1) == (4, 9, 2)


@given(st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, n))))
def test_exhaustive_and_duplicate_free(args):
    n, k1, k2 = args
    if k1 + k2 > n:
        k2 = n - k1
    sig = (k1, k2, n - k1 - k2)
    parts = [p.blocks for p in enumerate_partitions(tuple(range(n)), sig)]
    assert len(parts) == len(set(parts)) == multinomial(n, sig)
    for blocks in parts:
        assert sorted(i for b in blocks for i in b) == list(range(n))
    assert parts == [p.blocks for p in enumerate_partitions(tuple(range(n)), sig)]


def test_split_yields_values():
    assert list(split((7, 8), 1, 1)) == [((7,), (8,)), ((8,), (7,))]
