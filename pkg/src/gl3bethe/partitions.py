"""Ordered set partitions with prescribed block sizes.

Every partition sum in the package runs over one of these streams. Blocks keep
the source order (indices strictly increase inside a block), and streams come
out in a fixed lexicographic order so that exact sums are reproducible term by
term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import DuplicateError, SignatureError


@dataclass(frozen=True)
class Partition:
    source: tuple
    blocks: tuple[tuple[int, ...], ...]

    @property
    def parts(self) -> tuple[tuple, ...]:
        return tuple(tuple(self.source[i] for i in block) for block in self.blocks)


def _check_signature(n: int, signature: tuple[int, ...]) -> None:
    if len(signature) not in (2, 3):
        raise SignatureError(f"expected 2 or 3 blocks, got {len(signature)}")
    if any(s < 0 for s in signature) or sum(signature) != n:
        raise SignatureError(f"block sizes {signature} do not add up to {n}")


def _blocks(indices: tuple[int, ...], sizes: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    if len(sizes) == 1:
        yield (indices,)
        return
    for first in combinations(indices, sizes[0]):
        chosen = set(first)
        rest = tuple(i for i in indices if i not in chosen)
        for tail in _blocks(rest, sizes[1:]):
            yield (first,) + tail


def enumerate_partitions(source: Sequence, signature: Sequence[int]) -> Iterator[Partition]:
    source = tuple(source)
    signature = tuple(signature)
    _check_signature(len(source), signature)
    for blocks in _blocks(tuple(range(len(source))), signature):
        yield Partition(source, blocks)


def split(source: Sequence, *sizes: int) -> Iterator[tuple[tuple, ...]]:
    """Shorthand yielding just the value blocks of each partition."""
    for p in enumerate_partitions(source, sizes):
        yield p.parts


def multinomial(n: int, signature: Sequence[int]) -> int:
    out, left = 1, n
    for s in signature:
        out *= math.comb(left, s)
        left -= s
    return out


def union(a: Sequence, b: Sequence) -> tuple[tuple, tuple[tuple[str, int], ...]]:
    """Concatenate two disjoint sets, ``a`` first.

    Returns the merged tuple and, for each merged position, where it came from
    as ``("a", i)`` or ``("b", j)``.
    """
    a, b = tuple(a), tuple(b)
    shared = set(a) & set(b)
    if shared:
        raise DuplicateError(f"sets share values {sorted(shared)}")
    provenance = tuple(("a", i) for i in range(len(a))) + tuple(("b", j) for j in range(len(b)))
    return a + b, provenance


def without(values: Sequence, index: int) -> tuple:
    """The set with one element removed, survivors kept in order."""
    return tuple(values[:index]) + tuple(values[index + 1:])
