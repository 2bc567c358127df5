#!/usr/bin/env python3

"""Set partitions, compositions and integer partitions."""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from coalescent_zeta.core.config import cfg
from coalescent_zeta.core.errors import SizeGuardError

__all__ = [
    "SetPartition",
    "Composition",
    "set_partitions",
    "restricted_growth_strings",
    "bell_number",
    "compositions_min2",
    "integer_partitions",
    "block_type_count",
]


@dataclass(frozen=True)
class SetPartition(object):
    """Partition of {1, ..., i} into blocks, sorted by least element."""

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        err_str = "Blocks must be non-empty"
        assert all(blocks), err_str
        elements = sorted(x for b in blocks for x in b)
        err_str = "Blocks must be disjoint and cover 1..{}: {}"
        assert elements == list(range(1, len(elements) + 1)), err_str.format(
            len(elements), blocks
        )
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_rgs(cls, rgs):
        """Builds the partition whose element k + 1 lies in block rgs[k]."""
        blocks = [[] for _ in range(max(rgs) + 1)] if rgs else []
        for k, b in enumerate(rgs):
            blocks[b].append(k + 1)
        return cls(tuple(tuple(b) for b in blocks))

    @property
    def size(self):
        return sum(len(b) for b in self.blocks)

    @property
    def num_blocks(self):
        return len(self.blocks)

    @property
    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def restricted_growth_strings(i):
    """Yields a_1..a_i with a_1 = 0 and a_k <= 1 + max(a_<k), lexicographically."""
    if i == 0:
        yield ()
        return
    rgs = [0] * i
    tops = [0] * i

    def fill(k):
        if k == i:
            yield tuple(rgs)
            return
        for v in range(tops[k - 1] + 2):
            rgs[k] = v
            tops[k] = max(tops[k - 1], v)
            yield from fill(k + 1)

    yield from fill(1)


def _check_set_size(i):
    err_str = "Set size must be at least 1, got {}"
    assert i >= 1, err_str.format(i)
    if i > cfg.ENUM.MAX_SET_SIZE:
        err_str = "Set partitions of {} elements exceed ENUM.MAX_SET_SIZE={}"
        raise SizeGuardError(err_str.format(i, cfg.ENUM.MAX_SET_SIZE))


def set_partitions(i):
    """Yields every partition of {1, ..., i} once, in restricted-growth-string order."""
    _check_set_size(i)
    for rgs in restricted_growth_strings(i):
        yield SetPartition.from_rgs(rgs)


def block_type_count(i, min_block=1):
    """Counter of sorted block-size tuples over all partitions of {1, ..., i}."""
    _check_set_size(i)
    counts = Counter()
    for rgs in restricted_growth_strings(i):
        sizes = Counter(rgs).values()
        if min(sizes) >= min_block:
            counts[tuple(sorted(sizes, reverse=True))] += 1
    return counts


def bell_number(i):
    """Number of partitions of an i-set, from the Bell triangle."""
    err_str = "Bell numbers are defined for i >= 0, got {}"
    assert i >= 0, err_str.format(i)
    row = [1]
    for _ in range(i):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class Composition(object):
    """Ordered parts (n_1, ..., n_i), every part at least 2."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        err_str = "Composition parts must be at least 2: {}"
        assert parts and min(parts) >= 2, err_str.format(parts)
        object.__setattr__(self, "parts", parts)

    @property
    def total(self):
        return sum(self.parts)

    @property
    def multinomial(self):
        """n! / (n_1! ... n_i!)."""
        denom = math.prod(math.factorial(p) for p in self.parts)
        return math.factorial(self.total) // denom

    def __len__(self):
        return len(self.parts)


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(2, n + 1):
        if n - first == 1:
            continue
        for rest in _compositions(n - first):
            yield (first,) + rest


def compositions_min2(n):
    """Yields the compositions of n into parts >= 2 (none for n = 1)."""
    err_str = "Compositions need n >= 1, got {}"
    assert n >= 1, err_str.format(n)
    for parts in _compositions(n):
        yield Composition(parts)


def integer_partitions(n, min_part=1, max_part=None):
    """Yields partitions of n as non-increasing tuples of parts in [min, max]."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), min_part - 1, -1):
        for rest in integer_partitions(n - first, min_part, first):
            yield (first,) + rest
