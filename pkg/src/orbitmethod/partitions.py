"""Partitions and Levi block lists for type A."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts) -> Partition:
        if len(parts) == 1 and isinstance(parts[0], (list, tuple)):
            parts = tuple(parts[0])
        return cls(tuple(sorted((int(p) for p in parts if int(p) != 0), reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def transpose(self) -> Partition:
        return partition_transpose(self)

    def is_zero_orbit(self) -> bool:
        return all(p == 1 for p in self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partition_transpose(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x > k) for k in range(p.parts[0])))


def partition_colsum(ps: Sequence[Partition]) -> Partition:
    """Columnwise sum of zero-padded partitions (type-A induction of nilpotent orbits)."""
    if not ps:
        raise EmptyInput("partition_colsum needs at least one partition")
    cols = [sum(c) for c in zip_longest(*(p.parts for p in ps), fillvalue=0)]
    return Partition(tuple(cols))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    for parts in _partitions(n, n if max_part is None else max_part):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def zero_orbit(n: int) -> Partition:
    return Partition((1,) * n)


def regular_orbit(n: int) -> Partition:
    return Partition((n,))


@dataclass(frozen=True)
class LeviBlocks:
    """Block sizes of a standard Levi GL(n_1) x ... x GL(n_k) inside GL(n)."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or any(s <= 0 for s in sizes):
            raise ValueError(f"Levi block sizes must be positive: {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def of(cls, *sizes) -> LeviBlocks:
        if len(sizes) == 1 and isinstance(sizes[0], (list, tuple)):
            sizes = tuple(sizes[0])
        return cls(tuple(sizes))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def is_proper(self) -> bool:
        return len(self.sizes) > 1

    def ranges(self) -> list[range]:
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out

    def __str__(self):
        return "(" + ",".join(str(s) for s in self.sizes) + ")"


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered block lists summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def coarsenings(sizes: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Ways to merge consecutive blocks; each item groups the original blocks."""
    sizes = tuple(sizes)
    if not sizes:
        yield ()
        return
    for cut in range(1, len(sizes) + 1):
        head = sizes[:cut]
        for rest in coarsenings(sizes[cut:]):
            yield (head,) + rest


def partition_tuples(sizes: Iterable[int]) -> Iterator[tuple[Partition, ...]]:
    """Every tuple of partitions, one partition of each block size."""
    sizes = tuple(sizes)
    if not sizes:
        yield ()
        return
    for p in partitions(sizes[0]):
        for rest in partition_tuples(sizes[1:]):
            yield (p,) + rest


def partition_count(n: int) -> int:
    return len(_partitions(n, n))
