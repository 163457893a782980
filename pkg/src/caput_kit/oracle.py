"""Brute-force ground truth for small n.

Everything here counts actual permutations and set partitions; nothing
consults the class-size or distribution formulas.  Sizes are capped by
:func:`oracle_bound` (default 7, overridable with ``CAPUT_ORACLE_MAX``).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from . import kernels
from .partitions import CycleType, Partition, cycle_type_to_partition

__all__ = [
    "Perm",
    "OrderedSetPartition",
    "OracleBoundError",
    "oracle_bound",
    "cycle_type_of",
    "canonical_representative",
    "random_conjugate",
    "oracle_class_size",
    "oracle_class_sizes",
    "oracle_young_class_counts",
    "ordered_set_partitions",
    "oracle_induced_value",
    "oracle_splittable",
]

DEFAULT_ORACLE_MAX = 7


class OracleBoundError(ValueError):
    pass


def oracle_bound() -> int:
    raw = os.environ.get("CAPUT_ORACLE_MAX")
    if raw is None:
        return DEFAULT_ORACLE_MAX
    try:
        bound = int(raw)
    except ValueError:
        raise OracleBoundError(f"CAPUT_ORACLE_MAX must be an integer, got {raw!r}") from None
    # the compiled sweep and the subset bitmasks stop at 12 points
    return max(0, min(bound, 12))


def _check_bound(n: int, bound: int | None) -> None:
    limit = oracle_bound() if bound is None else bound
    if n > limit:
        raise OracleBoundError(f"n={n} exceeds the oracle bound {limit}")


@dataclass(frozen=True)
class Perm:
    """A permutation of ``{0, ..., n-1}`` in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # (self * other)(x) = self(other(x))
        return Perm(tuple(self.images[y] for y in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(tuple(inv))


@dataclass(frozen=True)
class OrderedSetPartition:
    blocks: tuple[frozenset[int], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def is_invariant_under(self, perm: Perm) -> bool:
        return all({perm(x) for x in b} == b for b in self.blocks)


def cycle_type_of(p: Perm) -> CycleType:
    return CycleType(kernels.cycle_multiplicities(p.images))


def canonical_representative(rho: CycleType) -> Perm:
    """Cycles laid out on consecutive points, longest first."""
    images: list[int] = []
    start = 0
    for length in cycle_type_to_partition(rho).parts:
        images.extend(start + (k + 1) % length for k in range(length))
        start += length
    return Perm(tuple(images))


def random_conjugate(rho: CycleType, rng: random.Random) -> Perm:
    rep = canonical_representative(rho)
    shuffled = list(range(rep.n))
    rng.shuffle(shuffled)
    g = Perm(tuple(shuffled))
    return g * rep * g.inverse()


def oracle_class_sizes(n: int, bound: int | None = None) -> dict[CycleType, int]:
    """Histogram of cycle types over all ``n!`` permutations."""
    _check_bound(n, bound)
    return {CycleType(k): v for k, v in kernels.cycle_type_histogram(n).items()}


def oracle_class_size(n: int, rho: CycleType, bound: int | None = None) -> int:
    if rho.n != n:
        raise ValueError(f"cycle type {rho} has weight {rho.n}, expected {n}")
    return oracle_class_sizes(n, bound).get(rho, 0)


def _block_labels(shape: Sequence[int]) -> list[int]:
    labels: list[int] = []
    for i, size in enumerate(shape):
        labels.extend([i] * size)
    return labels


def oracle_young_class_counts(lam: Partition, bound: int | None = None) -> dict[CycleType, int]:
    """Elements of S_lambda (blocks of consecutive points) bucketed by ambient cycle type."""
    _check_bound(lam.n, bound)
    hist = kernels.cycle_type_histogram(lam.n, _block_labels(lam.parts))
    return {CycleType(k): v for k, v in hist.items()}


def ordered_set_partitions(shape: Sequence[int]) -> Iterator[OrderedSetPartition]:
    """All sequences of disjoint blocks of the given sizes covering ``{0..n-1}``."""
    n = sum(shape)

    def rec(remaining: tuple[int, ...], i: int) -> Iterator[tuple[frozenset[int], ...]]:
        if i == len(shape):
            yield ()
            return
        for block in combinations(remaining, shape[i]):
            rest = tuple(x for x in remaining if x not in block)
            for tail in rec(rest, i + 1):
                yield (frozenset(block),) + tail

    for blocks in rec(tuple(range(n)), 0):
        yield OrderedSetPartition(blocks)


def oracle_induced_value(
    lam: Partition, rho: CycleType, rep: Perm | None = None, bound: int | None = None
) -> int:
    """Ordered set partitions of shape ``lam`` whose blocks are all fixed by ``rep``.

    ``rep`` defaults to the canonical representative of ``rho``.
    """
    if lam.n != rho.n:
        raise ValueError(f"partition {lam} has weight {lam.n} but cycle type {rho} has weight {rho.n}")
    _check_bound(lam.n, bound)
    if rep is None:
        rep = canonical_representative(rho)
    elif cycle_type_of(rep) != rho:
        raise ValueError(f"representative {rep.images} is not in class {rho}")
    return kernels.count_invariant_blockings(rep.images, lam.parts)


def oracle_splittable(lam: Partition, rho: CycleType) -> bool:
    """Can the cycle lengths of ``rho`` be dealt to the parts of ``lam`` with matching sums?

    Depth-first search over assignments of individual cycles to parts.
    """
    if lam.n != rho.n:
        return False
    cycles = cycle_type_to_partition(rho).parts
    room = list(lam.parts)

    def place(k: int) -> bool:
        if k == len(cycles):
            return not any(room)
        for i in range(len(room)):
            if room[i] >= cycles[k]:
                room[i] -= cycles[k]
                found = place(k + 1)
                room[i] += cycles[k]
                if found:
                    return True
        return False

    return place(0)
