"""Pure-Python brute-force kernels; same contract as the compiled ``_kernels``."""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations
from typing import Sequence


def cycle_multiplicities(images: Sequence[int]) -> tuple[int, ...]:
    n = len(images)
    m = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i]
            length += 1
        m[length - 1] += 1
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


def cycle_type_histogram(n: int, block_of: Sequence[int] | None = None) -> dict[tuple[int, ...], int]:
    hist: Counter = Counter()
    for images in permutations(range(n)):
        if block_of is not None and any(block_of[images[i]] != block_of[i] for i in range(n)):
            continue
        hist[cycle_multiplicities(images)] += 1
    return dict(hist)


def count_invariant_blockings(images: Sequence[int], shape: Sequence[int]) -> int:
    def count(remaining: frozenset, i: int) -> int:
        if i == len(shape):
            return 1
        total = 0
        for block in combinations(sorted(remaining), shape[i]):
            s = set(block)
            if all(images[x] in s for x in block):
                total += count(remaining.difference(s), i + 1)
        return total

    return count(frozenset(range(len(images))), 0)
