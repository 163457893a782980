"""Leibniz's caput question, in two readings.

Elementary: how many k-subsets of an n-set contain a prescribed c-subset
(the caput)?  Group-theoretic: how many elements of S_n of class ``rho``
are counted by the character induced from S_lambda, i.e. the induced
character value itself.  Both are exposed side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .induced import induced_value_quotient
from .partitions import CycleType, Partition

__all__ = [
    "CaputQuery",
    "CaputAnswer",
    "caput_variations",
    "caput_combinations",
    "caput_combinations_all_sizes",
]


@dataclass(frozen=True)
class CaputQuery:
    n: int
    lam: Partition
    rho: CycleType

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.lam.n != self.n:
            raise ValueError(f"partition {self.lam} is not a partition of {self.n}")
        if self.rho.n != self.n:
            raise ValueError(f"class {self.rho} is not a cycle type of {self.n}")


@dataclass(frozen=True)
class CaputAnswer:
    value: int
    query: CaputQuery


def caput_variations(q: CaputQuery) -> CaputAnswer:
    """Induced character of S_lambda evaluated on class rho."""
    return CaputAnswer(induced_value_quotient(q.lam, q.rho), q)


def caput_combinations(n: int, k: int, c: int) -> int:
    """k-subsets of an n-set that contain a fixed c-subset: ``C(n-c, k-c)``."""
    if not 0 <= c <= k <= n:
        raise ValueError(f"need 0 <= c <= k <= n, got n={n}, k={k}, c={c}")
    return comb(n - c, k - c)


def caput_combinations_all_sizes(n: int, c: int) -> int:
    """Subsets of any size containing a fixed c-subset (equals ``2**(n-c)``)."""
    if not 0 <= c <= n:
        raise ValueError(f"need 0 <= c <= n, got n={n}, c={c}")
    return sum(caput_combinations(n, k, c) for k in range(c, n + 1))
