"""Young subgroups S_{l1} x ... x S_{lp} of S_n.

A class of S_n meets the Young subgroup in the elements whose cycles can be
dealt out to the factors so that factor ``i`` receives cycles of total length
``l_i``.  Each such dealing is a :class:`Distribution`: a ``p x L`` matrix
whose row ``i`` is the cycle type of the component in factor ``i`` and whose
column sums recover the ambient cycle type.  Factors are ordered, so equal
parts of ``lambda`` are never merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator

from .partitions import CycleType, Partition
from .sym_group import class_size

__all__ = [
    "YoungSubgroup",
    "Distribution",
    "young_order",
    "enumerate_distributions",
    "intersection_count",
]


@dataclass(frozen=True)
class YoungSubgroup:
    lam: Partition

    @property
    def order(self) -> int:
        return young_order(self.lam)

    @property
    def index(self) -> int:
        """``[S_n : S_lambda]``, the number of ordered set partitions of shape lambda."""
        return factorial(self.lam.n) // self.order


@dataclass(frozen=True)
class Distribution:
    """Row ``i`` holds the multiplicities ``(m_i1, m_i2, ...)`` given to factor ``i``.

    Rows are stored trimmed (no trailing zeros).
    """

    rows: tuple[tuple[int, ...], ...]

    def row_type(self, i: int) -> CycleType:
        return CycleType(self.rows[i])

    def column(self, j: int) -> tuple[int, ...]:
        """Multiplicities of ``j``-cycles across the factors (``j`` is 1-based)."""
        return tuple(row[j - 1] if j <= len(row) else 0 for row in self.rows)

    @property
    def width(self) -> int:
        return max((len(r) for r in self.rows), default=0)


def young_order(lam: Partition) -> int:
    return prod(factorial(part) for part in lam.parts)


def _check_weights(lam: Partition, rho: CycleType) -> None:
    if lam.n != rho.n:
        raise ValueError(f"partition {lam} has weight {lam.n} but cycle type {rho} has weight {rho.n}")


def _bounded_rows(weight: int, budget: list[int], j: int) -> Iterator[list[int]]:
    # cycle types of `weight` using lengths <= j with m_j <= budget[j-1]; built longest-first
    if weight == 0:
        yield [0] * j
        return
    if j == 0:
        return
    top = min(budget[j - 1], weight // j)
    for m in range(top, -1, -1):
        for head in _bounded_rows(weight - m * j, budget, j - 1):
            head.append(m)
            yield head


def _trim(row: list[int]) -> tuple[int, ...]:
    end = len(row)
    while end and row[end - 1] == 0:
        end -= 1
    return tuple(row[:end])


def _distribute(parts: tuple[int, ...], budget: list[int], i: int, acc: list[tuple[int, ...]]):
    if i == len(parts) - 1:
        # the last factor must take exactly what is left
        acc.append(_trim(budget))
        yield tuple(acc)
        acc.pop()
        return
    for row in _bounded_rows(parts[i], budget, len(budget)):
        for j, m in enumerate(row):
            budget[j] -= m
        acc.append(_trim(row))
        yield from _distribute(parts, budget, i + 1, acc)
        acc.pop()
        for j, m in enumerate(row):
            budget[j] += m


def enumerate_distributions(lam: Partition, rho: CycleType) -> list[Distribution]:
    """Every way to split the cycles of ``rho`` across the factors of S_lambda.

    >>> from caput_kit.partitions import parse_partition, parse_cycle_type
    >>> [d.rows for d in enumerate_distributions(parse_partition("3,2"), parse_cycle_type("2,1^3"))]
    [((1, 1), (2,)), ((3,), (0, 1))]
    """
    _check_weights(lam, rho)
    if not lam.parts:
        return [Distribution(())]
    budget = list(rho.multiplicities)
    return [Distribution(rows) for rows in _distribute(lam.parts, budget, 0, [])]


def intersection_count(lam: Partition, rho: CycleType) -> int:
    """``|C_rho ∩ S_lambda|``: elements of class ``rho`` lying in the Young subgroup.

    Each distribution contributes the product of the class sizes of its rows
    inside the respective factors.
    """
    total = 0
    for d in enumerate_distributions(lam, rho):
        total += prod(class_size(part, CycleType(row)) for part, row in zip(lam.parts, d.rows))
    return total
