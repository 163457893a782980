"""Conjugacy classes of S_n: group order and class sizes, exact."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ._exact import exact_div
from .partitions import CycleType, enumerate_partitions, partition_to_cycle_type

__all__ = ["ClassInfo", "group_order", "centralizer_order", "class_size", "classes"]


@dataclass(frozen=True)
class ClassInfo:
    cycle_type: CycleType
    size: int


def group_order(n: int) -> int:
    """Order of S_n, i.e. ``n!``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return factorial(n)


def centralizer_order(rho: CycleType) -> int:
    """``prod_j j**m_j * m_j!`` -- the order of the centralizer of any element of class ``rho``."""
    z = 1
    for j, m in enumerate(rho.multiplicities, start=1):
        z *= j**m * factorial(m)
    return z


def class_size(n: int, rho: CycleType) -> int:
    """Number of permutations of S_n with cycle type ``rho``.

    >>> from caput_kit.partitions import parse_cycle_type
    >>> class_size(5, parse_cycle_type("2^2,1"))
    15
    """
    if rho.n != n:
        raise ValueError(f"cycle type {rho} has weight {rho.n}, expected {n}")
    return exact_div(factorial(n), centralizer_order(rho))


def classes(n: int) -> list[ClassInfo]:
    """Class data for every cycle type of ``n``, in descending-partition order."""
    out = []
    for p in enumerate_partitions(n):
        c = partition_to_cycle_type(p)
        out.append(ClassInfo(c, class_size(n, c)))
    return out
