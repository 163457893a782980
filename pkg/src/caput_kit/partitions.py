"""Integer partitions and cycle types.

A partition is stored as a weakly decreasing tuple of positive parts; a cycle
type as the multiplicity vector ``(m1, m2, ..., mL)`` with the trailing entry
nonzero.  The two are interchangeable views of the same data and both index
the conjugacy classes of S_n.

Text syntax is a comma-separated list of parts with optional ``k^e``
shorthand, e.g. ``3,2``, ``2^2,1`` or ``1^5``.  The empty partition is
written ``-``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "CycleType",
    "PartitionSyntaxError",
    "enumerate_partitions",
    "iter_partitions",
    "partition_to_cycle_type",
    "cycle_type_to_partition",
    "parse_partition",
    "parse_cycle_type",
    "parse_class_label",
    "format_partition",
    "format_cycle_type",
]

EMPTY_LABEL = "-"


@dataclass(frozen=True)
class Partition:
    """A partition of ``n`` as weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for a in parts:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class CycleType:
    """Cycle multiplicities ``(m1, m2, ...)``: ``m_j`` cycles of length ``j``."""

    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        m = tuple(self.multiplicities)
        for x in m:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"multiplicities must be non-negative integers, got {m!r}")
        # canonical form has no trailing zeros
        while m and m[-1] == 0:
            m = m[:-1]
        object.__setattr__(self, "multiplicities", m)

    @property
    def n(self) -> int:
        return sum(j * m for j, m in enumerate(self.multiplicities, start=1))

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __getitem__(self, j: int) -> int:
        """Multiplicity of cycles of length ``j`` (1-based; 0 past the end)."""
        if j < 1:
            raise IndexError("cycle lengths start at 1")
        if j > len(self.multiplicities):
            return 0
        return self.multiplicities[j - 1]

    def __str__(self) -> str:
        return format_cycle_type(self)


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield part tuples of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first part first.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    return [Partition(parts) for parts in iter_partitions(n)]


def partition_to_cycle_type(p: Partition) -> CycleType:
    if not p.parts:
        return CycleType(())
    m = [0] * p.parts[0]
    for part in p.parts:
        m[part - 1] += 1
    return CycleType(tuple(m))


def cycle_type_to_partition(c: CycleType) -> Partition:
    parts: list[int] = []
    for j in range(len(c.multiplicities), 0, -1):
        parts.extend([j] * c.multiplicities[j - 1])
    return Partition(tuple(parts))


class PartitionSyntaxError(ValueError):
    """Raised for malformed partition text; ``token`` is the offending piece."""

    def __init__(self, message: str, token: str | None = None) -> None:
        super().__init__(message)
        self.token = token


_TOKEN = re.compile(r"([1-9][0-9]*)(?:\^([1-9][0-9]*))?")


def parse_partition(text: str) -> Partition:
    """Parse ``3,2`` / ``2^2,1`` / ``1^5`` / ``-`` into a Partition.

    Parts must come out weakly decreasing after exponent expansion.
    """
    if text == EMPTY_LABEL:
        return Partition(())
    if text == "":
        raise PartitionSyntaxError("empty partition text (use '-' for the empty partition)", text)
    if any(ch.isspace() for ch in text):
        raise PartitionSyntaxError(f"whitespace is not allowed in partition text {text!r}", text)
    parts: list[int] = []
    for token in text.split(","):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise PartitionSyntaxError(f"bad partition token {token!r} in {text!r}", token)
        base = int(match.group(1))
        exp = int(match.group(2)) if match.group(2) else 1
        if parts and base > parts[-1]:
            raise PartitionSyntaxError(
                f"parts must be weakly decreasing: {token!r} follows {parts[-1]} in {text!r}", token
            )
        parts.extend([base] * exp)
    return Partition(tuple(parts))


def parse_cycle_type(text: str) -> CycleType:
    """Parse a class label written as a partition (``2,1^3``) into its cycle type."""
    return partition_to_cycle_type(parse_partition(text))


def parse_class_label(text: str) -> CycleType:
    """Parse a class header in either order (``1^3,2`` or ``2,1^3``)."""
    if text == EMPTY_LABEL:
        return CycleType(())
    lengths: list[int] = []
    for token in text.split(","):
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise PartitionSyntaxError(f"bad class token {token!r} in {text!r}", token)
        lengths.extend([int(match.group(1))] * int(match.group(2) or 1))
    return partition_to_cycle_type(Partition(tuple(sorted(lengths, reverse=True))))


def _exponent_groups(parts: Iterable[int]) -> str:
    pieces = []
    for part, run in groupby(parts):
        e = len(list(run))
        pieces.append(f"{part}^{e}" if e > 1 else str(part))
    return ",".join(pieces) if pieces else EMPTY_LABEL


def format_partition(p: Partition) -> str:
    """Row-label style: descending parts, e.g. ``2^2,1``."""
    return _exponent_groups(p.parts)


def format_cycle_type(c: CycleType) -> str:
    """Class-label style: ascending cycle lengths, e.g. ``1^3,2``."""
    return _exponent_groups(reversed(cycle_type_to_partition(c).parts))
