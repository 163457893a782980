"""Characters of S_n induced from the trivial character of Young subgroups.

Two independent routes give the value on class ``rho``:

* the quotient ``n! * |C_rho ∩ S_lambda| / (|S_lambda| * |C_rho|)``;
* the multinomial sum ``sum_D prod_j m_j! / prod_i m_ij!`` over the
  distributions ``D`` of ``rho`` across the factors.

They agree for every input; :func:`character_matrix` checks that at small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from ._exact import IntegrityError, exact_div
from .partitions import (
    CycleType,
    Partition,
    cycle_type_to_partition,
    enumerate_partitions,
    format_cycle_type,
    format_partition,
    partition_to_cycle_type,
)
from .sym_group import class_size, group_order
from .young import enumerate_distributions, intersection_count, young_order

__all__ = [
    "CharacterMatrix",
    "QuotientParts",
    "induced_value_quotient",
    "induced_value_multinomial",
    "quotient_parts",
    "character_matrix",
    "DEFAULT_VERIFY_MAX",
    "MATRIX_MAX_N",
]

DEFAULT_VERIFY_MAX = 7
# p(18) = 385 rows; a full table takes a few seconds at this size
MATRIX_MAX_N = 18


@dataclass(frozen=True)
class QuotientParts:
    """The four counts entering the quotient formula, and its value."""

    group_order: int
    young_order: int
    class_size: int
    intersection_count: int

    @property
    def value(self) -> int:
        return exact_div(
            self.group_order * self.intersection_count, self.young_order * self.class_size
        )


def quotient_parts(lam: Partition, rho: CycleType) -> QuotientParts:
    n = lam.n
    if rho.n != n:
        raise ValueError(f"partition {lam} has weight {n} but cycle type {rho} has weight {rho.n}")
    return QuotientParts(
        group_order=group_order(n),
        young_order=young_order(lam),
        class_size=class_size(n, rho),
        intersection_count=intersection_count(lam, rho),
    )


def induced_value_quotient(lam: Partition, rho: CycleType) -> int:
    return quotient_parts(lam, rho).value


def induced_value_multinomial(lam: Partition, rho: CycleType) -> int:
    total = 0
    for d in enumerate_distributions(lam, rho):
        term = 1
        for j, m in enumerate(rho.multiplicities, start=1):
            term *= exact_div(factorial(m), prod(factorial(x) for x in d.column(j)))
        total += term
    return total


@dataclass(frozen=True)
class CharacterMatrix:
    """``values[r][c]`` is the induced character of ``row_labels[r]`` on class ``col_labels[c]``."""

    n: int
    row_labels: tuple[Partition, ...]
    col_labels: tuple[CycleType, ...]
    values: tuple[tuple[int, ...], ...]

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.row_labels.index(lam)]

    def column(self, rho: CycleType) -> tuple[int, ...]:
        c = self.col_labels.index(rho)
        return tuple(r[c] for r in self.values)

    def __getitem__(self, key: tuple[Partition, CycleType]) -> int:
        lam, rho = key
        return self.values[self.row_labels.index(lam)][self.col_labels.index(rho)]

    @property
    def row_names(self) -> list[str]:
        return [format_partition(p) for p in self.row_labels]

    @property
    def col_names(self) -> list[str]:
        return [format_cycle_type(c) for c in self.col_labels]

    def to_json_obj(self) -> dict:
        """JSON-ready form; values are decimal strings so no precision is lost."""
        return {
            "n": self.n,
            "classes": [list(cycle_type_to_partition(c).parts) for c in self.col_labels],
            "rows": [
                {"lambda": list(p.parts), "values": [str(v) for v in vals]}
                for p, vals in zip(self.row_labels, self.values)
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CharacterMatrix":
        return cls(
            n=int(obj["n"]),
            row_labels=tuple(Partition(tuple(r["lambda"])) for r in obj["rows"]),
            col_labels=tuple(partition_to_cycle_type(Partition(tuple(c))) for c in obj["classes"]),
            values=tuple(tuple(int(v) for v in r["values"]) for r in obj["rows"]),
        )


def character_matrix(n: int, verify: bool | None = None) -> CharacterMatrix:
    """The ``p(n) x p(n)`` table of induced characters.

    Rows are partitions in descending lexicographic order; columns are the
    same partitions reversed, read as cycle types (so the identity class
    comes first).  With ``verify`` (default: on for ``n <= 7``) every cell is
    also computed by the multinomial route and the two must match.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if verify is None:
        verify = n <= DEFAULT_VERIFY_MAX
    rows = tuple(enumerate_partitions(n))
    cols = tuple(partition_to_cycle_type(p) for p in reversed(rows))
    values = []
    for lam in rows:
        line = []
        for rho in cols:
            v = induced_value_quotient(lam, rho)
            if verify:
                w = induced_value_multinomial(lam, rho)
                if v != w:
                    raise IntegrityError(
                        f"quotient {v} != multinomial {w} at lambda={lam}, rho={rho}"
                    )
            line.append(v)
        values.append(tuple(line))
    return CharacterMatrix(n, rows, cols, tuple(values))
