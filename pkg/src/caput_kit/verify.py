"""Cross-checks of the formula routes against brute force, one n at a time."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from . import fixtures
from .induced import character_matrix, induced_value_multinomial, quotient_parts
from .oracle import oracle_class_sizes, oracle_induced_value, oracle_young_class_counts
from .partitions import (
    CycleType,
    Partition,
    enumerate_partitions,
    format_cycle_type,
    format_partition,
    parse_class_label,
    parse_cycle_type,
    parse_partition,
    partition_to_cycle_type,
)
from .sym_group import class_size

__all__ = ["Mismatch", "Report", "verify_n", "check_published_fixture"]


@dataclass
class Mismatch:
    check: str
    n: int
    lam: Partition | None
    rho: CycleType | None
    values: dict[str, int]

    def __str__(self) -> str:
        where = [f"n={self.n}"]
        if self.lam is not None:
            where.append(f"lambda={format_partition(self.lam)}")
        if self.rho is not None:
            where.append(f"class={format_cycle_type(self.rho)}")
        vals = ", ".join(f"{k}={v}" for k, v in self.values.items())
        return f"{self.check} mismatch at {' '.join(where)}: {vals}"


@dataclass
class Report:
    n: int
    passed: list[str] = field(default_factory=list)
    mismatch: Mismatch | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None


def check_published_fixture() -> Mismatch | None:
    m = character_matrix(5)
    for r, row_text in enumerate(fixtures.S5_ROWS):
        lam = parse_partition(row_text)
        for c, col_text in enumerate(fixtures.S5_CLASSES):
            rho = parse_class_label(col_text)
            got = m[lam, rho]
            if got != fixtures.S5_MATRIX[r][c]:
                return Mismatch("published fixture", 5, lam, rho, {"computed": got, "published": fixtures.S5_MATRIX[r][c]})
    for text, size in fixtures.S5_CLASS_SIZES:
        rho = parse_cycle_type(text)
        if class_size(5, rho) != size:
            return Mismatch("published class size", 5, None, rho, {"computed": class_size(5, rho), "published": size})
    return None


def verify_n(n: int) -> Report:
    """Run every check at a single n; stops at the first mismatch."""
    report = Report(n)
    partitions = enumerate_partitions(n)
    types = [partition_to_cycle_type(p) for p in partitions]

    brute_sizes = oracle_class_sizes(n)
    for rho in types:
        formula, brute = class_size(n, rho), brute_sizes.get(rho, 0)
        if formula != brute:
            report.mismatch = Mismatch("class size", n, None, rho, {"formula": formula, "oracle": brute})
            return report
    total = sum(class_size(n, rho) for rho in types)
    if total != factorial(n):
        report.mismatch = Mismatch("class-size sum", n, None, None, {"sum": total, "n!": factorial(n)})
        return report
    report.passed.append("class sizes")

    for lam in partitions:
        young_counts = oracle_young_class_counts(lam)
        weighted = 0
        for rho in types:
            parts = quotient_parts(lam, rho)
            brute_meet = young_counts.get(rho, 0)
            if parts.intersection_count != brute_meet:
                report.mismatch = Mismatch(
                    "intersection count", n, lam, rho,
                    {"formula": parts.intersection_count, "oracle": brute_meet},
                )
                return report
            q = parts.value
            mult = induced_value_multinomial(lam, rho)
            brute = oracle_induced_value(lam, rho)
            if not q == mult == brute:
                report.mismatch = Mismatch(
                    "induced value", n, lam, rho, {"quotient": q, "multinomial": mult, "oracle": brute}
                )
                return report
            weighted += parts.class_size * q
        if weighted != factorial(n):
            report.mismatch = Mismatch("reciprocity", n, lam, None, {"sum": weighted, "n!": factorial(n)})
            return report
    cells = len(partitions) ** 2
    report.passed.append(f"{cells} cells: quotient = multinomial = oracle")
    report.passed.append("intersection counts")
    report.passed.append("reciprocity")

    if n == 5:
        bad = check_published_fixture()
        if bad is not None:
            report.mismatch = bad
            return report
        report.passed.append("published S5 matrix and class sizes")
    return report
