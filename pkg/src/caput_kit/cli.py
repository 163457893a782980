"""``caput-kit`` command line.

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .caput import CaputQuery, caput_combinations, caput_combinations_all_sizes, caput_variations
from .induced import MATRIX_MAX_N, CharacterMatrix, character_matrix, quotient_parts
from .oracle import OracleBoundError, oracle_bound
from .partitions import (
    CycleType,
    Partition,
    PartitionSyntaxError,
    cycle_type_to_partition,
    enumerate_partitions,
    format_cycle_type,
    format_partition,
    iter_partitions,
    parse_cycle_type,
    parse_partition,
    partition_to_cycle_type,
)
from .sym_group import classes
from .verify import verify_n

PARTITIONS_MAX_N = 60


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv_lines(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _aligned(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [cell.rjust(w) for cell, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def render_matrix(m: CharacterMatrix, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(m.to_json_obj())
    header = [""] + m.col_names
    body = [[name] + [str(v) for v in vals] for name, vals in zip(m.row_names, m.values)]
    if fmt == "csv":
        return _csv_lines([["lambda"] + m.col_names] + body)
    return _aligned([header] + body)


def _bounded_n(value: str, lo: int, hi: int, what: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {value!r}") from None
    if not lo <= n <= hi:
        raise UsageError(f"{what} must be between {lo} and {hi}, got {n}")
    return n


def _parse_lambda(text: str, n: int) -> Partition:
    lam = parse_partition(text)
    if lam.n != n:
        raise UsageError(f"--lambda {text!r} sums to {lam.n}, not {n}")
    return lam


def _parse_class(text: str, n: int) -> CycleType:
    rho = parse_cycle_type(text)
    if rho.n != n:
        raise UsageError(f"--class {text!r} sums to {rho.n}, not {n}")
    return rho


def cmd_partitions(args) -> str:
    n = _bounded_n(args.n, 0, PARTITIONS_MAX_N, "n")
    if args.format == "json":
        return json.dumps([list(p) for p in iter_partitions(n)])
    if args.format == "csv":
        return "\n".join(",".join(map(str, p)) for p in iter_partitions(n))
    return "\n".join(format_partition(Partition(p)) for p in iter_partitions(n))


def cmd_classes(args) -> str:
    n = _bounded_n(args.n, 0, PARTITIONS_MAX_N, "n")
    info = classes(n)
    if args.format == "json":
        return _dump_json(
            [{"class": list(cycle_type_to_partition(c.cycle_type).parts), "size": str(c.size)} for c in info]
        )
    rows = [[format_partition(cycle_type_to_partition(c.cycle_type)), str(c.size)] for c in info]
    if args.format == "csv":
        return _csv_lines([["class", "size"]] + rows)
    return _aligned(rows)


def cmd_table(args) -> str:
    n = _bounded_n(args.n, 1, MATRIX_MAX_N, "n")
    return render_matrix(character_matrix(n), args.format)


def _show_work_lines(lam: Partition, rho: CycleType) -> list[str]:
    w = quotient_parts(lam, rho)
    return [
        f"class {format_cycle_type(rho)}:",
        f"  group order          {w.group_order}",
        f"  Young subgroup order {w.young_order}",
        f"  class size           {w.class_size}",
        f"  intersection count   {w.intersection_count}",
        f"  value = {w.group_order}*{w.intersection_count}/({w.young_order}*{w.class_size}) = {w.value}",
    ]


def cmd_induce(args) -> str:
    n = _bounded_n(args.n, 1, MATRIX_MAX_N, "n")
    lam = _parse_lambda(args.lam, n)
    if args.cls is not None:
        rhos = [_parse_class(args.cls, n)]
    else:
        rhos = [partition_to_cycle_type(p) for p in reversed(enumerate_partitions(n))]
    works = [quotient_parts(lam, rho) for rho in rhos]
    values = [w.value for w in works]
    if args.format == "json":
        obj: dict = {"n": n, "lambda": list(lam.parts)}
        if args.cls is not None:
            obj["class"] = list(cycle_type_to_partition(rhos[0]).parts)
            obj["value"] = str(values[0])
        else:
            obj["classes"] = [list(cycle_type_to_partition(r).parts) for r in rhos]
            obj["values"] = [str(v) for v in values]
        if args.show_work:
            obj["work"] = [
                {
                    "group_order": str(w.group_order),
                    "young_order": str(w.young_order),
                    "class_size": str(w.class_size),
                    "intersection_count": str(w.intersection_count),
                }
                for w in works
            ]
        return _dump_json(obj)
    if args.format == "csv":
        out = _csv_lines([[format_cycle_type(r) for r in rhos], [str(v) for v in values]])
    else:
        out = " ".join(str(v) for v in values)
    if args.show_work:
        lines = []
        for rho in rhos:
            lines.extend(_show_work_lines(lam, rho))
        out = "\n".join(lines + [out])
    return out


def cmd_caput(args) -> str:
    if args.caput_cmd == "variations":
        n = _bounded_n(args.n, 1, MATRIX_MAX_N, "n")
        q = CaputQuery(n, _parse_lambda(args.lam, n), _parse_class(args.cls, n))
        value = caput_variations(q).value
    else:
        nums = []
        for text in args.numbers:
            try:
                nums.append(int(text))
            except ValueError:
                raise UsageError(f"expected an integer, got {text!r}") from None
        if args.all_sizes:
            if len(nums) != 2:
                raise UsageError("combinations --all-sizes takes N C")
            n, c = nums
            if not 0 <= c <= n:
                raise UsageError(f"need 0 <= c <= n, got n={n}, c={c}")
            value = caput_combinations_all_sizes(n, c)
        else:
            if len(nums) != 3:
                raise UsageError("combinations takes N K C")
            n, k, c = nums
            if not 0 <= c <= k <= n:
                raise UsageError(f"need 0 <= c <= k <= n, got n={n}, k={k}, c={c}")
            value = caput_combinations(n, k, c)
    if args.format == "json":
        return json.dumps({"value": str(value)})
    return str(value)


def cmd_verify(args) -> tuple[str, int]:
    bound = oracle_bound()
    n_max = _bounded_n(args.n_max, 1, bound, "n_max")
    lines = []
    for n in range(1, n_max + 1):
        report = verify_n(n)
        if not report.ok:
            lines.append(f"n={n}: FAIL")
            lines.append(str(report.mismatch))
            return "\n".join(lines), 1
        lines.append(f"n={n}: pass ({'; '.join(report.passed)})")
    lines.append(f"all checks passed for n <= {n_max}")
    return "\n".join(lines), 0


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "csv", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="caput-kit",
        description="Exact induced characters of Young subgroups of S_n and the caput query.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[fmt], help="list the partitions of n")
    p.add_argument("n")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("classes", parents=[fmt], help="conjugacy class sizes of S_n")
    p.add_argument("n")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("table", parents=[fmt], help="full induced-character matrix")
    p.add_argument("n")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("induce", parents=[fmt], help="one row or cell of the matrix")
    p.add_argument("n")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--class", dest="cls", metavar="CLASS")
    p.add_argument("--show-work", action="store_true", help="print the four counts of the quotient")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("caput", help="the caput question, both readings")
    csub = p.add_subparsers(dest="caput_cmd", required=True)
    v = csub.add_parser("variations", parents=[fmt], help="induced-character reading")
    v.add_argument("n")
    v.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    v.add_argument("--class", dest="cls", required=True, metavar="CLASS")
    c = csub.add_parser("combinations", parents=[fmt], help="subsets containing a fixed caput")
    c.add_argument("numbers", nargs="+", metavar="N K C", help="N K C, or N C with --all-sizes")
    c.add_argument("--all-sizes", action="store_true")
    p.set_defaults(func=cmd_caput)

    p = sub.add_parser("verify", help="cross-check formulas against brute force")
    p.add_argument("n_max")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, PartitionSyntaxError, OracleBoundError) as exc:
        print(f"caput-kit: error: {exc}", file=sys.stderr)
        return 2
    status = 0
    if isinstance(result, tuple):
        result, status = result
    print(result)
    return status


if __name__ == "__main__":
    sys.exit(main())
