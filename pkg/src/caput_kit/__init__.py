"""Exact induced characters of Young subgroups of S_n, and the caput query."""

from .caput import (
    CaputAnswer,
    CaputQuery,
    caput_combinations,
    caput_combinations_all_sizes,
    caput_variations,
)
from .induced import (
    CharacterMatrix,
    character_matrix,
    induced_value_multinomial,
    induced_value_quotient,
    quotient_parts,
)
from .partitions import (
    CycleType,
    Partition,
    cycle_type_to_partition,
    enumerate_partitions,
    format_cycle_type,
    format_partition,
    parse_cycle_type,
    parse_partition,
    partition_to_cycle_type,
)
from .sym_group import class_size, group_order
from .young import Distribution, enumerate_distributions, intersection_count, young_order

__version__ = "0.1.0"

__all__ = [
    "CaputAnswer",
    "CaputQuery",
    "CharacterMatrix",
    "CycleType",
    "Distribution",
    "Partition",
    "caput_combinations",
    "caput_combinations_all_sizes",
    "caput_variations",
    "character_matrix",
    "class_size",
    "cycle_type_to_partition",
    "enumerate_distributions",
    "enumerate_partitions",
    "format_cycle_type",
    "format_partition",
    "group_order",
    "induced_value_multinomial",
    "induced_value_quotient",
    "intersection_count",
    "parse_cycle_type",
    "parse_partition",
    "partition_to_cycle_type",
    "quotient_parts",
    "young_order",
]
