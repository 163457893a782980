import pytest

from brute import class_census, consecutive_blocks
from caput_kit.oracle import oracle_splittable
from caput_kit.partitions import Partition, enumerate_partitions, parse_cycle_type, parse_partition, partition_to_cycle_type
from caput_kit.young import Distribution, YoungSubgroup, enumerate_distributions, intersection_count, young_order

P = parse_partition
C = parse_cycle_type


def test_young_order():
    assert young_order(P("3,2")) == 12
    assert young_order(P("6")) == 720
    assert young_order(P("1^5")) == 1
    assert YoungSubgroup(P("3,2")).index == 10


def test_distributions_of_2_1_1_1_over_3_2():
    ds = enumerate_distributions(P("3,2"), C("2,1^3"))
    assert sorted(d.rows for d in ds) == sorted([((3,), (0, 1)), ((1, 1), (2,))])


def test_no_distribution_for_5_cycle():
    assert enumerate_distributions(P("3,2"), C("5")) == []


@pytest.mark.parametrize("rho", enumerate_partitions(6))
def test_single_factor_has_one_distribution(rho):
    c = partition_to_cycle_type(rho)
    assert enumerate_distributions(P("6"), c) == [Distribution((c.multiplicities,))]


def test_rejects_mismatched_weights():
    with pytest.raises(ValueError):
        enumerate_distributions(P("3,2"), C("3,3"))
    with pytest.raises(ValueError):
        intersection_count(P("3,2"), C("3,3"))


def test_intersection_counts():
    assert intersection_count(P("3,2"), C("2,1^3")) == 4
    assert intersection_count(P("3,2"), C("1^5")) == 1
    # S2 x S2 x S1 = {id, (01), (23), (01)(23)}: one element of type 2^2,1
    assert class_census(5, consecutive_blocks((2, 2, 1)))[(2, 2, 1)] == 1
    assert intersection_count(P("2^2,1"), C("2^2,1")) == 1


def _brute_distributions(lam, rho):
    # all p x L matrices with entries bounded by rho's multiplicities, filtered by both constraints
    from itertools import product

    m = rho.multiplicities
    L = len(m)
    cells = [range(m[j] + 1) for _ in lam.parts for j in range(L)]
    found = set()
    for flat in product(*cells):
        rows = [flat[i * L:(i + 1) * L] for i in range(len(lam.parts))]
        if any(sum((j + 1) * r[j] for j in range(L)) != part for r, part in zip(rows, lam.parts)):
            continue
        if any(sum(r[j] for r in rows) != m[j] for j in range(L)):
            continue
        found.add(tuple(tuple(x for x in _trim(r)) for r in rows))
    return found


def _trim(r):
    r = list(r)
    while r and r[-1] == 0:
        r.pop()
    return r


@pytest.mark.parametrize("n", range(1, 7))
def test_distributions_match_exhaustive_search(n):
    for lam in enumerate_partitions(n):
        for rho in map(partition_to_cycle_type, enumerate_partitions(n)):
            got = [d.rows for d in enumerate_distributions(lam, rho)]
            assert len(got) == len(set(got))
            assert set(got) == _brute_distributions(lam, rho)


@pytest.mark.parametrize("n", range(11))
def test_invariants(n):
    types = [partition_to_cycle_type(p) for p in enumerate_partitions(n)]
    for lam in enumerate_partitions(n):
        assert sum(intersection_count(lam, rho) for rho in types) == young_order(lam)
        for rho in types:
            ds = enumerate_distributions(lam, rho)
            for d in ds:
                for i, part in enumerate(lam.parts):
                    assert d.row_type(i).n == part
                for j in range(1, len(rho) + 1):
                    assert sum(d.column(j)) == rho[j]
            if n <= 8:
                assert bool(ds) == (intersection_count(lam, rho) > 0) == oracle_splittable(lam, rho)


@pytest.mark.parametrize("n", range(8))
def test_against_subgroup_census(n):
    for lam in enumerate_partitions(n):
        census = class_census(n, consecutive_blocks(lam.parts))
        for rho in enumerate_partitions(n):
            assert intersection_count(lam, partition_to_cycle_type(rho)) == census.get(rho.parts, 0)


def test_equal_parts_are_ordered_factors():
    # 2,2 split of two 2-cycles: first factor may take either one, but they are the same multiset row
    ds = enumerate_distributions(Partition((2, 2)), C("2,1^2"))
    assert sorted(d.rows for d in ds) == [((0, 1), (2,)), ((2,), (0, 1))]
