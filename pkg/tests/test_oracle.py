import random
from math import factorial

import pytest

from brute import class_census, fixed_shape_partitions
from caput_kit.oracle import (
    OracleBoundError,
    Perm,
    canonical_representative,
    cycle_type_of,
    oracle_bound,
    oracle_class_size,
    oracle_induced_value,
    oracle_splittable,
    oracle_young_class_counts,
    ordered_set_partitions,
    random_conjugate,
)
from caput_kit.partitions import CycleType, enumerate_partitions, parse_cycle_type, parse_partition, partition_to_cycle_type

P = parse_partition
C = parse_cycle_type


def test_cycle_type_of():
    assert cycle_type_of(Perm(tuple(range(5)))) == CycleType((5,))
    assert cycle_type_of(Perm((1, 2, 3, 4, 0))) == C("5")
    assert cycle_type_of(Perm((1, 0, 3, 2, 4))) == CycleType((1, 2))


def test_perm_validation_and_algebra():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    p = Perm((1, 2, 0))
    assert p * p.inverse() == Perm((0, 1, 2))
    assert (p * p)(0) == 2


def test_canonical_representative():
    assert canonical_representative(C("3,2")).images == (1, 2, 0, 4, 3)
    for n in range(8):
        for lam in enumerate_partitions(n):
            rho = partition_to_cycle_type(lam)
            assert cycle_type_of(canonical_representative(rho)) == rho


def test_oracle_class_sizes():
    assert oracle_class_size(5, C("2^2,1")) == 15
    assert oracle_class_size(5, C("1^5")) == 1
    assert oracle_class_size(6, C("3,3")) == 40 == factorial(6) // (3**2 * 2)


def test_oracle_induced_values():
    assert oracle_induced_value(P("3,2"), C("1^5")) == 10
    assert oracle_induced_value(P("3,2"), C("3,2")) == 1
    for rho in enumerate_partitions(6):
        assert oracle_induced_value(P("6"), partition_to_cycle_type(rho)) == 1


def test_bound(monkeypatch):
    assert oracle_bound() == 7
    with pytest.raises(OracleBoundError):
        oracle_class_size(8, C("8"))
    monkeypatch.setenv("CAPUT_ORACLE_MAX", "8")
    assert oracle_bound() == 8
    assert oracle_class_size(8, C("8")) == factorial(7)
    monkeypatch.setenv("CAPUT_ORACLE_MAX", "lots")
    with pytest.raises(OracleBoundError):
        oracle_bound()


@pytest.mark.parametrize("n", range(8))
def test_ordered_set_partition_count(n):
    for lam in enumerate_partitions(n):
        blockings = list(ordered_set_partitions(lam.parts))
        expected = factorial(n)
        for part in lam.parts:
            expected //= factorial(part)
        assert len(blockings) == expected
        assert len(set(blockings)) == expected
        assert all(b.shape == lam.parts for b in blockings)


@pytest.mark.parametrize("n", range(1, 6))
def test_class_invariance(n):
    rng = random.Random(1900 + n)
    for lam in enumerate_partitions(n):
        for rho in map(partition_to_cycle_type, enumerate_partitions(n)):
            expected = oracle_induced_value(lam, rho)
            for _ in range(10):
                g = random_conjugate(rho, rng)
                assert cycle_type_of(g) == rho
                assert oracle_induced_value(lam, rho, rep=g) == expected


def test_rep_must_match_class():
    with pytest.raises(ValueError):
        oracle_induced_value(P("3,2"), C("5"), rep=Perm(tuple(range(5))))


@pytest.mark.parametrize("n", range(7))
def test_against_slow_references(n):
    census = class_census(n)
    for lam in enumerate_partitions(n):
        rho = partition_to_cycle_type(lam)
        assert oracle_class_size(n, rho) == census[lam.parts]
    for lam in enumerate_partitions(n):
        young = oracle_young_class_counts(lam)
        assert sum(young.values()) == _order(lam)
        for rho in map(partition_to_cycle_type, enumerate_partitions(n)):
            rep = canonical_representative(rho)
            expected = fixed_shape_partitions(rep.images, lam.parts)
            assert oracle_induced_value(lam, rho) == expected
            direct = sum(1 for b in ordered_set_partitions(lam.parts) if b.is_invariant_under(rep))
            assert direct == expected


def _order(lam):
    out = 1
    for part in lam.parts:
        out *= factorial(part)
    return out


def test_splittable():
    assert oracle_splittable(P("3,2"), C("2,1^3"))
    assert not oracle_splittable(P("3,2"), C("4,1"))
    assert not oracle_splittable(P("3,2"), C("5"))
    assert oracle_splittable(P("-"), C("-"))
    assert not oracle_splittable(P("2,2"), C("3,1"))
