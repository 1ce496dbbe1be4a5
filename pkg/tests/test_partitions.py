import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import two_kind_series_coefficients
from extquot.partitions import (
    Partition,
    enumerate_partitions,
    invariants,
    iter_gcd_distinct,
    partition_count,
    partitions_pairs,
)

# The eleven partitions of 6, in the expected enumeration order.
PARTITIONS_OF_6 = [
    (6,),
    (1, 5),
    (2, 4),
    (1, 1, 4),
    (3, 3),
    (1, 2, 3),
    (1, 1, 1, 3),
    (2, 2, 2),
    (1, 1, 2, 2),
    (1, 1, 1, 1, 2),
    (1, 1, 1, 1, 1, 1),
]


def test_enumeration_order_for_n6():
    assert [mu.parts for mu in enumerate_partitions(6)] == PARTITIONS_OF_6


def test_enumeration_is_decreasing_lexicographic():
    for n in (5, 9, 12):
        descending = [tuple(sorted(mu.parts, reverse=True)) for mu in enumerate_partitions(n)]
        assert descending == sorted(descending, reverse=True)
        assert len(set(descending)) == len(descending)


def test_enumeration_edge_cases():
    assert [mu.parts for mu in enumerate_partitions(1)] == [(1,)]
    assert list(enumerate_partitions(0)) == [Partition(0, ())]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_enumeration_count_n45():
    assert sum(1 for _ in enumerate_partitions(45)) == 89134 == partition_count(45)


def test_stream_count_matches_partition_function():
    for n in range(1, 41):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)
    for n in (50, 60):
        assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)


def test_invariants_examples():
    inv = invariants(Partition.from_parts([2, 2, 2, 2, 4, 4]))
    assert (inv.g, inv.m, inv.b, inv.c) == (2, 2, 2, 6)
    assert inv.p == (2, 1, 1)

    inv = invariants(Partition.from_parts([6]))
    assert (inv.g, inv.m, inv.b, inv.c, inv.p) == (6, 1, 1, 1, ())

    inv = invariants(Partition.from_parts([1] * 6))
    assert (inv.g, inv.m, inv.b, inv.c) == (1, 6, 1, 6)
    assert inv.p == (1, 1, 1, 1, 1)


def test_invariants_rejects_empty():
    with pytest.raises(ValueError):
        invariants(Partition(0, ()))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(5, ((2, 1),))
    with pytest.raises(ValueError):
        Partition(4, ((2, 1), (1, 2)))  # parts not increasing
    with pytest.raises(ValueError):
        Partition.from_parts([0, 3])


def test_partition_text_forms():
    mu = Partition.from_parts([1, 1, 2, 2])
    assert str(mu) == "1+1+2+2"
    assert mu.run_length_str() == "1^2,2^2"
    assert str(Partition(0, ())) == "0"


def test_invariant_relations_small_n():
    for n in range(1, 21):
        for mu in enumerate_partitions(n):
            inv = invariants(mu)
            assert sum(inv.p) == inv.c - inv.b
            assert n % inv.g == 0
            assert all(m % inv.m == 0 for _, m in mu.runs)
            assert inv.b <= inv.c <= n


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=12))
def test_invariant_relations_random_partitions(parts):
    mu = Partition.from_parts(parts)
    inv = invariants(mu)
    assert sum(inv.p) == inv.c - inv.b
    assert inv.c == len(parts)
    assert sum(parts) % inv.g == 0
    assert mu.parts == tuple(sorted(parts))


def test_iter_gcd_distinct_agrees_with_invariants():
    for n in (7, 12, 18):
        light = list(iter_gcd_distinct(n))
        full = [(invariants(mu).g, invariants(mu).b) for mu in enumerate_partitions(n)]
        assert light == full


def test_partition_count_values():
    assert partition_count(0) == 1
    assert [partition_count(n) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partition_count(60) == 966467


def test_partitions_pairs_values():
    assert partitions_pairs(0) == 1
    assert partitions_pairs(2) == 5


def test_partitions_pairs_matches_generating_function():
    coefficients = two_kind_series_coefficients(20)
    for r in range(21):
        assert partitions_pairs(r) == coefficients[r]
