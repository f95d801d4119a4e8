import pytest
from hypothesis import given, settings, strategies as st

from hookblock.partitions import (Partition, PartitionError, conjugate, dominates_reversed,
                                  enumerate_partitions, hook_index, hook_partition,
                                  partitions_containing, to_text)
from hookblock.verify import partition_count


def test_conjugate_examples():
    assert conjugate(Partition((3, 1))) == Partition((2, 1, 1))
    assert conjugate(Partition((6,))) == Partition((1,) * 6)


def test_parse_and_text():
    assert Partition("4,3,3,1").parts == (4, 3, 3, 1)
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert to_text(Partition(())) == "0"
    with pytest.raises(PartitionError):
        Partition((1, 2))


def test_reversed_dominance_examples():
    assert dominates_reversed(Partition((1, 1, 1, 1, 1)), Partition((5,)))
    lam = Partition((3, 2))
    assert dominates_reversed(lam, lam)
    assert not dominates_reversed(Partition((3, 1)), Partition((2, 2)))
    assert dominates_reversed(Partition((2, 2)), Partition((3, 1)))
    with pytest.raises(PartitionError):
        dominates_reversed(Partition((2,)), Partition((3,)))


def test_hooks():
    assert hook_partition(5, 2) == Partition((3, 1, 1))
    assert hook_partition(3, 2) == Partition((3,))
    assert hook_index(Partition((3, 1, 1)), 5) == 2
    with pytest.raises(PartitionError):
        hook_index(Partition((2, 2)), 4)
    with pytest.raises(PartitionError):
        hook_index(Partition((2, 2, 1)), 5)
    with pytest.raises(PartitionError):
        hook_partition(3, 3)


def test_enumeration_counts():
    assert enumerate_partitions(0) == [Partition(())]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(10)) == 42
    assert all(len(enumerate_partitions(e)) == partition_count(e) for e in range(16))


def test_enumeration_is_reverse_lex():
    parts = enumerate_partitions(6)
    assert parts == sorted(parts, reverse=True)
    assert parts[0] == Partition((6,)) and parts[-1] == Partition((1,) * 6)


def test_adding_boxes():
    out = partitions_containing(Partition((1,)), 2)
    assert set(out) == {Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))}


partitions = st.integers(0, 12).flatmap(lambda e: st.sampled_from(enumerate_partitions(e)))


@settings(max_examples=80, deadline=None)
@given(partitions)
def test_conjugation_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).weight == lam.weight


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 9).flatmap(lambda e: st.tuples(st.sampled_from(enumerate_partitions(e)),
                                                      st.sampled_from(enumerate_partitions(e)))))
def test_conjugation_reverses_dominance(pair):
    lam, mu = pair
    assert dominates_reversed(lam, mu) == dominates_reversed(conjugate(mu), conjugate(lam))
