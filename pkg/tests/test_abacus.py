import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hookblock import abacus as ab
from hookblock.partitions import Partition, enumerate_partitions, hook_partition


def test_beta_sequences():
    assert ab.beta_sequence((2, 2), 4) == (1, 0, -3, -4)
    assert ab.beta_sequence((), 3) == (-1, -2, -3)
    assert ab.partition_of((1, 0, -3, -4)) == Partition((2, 2))


def test_cores_and_weights():
    assert ab.p_core_and_weight(Partition((2, 1)), 2) == (Partition((2, 1)), 0)
    assert ab.p_core_and_weight(Partition((3,)), 2) == (Partition((1,)), 1)
    assert ab.is_p_core(Partition((2, 1)), 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_every_hook_has_empty_core(p):
    for i in range(p):
        assert ab.p_core_and_weight(hook_partition(p, i), p) == (Partition(()), 1)


def test_rim_hook_removal():
    (d,) = ab.removable_rim_hooks(Partition((3,)), 2)
    assert ab.remove_rim_hook(Partition((3,)), d) == Partition((1,))
    assert ab.removable_rim_hooks(Partition((2, 1)), 2) == []


def test_the_rim_seven_hook():
    lam = Partition((4, 3, 3, 1))
    hooks = ab.removable_rim_hooks(lam, 7)
    assert [ab.remove_rim_hook(lam, d) for d in hooks] == [Partition((2, 2))]
    assert ab.is_rim_hook(lam, Partition((2, 2)))
    assert ab.rim_hook_rows(lam, Partition((2, 2))) == 4


def test_mu_index_examples():
    assert ab.mu_index(Partition(()), 5, 2) == Partition((3, 1, 1))
    assert ab.mu_index(Partition((1,)), 2, 0) == Partition((1, 1, 1))
    assert ab.mu_index(Partition((1,)), 2, 1) == Partition((3,))


def test_weight_one_diagrams():
    assert set(ab.weight1_diagrams(Partition(()), 3)) == {Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))}
    assert set(ab.weight1_diagrams(Partition((1,)), 2)) == {Partition((3,)), Partition((1, 1, 1))}


def test_brute_force_core_by_domino_removal():
    # all partitions of 3 with 2-core (1): found by exhaustive rim search
    found = [lam for lam in enumerate_partitions(3)
             if any(ab.is_rim_hook(lam, Partition((1,))) for _ in [0])]
    assert set(found) == {Partition((3,)), Partition((1, 1, 1))}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_mu_index_on_random_cores(p):
    rng = np.random.default_rng(p)
    for _ in range(25):
        core = ab.random_core(rng, p, 30)
        assert ab.is_p_core(core, p)
        mus = [ab.mu_index(core, p, i) for i in range(p)]
        assert sorted(mus) == sorted(ab.weight1_diagrams(core, p))
        assert sorted(mus) == sorted(ab.weight1_by_geometry(core, p))
        assert all(ab.mu_by_enumeration(core, p, i) == mus[i] for i in range(p))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 14).flatmap(lambda e: st.sampled_from(enumerate_partitions(e))),
       st.sampled_from([2, 3, 5]))
def test_core_weight_balance(lam, p):
    core, w = ab.p_core_and_weight(lam, p)
    assert core.weight + p * w == lam.weight
    assert ab.is_p_core(core, p)
    assert ab.partition_of(ab.beta_sequence(lam, len(lam) + 3)) == lam
