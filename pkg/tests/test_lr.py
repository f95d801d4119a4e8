from hypothesis import given, settings, strategies as st
import pytest

from hookblock import lr
from hookblock.abacus import mu_index, random_core, p_core_and_weight, weight1_diagrams
from hookblock.functors import schur_dimension
from hookblock.partitions import Partition, conjugate, enumerate_partitions, hook_partition, partitions_containing


def test_yamanouchi_words():
    assert lr.is_yamanouchi((1, 1, 2, 1, 3))
    assert not lr.is_yamanouchi((2, 1))
    assert lr.is_yamanouchi((1, 1, 2, 3, 1, 1, 4))
    # swapping the second and third letters keeps the lattice property
    assert lr.is_yamanouchi((1, 2, 1, 3, 1, 1, 4))


def test_unit_and_theta_example():
    nu = Partition((3, 1))
    assert lr.lr_coefficient((), nu, nu) == 1
    assert lr.lr_coefficient((1,), (2, 2), (3, 2)) == 1
    assert lr.lr_coefficient((1,), (2, 2), (2, 2, 1)) == 1
    assert lr.theta_multiplicities(Partition((1,)), Partition((2, 2)), 2) == {
        Partition((3, 2)): 1, Partition((2, 2, 1)): 1}
    assert lr.theta_multiplicities(Partition(()), nu) == {nu: 1}


def test_the_displayed_filling():
    # content (4,1,1,1) is the hook (p-i, 1^i) with p=7, i=3
    tabs = lr.lr_tableaux((4, 3, 3, 1), (2, 2), (4, 1, 1, 1))
    assert len(tabs) == 1
    t = tabs[0]
    assert t.is_valid()
    assert t.column_word() == (1, 1, 2, 3, 1, 1, 4)
    assert t.rows() == [[None, None, 1, 4], [None, None, 1], [1, 2, 3], [1]]
    assert lr.hook_translation_coefficient(3, (2, 2), (4, 3, 3, 1), 7) == 1
    assert lr.lr_coefficient((2, 2), (4, 1, 1, 1), (4, 3, 3, 1)) == 1


def test_content_five_one_one_gives_no_filling():
    # (5,1,1) is not a hook content for a rim 7-hook over (2,2)
    assert lr.lr_coefficient((2, 2), (5, 1, 1), (4, 3, 3, 1)) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_translation_coefficient_is_an_indicator(p):
    import numpy as np
    rng = np.random.default_rng(10 + p)
    for _ in range(10):
        core = random_core(rng, p, 20)
        mus = [mu_index(core, p, i) for i in range(p)]
        for i in range(p):
            for mu in weight1_diagrams(core, p):
                assert lr.hook_translation_coefficient(i, core, mu, p) == (mu == mus[i])


@pytest.mark.parametrize("p", [3, 5])
def test_theta_of_hooks_from_a_box(p):
    for i in range(p):
        assert lr.theta_hook(Partition((1,)), p, i) == {mu_index(Partition((1,)), p, i): 1}


def test_hook_shape_on_empty_core():
    for p in (2, 3, 5):
        for i in range(p):
            assert lr.hook_translation_coefficient(i, (), hook_partition(p, i), p) == 1


small = st.integers(0, 5).flatmap(lambda e: st.sampled_from(enumerate_partitions(e)))


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_column_rule_matches_classical_rule(lam, nu):
    for mu in partitions_containing(lam, nu.weight):
        assert lr.lr_coefficient(lam, nu, mu) == lr.classical_lr_coefficient(lam, nu, mu)


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_conjugation_symmetry(lam, nu):
    for mu in partitions_containing(lam, nu.weight):
        assert lr.lr_coefficient(lam, nu, mu) == lr.lr_coefficient(conjugate(lam), conjugate(nu), conjugate(mu))
        assert lr.lr_coefficient(lam, nu, mu) == lr.lr_coefficient(nu, lam, mu)


@settings(max_examples=40, deadline=None)
@given(small, small, st.integers(1, 4))
def test_dimension_identity(lam, nu, n):
    lhs = schur_dimension(lam, n) * schur_dimension(nu, n)
    rhs = sum(c * schur_dimension(mu, n) for mu, c in lr.tensor_multiplicities(lam, nu).items())
    assert lhs == rhs
